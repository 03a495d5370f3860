# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass

import numpy as np

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import su4
from zneqv.circuit.unitary import statevector, measurement_order, permute_to_clbits
from zneqv.constants import MAX_QV_QUBITS
from zneqv.errors import CircuitError
from zneqv.qv.haar import haar_random_su4

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QvCircuit:
    """
    A square model circuit: n layers, each a random relabeling of the qubits followed by
    floor(n/2) Haar-random SU(4) blocks on consecutive pairs of the permuted labels.
    """
    n: int
    circuit: Circuit
    seed: int = None
    layer_permutations: tuple = ()

    @property
    def depth(self):
        return self.circuit.n_layers

    @property
    def blocks_per_layer(self):
        return self.n // 2


def generate_qv_circuit(n, rng):
    """
    Generates a random QV circuit. Passing an integer seed makes the circuit reproducible and
    stores the seed on the result.

    :param n: number of qubits (2..12), also the number of layers
    :type n: int
    :param rng: seed or random generator
    :type rng: int, numpy.random.Generator
    :return: the generated circuit
    :rtype: QvCircuit

    :Example:
        >>> qv = generate_qv_circuit(4, 7)
        >>> qv.circuit.n_layers
        4
    """
    if not isinstance(n, (int, np.integer)) or not 2 <= n <= MAX_QV_QUBITS:
        raise CircuitError("QV circuits are supported for 2 <= n <= %d, got %s"
                           % (MAX_QV_QUBITS, n))
    seed = int(rng) if isinstance(rng, (int, np.integer)) else None
    rng = np.random.default_rng(rng)
    layers, permutations = [], []
    for _ in range(n):
        perm = rng.permutation(n)
        permutations.append(tuple(int(p) for p in perm))
        layer = [su4(haar_random_su4(rng), perm[2 * j], perm[2 * j + 1]) for j in range(n // 2)]
        layers.append(layer)
    logger.debug("generated QV circuit n=%d seed=%s" % (n, seed))
    return QvCircuit(int(n), Circuit.from_layers(n, layers), seed, tuple(permutations))


def ideal_distribution(qv):
    """
    Ideal output distribution p_U(x) = |<x|U|0>|^2 of a QV circuit (or any circuit), computed by
    state vector application. If the circuit measures into classical bits, the distribution is
    indexed by classical bits.

    :param qv: circuit to evaluate
    :type qv: QvCircuit, Circuit
    :return: probability vector of length 2^n
    :rtype: numpy.ndarray
    """
    circuit = qv.circuit if isinstance(qv, QvCircuit) else qv
    probs = np.abs(statevector(circuit)) ** 2
    return permute_to_clbits(probs, measurement_order(circuit))
