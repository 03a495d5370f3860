# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import barrier
from zneqv.folding.fold_plan import FoldPlan, FoldedCircuit, BASIS_LAYERS

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


def invert_layers(layers):
    """
    Inverse of a sequence of layers, again as layers (last layer first, gates reversed).
    """
    return [[g.inverse() for g in reversed(layer)] for layer in reversed(layers)]


def fold_global(circuit, scale_factor):
    """
    Global unitary folding U -> U W^dagger W, W being the last k layers of U with
    k = floor(d (lambda - 1) / 2). Layers are taken from the circuit's layer marks or, without
    marks, one gate per layer. A full-width barrier opens both W^dagger and the repeated W, and
    trailing measurements stay at the end.

    :param circuit: circuit to fold
    :type circuit: Circuit
    :param scale_factor: lambda in [1, 3]
    :type scale_factor: float
    :return: folded circuit with depth d + 2k
    :rtype: FoldedCircuit

    :Example:
        >>> folded = fold_global(generate_qv_circuit(7, 1).circuit, 2.)
        >>> folded.plan.k, folded.circuit.n_layers
        (3, 13)
    """
    layers = circuit.layers()
    plan = FoldPlan.create(len(layers), scale_factor, BASIS_LAYERS)
    if plan.k == 0:
        return FoldedCircuit(circuit, plan)
    w = layers[-plan.k:]
    w_dag = invert_layers(w)
    fence = barrier(*range(circuit.n_qubits))
    w_dag[0] = [fence] + w_dag[0]
    w_again = [list(layer) for layer in w]
    w_again[0] = [fence] + w_again[0]
    folded = Circuit.from_layers(circuit.n_qubits, layers + w_dag + w_again, circuit.tail())
    logger.debug("global folding: d=%d, lambda=%g, k=%d" % (len(layers), scale_factor, plan.k))
    return FoldedCircuit(folded, plan)
