# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np

from zneqv.circuit.gates import MEASURE, BARRIER
from zneqv.constants import MAX_UNITARY_QUBITS
from zneqv.errors import CircuitError

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


def qubit_axes(qubits, n_qubits, offset=0):
    """
    Tensor axes of the given qubits. Basis index bit q (qubit 0 is the least significant bit)
    lives on axis n-1-q of a C-ordered (2,)*n tensor.
    """
    return [offset + n_qubits - 1 - q for q in qubits]


def apply_matrix(tensor, matrix, axes):
    """
    Contracts a k-qubit matrix (first listed qubit most significant) into ``tensor`` along
    ``axes``. Axes beyond those listed are left untouched, so the same routine serves state
    vectors, unitary columns and either side of a density matrix.
    """
    k = len(axes)
    m = np.asarray(matrix).reshape((2,) * (2 * k))
    out = np.tensordot(m, tensor, axes=(list(range(k, 2 * k)), list(axes)))
    return np.moveaxis(out, list(range(k)), list(axes))


def compose_unitary(circuit):
    """
    Multiplies the gate matrices of a circuit in application order.

    :param circuit: circuit without measurements
    :type circuit: Circuit
    :return: 2^n x 2^n unitary, qubit 0 as least significant bit of the basis index
    :rtype: numpy.ndarray

    :Example:
        >>> compose_unitary(Circuit(1, [x(0)]))
        array([[0.+0.j, 1.+0.j],
               [1.+0.j, 0.+0.j]])
    """
    n = circuit.n_qubits
    if n > MAX_UNITARY_QUBITS:
        raise CircuitError("compose_unitary is limited to %d qubits, got %d"
                           % (MAX_UNITARY_QUBITS, n))
    if circuit.has_measurements():
        raise CircuitError("compose_unitary cannot handle measurements")
    dim = 2 ** n
    tensor = np.eye(dim, dtype=complex).reshape((2,) * n + (dim,))
    for g in circuit.gates:
        if g.kind == BARRIER:
            continue
        tensor = apply_matrix(tensor, g.to_matrix(), qubit_axes(g.qubits, n))
    return tensor.reshape(dim, dim)


def statevector(circuit):
    """
    Applies the unitary part of a circuit to |0...0>. Measurements are ignored.
    """
    n = circuit.n_qubits
    if n > MAX_UNITARY_QUBITS:
        raise CircuitError("statevector simulation is limited to %d qubits, got %d"
                           % (MAX_UNITARY_QUBITS, n))
    psi = np.zeros((2,) * n, dtype=complex)
    psi[(0,) * n] = 1.
    for g in circuit.gates:
        if g.kind in (BARRIER, MEASURE):
            continue
        psi = apply_matrix(psi, g.to_matrix(), qubit_axes(g.qubits, n))
    return psi.reshape(-1)


def measurement_order(circuit):
    """
    Returns the classical bit of every qubit as a tuple, or None if the circuit does not measure
    all qubits into distinct classical bits 0..n-1.
    """
    meas = circuit.measurements()
    if not meas:
        return None
    clbits = [None] * circuit.n_qubits
    for g in meas:
        clbits[g.qubits[0]] = g.clbit
    if None in clbits or sorted(clbits) != list(range(circuit.n_qubits)):
        raise CircuitError("Measurements must map every qubit to a distinct classical bit "
                           "0..%d, got %s" % (circuit.n_qubits - 1, clbits))
    return tuple(clbits)


def permute_to_clbits(probabilities, clbits):
    """
    Reorders a probability vector over qubit basis states into classical-bit order.

    :param probabilities: vector of length 2^n indexed by qubit bits
    :type probabilities: numpy.ndarray
    :param clbits: classical bit of every qubit; None keeps the order
    :type clbits: tuple
    :return: vector indexed by classical bits
    :rtype: numpy.ndarray
    """
    if clbits is None or tuple(clbits) == tuple(range(len(clbits))):
        return np.asarray(probabilities)
    n = len(clbits)
    # qubit q sits on axis n-1-q, classical bit c must end up on axis n-1-c
    tensor = np.asarray(probabilities).reshape((2,) * n)
    source = [n - 1 - q for q in range(n)]
    destination = [n - 1 - clbits[q] for q in range(n)]
    return np.moveaxis(tensor, source, destination).reshape(-1)


def phase_invariant_distance(a, b):
    """
    Max-norm distance between two matrices after removing the best global phase.
    """
    overlap = np.vdot(b, a)
    phase = overlap / abs(overlap) if abs(overlap) > 1e-15 else 1.
    return float(np.max(np.abs(a - phase * b)))


def process_fidelity(a, b):
    """
    |tr(a^dagger b)| / dim, insensitive to global phase.
    """
    return float(abs(np.trace(np.asarray(a).conj().T @ np.asarray(b))) / np.asarray(a).shape[0])
