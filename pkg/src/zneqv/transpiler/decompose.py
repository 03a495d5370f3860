# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import SXDG, SU4, SWAP, CX_MATRIX, SWAP_MATRIX, cx, rz, sx, is_unitary, \
    rz_matrix, ry_matrix
from zneqv.circuit.unitary import compose_unitary, phase_invariant_distance
from zneqv.errors import DecompositionError
from zneqv.transpiler.rebase import rebase_1q, swap_to_cx

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

# magic basis: E^dagger (A (x) B) E is real orthogonal for A, B in SU(2)
E = np.array([[1, 1j, 0, 0], [0, 0, 1j, 1], [0, 0, 1j, -1], [1, -1j, 0, 0]]) / np.sqrt(2)
E_DAG = E.conj().T
CNOT01 = CX_MATRIX
CNOT10 = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)

CLASS_TOL = 1e-7
RECONSTRUCTION_TOL = 1e-7
_MATCH_TOL = 1e-6
# weight of the imaginary part when diagonalising gamma with a single real eigh
_IMAG_WEIGHT = 1. / np.pi


def to_su4(matrix):
    det = np.linalg.det(matrix)
    return matrix * np.exp(-1j * np.angle(det) / 4)


def _gamma(matrix):
    u = E_DAG @ matrix @ E
    return u @ u.T


def makhlin_invariants(matrix):
    """
    Local invariants (G1, G2) of a two-qubit gate. Two gates are equal up to single-qubit gates
    on either side iff their invariants agree; CX gives (0, 1) and the identity (1, 3).

    :param matrix: 4x4 unitary
    :type matrix: numpy.ndarray
    :return: complex G1 and real G2
    :rtype: tuple
    """
    matrix = np.asarray(matrix, dtype=complex)
    u = E_DAG @ matrix @ E
    m = u.T @ u
    det = np.linalg.det(matrix)
    tr = np.trace(m)
    g1 = tr ** 2 / (16 * det)
    g2 = (tr ** 2 - np.trace(m @ m)) / (4 * det)
    return complex(g1), float(np.real(g2))


def cnot_count_class(matrix):
    """
    Minimal number of CX gates needed for a two-qubit unitary, read off the spectrum of
    gamma = (E^dagger U E)(E^dagger U E)^T.

    :param matrix: 4x4 unitary
    :type matrix: numpy.ndarray
    :return: 0, 1, 2 or 3
    :rtype: int
    """
    g = _gamma(to_su4(np.asarray(matrix, dtype=complex)))
    tr = np.trace(g)
    if abs(tr.imag) < CLASS_TOL and abs(abs(tr.real) - 4) < CLASS_TOL:
        return 0
    g2 = g @ g
    if abs(tr) < CLASS_TOL and np.max(np.abs(g2 - g2[0, 0] * np.eye(4))) < CLASS_TOL:
        return 1
    if abs(tr.imag) < CLASS_TOL:
        return 2
    return 3


def kron_factors(matrix):
    """
    Splits A (x) B into A and B (up to a shared scalar) through a rank-one SVD of the reshuffled
    matrix.
    """
    r = np.asarray(matrix).reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    u, s, vh = np.linalg.svd(r)
    if s[1] > 1e-6 * s[0]:
        raise DecompositionError("Matrix is not a tensor product (singular values %s)" % s)
    scale = np.sqrt(s[0])
    return scale * u[:, 0].reshape(2, 2), scale * vh[0, :].reshape(2, 2)


def _real_eigenbasis(gamma):
    _, p = np.linalg.eigh(gamma.real + _IMAG_WEIGHT * gamma.imag)
    if np.linalg.det(p) < 0:
        p[:, 3] *= -1
    return p


def _local_prefactors(target, v):
    """
    Finds A, B, C, D with target = (A (x) B) v (C (x) D), for target and v in SU(4) with the same
    local invariants. Returns None if the spectra of the two gamma matrices do not match.
    """
    u = E_DAG @ target @ E
    w = E_DAG @ v @ E
    gu, gv = u @ u.T, w @ w.T
    p, q = _real_eigenbasis(gu), _real_eigenbasis(gv)
    du, dv = np.diag(p.T @ gu @ p), np.diag(q.T @ gv @ q)
    free, order = list(range(4)), []
    for value in du:
        j = min(free, key=lambda k: abs(dv[k] - value))
        if abs(dv[j] - value) > _MATCH_TOL:
            return None
        order.append(j)
        free.remove(j)
    q = q[:, order]
    if np.linalg.det(q) < 0:
        q[:, 3] *= -1
    g = p @ q.T
    h = w.conj().T @ g.T @ u
    a, b = kron_factors(E @ g @ E_DAG)
    c, d = kron_factors(E @ h @ E_DAG)
    return a, b, c, d


def _three_cnot_core(swap_u):
    angles = np.sort(np.angle(np.linalg.eigvals(_gamma(swap_u))))
    x_, y_, z_ = angles[0], angles[1], angles[2]
    alpha, beta, delta = (x_ + y_) / 2, (x_ + z_) / 2, (z_ + y_) / 2
    v = np.eye(4, dtype=complex)
    for mat in (CNOT10, np.kron(rz_matrix(delta), ry_matrix(beta)), CNOT01,
                np.kron(np.eye(2), ry_matrix(alpha)), CNOT10, SWAP_MATRIX):
        v = mat @ v
    ops = [("cx", 1, 0), ("u", 0, rz_matrix(delta)), ("u", 1, ry_matrix(beta)), ("cx", 0, 1),
           ("u", 1, ry_matrix(alpha)), ("cx", 1, 0)]
    return v, ops


def _one_cnot_core(_):
    return SWAP_MATRIX @ CNOT01, [("cx", 0, 1)]


def _emit(ops):
    """
    Turns a list of ("u", wire, 2x2) and ("cx", control, target) entries on local wires into
    native gates. Wire 0 is the more significant qubit, which is qubit 1 of the local circuit.
    """
    local = {0: 1, 1: 0}
    pending = {0: np.eye(2, dtype=complex), 1: np.eye(2, dtype=complex)}
    gates = []

    def flush(wire):
        gates.extend(rebase_1q(pending[wire], local[wire]))
        pending[wire] = np.eye(2, dtype=complex)

    for op in ops:
        if op[0] == "u":
            pending[op[1]] = op[2] @ pending[op[1]]
        else:
            flush(op[1])
            flush(op[2])
            gates.append(cx(local[op[1]], local[op[2]]))
    flush(0)
    flush(1)
    return gates


def _decompose_with_core(m, core):
    """
    Writes m as e^{i phi} SWAP (A (x) B) v (C (x) D) with v = SWAP * core gates, trying both
    SU(4) representatives of the phase class of m.
    """
    for phase in (1., 1j):
        swap_u = np.exp(0.25j * np.pi) * SWAP_MATRIX @ (phase * m)
        v, core_ops = core(swap_u)
        factors = _local_prefactors(swap_u, v)
        if factors is None:
            continue
        a, b, c, d = factors
        # SWAP (A (x) B) SWAP = B (x) A
        return [("u", 0, c), ("u", 1, d)] + core_ops + [("u", 0, b), ("u", 1, a)]
    return None


def decompose_su4(matrix, qubits=(0, 1)):
    """
    Decomposes a two-qubit unitary into at most three CX gates plus RZ/SX/X gates. The number of
    CX gates follows from the local-invariant class of the input (0, 1 or 3; the two-CX class is
    synthesised with three). The result is checked against the input up to global phase.

    :param matrix: 4x4 unitary, first qubit most significant
    :type matrix: numpy.ndarray
    :param qubits: the two qubits the block acts on
    :type qubits: tuple
    :return: native gates in application order
    :rtype: list(Gate)

    :Example:
        >>> gates = decompose_su4(CX_MATRIX, (2, 5))
        >>> [g.kind for g in gates].count("CX")
        1
    """
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (4, 4) or not is_unitary(m, 1e-8):
        raise DecompositionError("decompose_su4 expects a 4x4 unitary")
    m = to_su4(m)
    n_cx = cnot_count_class(m)
    ops = None
    if n_cx == 0:
        a, b = kron_factors(m)
        ops = [("u", 0, a / np.sqrt(np.linalg.det(a))), ("u", 1, b / np.sqrt(np.linalg.det(b)))]
    elif n_cx == 1:
        ops = _decompose_with_core(m, _one_cnot_core)
    if ops is None:
        ops = _decompose_with_core(m, _three_cnot_core)
    if ops is None:
        raise DecompositionError("No local prefactors found for the given two-qubit unitary")
    gates = _emit(ops)
    error = phase_invariant_distance(compose_unitary(Circuit(2, gates)), m)
    if error > RECONSTRUCTION_TOL:
        raise DecompositionError("Two-qubit decomposition error %.3e exceeds %.0e"
                                 % (error, RECONSTRUCTION_TOL))
    mapping = {1: qubits[0], 0: qubits[1]}
    return [g.remap(mapping) for g in gates]


def rebase_only(circuit):
    """
    Lowers residual non-native gates (SU4 blocks, SWAPs and SX inverses) to the native set without
    any optimisation, so folded gate pairs survive. Native gates pass through untouched and layer
    marks are shifted along.

    :param circuit: circuit, possibly folded
    :type circuit: Circuit
    :return: native circuit
    :rtype: Circuit
    """
    if all(g.is_native for g in circuit.gates):
        return circuit
    gates, offsets = [], []
    for g in circuit.gates:
        offsets.append(len(gates))
        if g.kind == SXDG:
            q = g.qubits[0]
            gates.extend([rz(np.pi, q), sx(q), rz(np.pi, q)])
        elif g.kind == SWAP:
            gates.extend(swap_to_cx(*g.qubits))
        elif g.kind == SU4:
            gates.extend(decompose_su4(g.matrix, g.qubits))
        else:
            gates.append(g)
    offsets.append(len(gates))
    marks = None
    if circuit.layer_marks is not None:
        marks = []
        for b in circuit.layer_marks:
            if not marks or offsets[b] > marks[-1]:
                marks.append(offsets[b])
        marks = tuple(marks)
    logger.debug("rebase_only: %d -> %d gates" % (len(circuit.gates), len(gates)))
    return Circuit(circuit.n_qubits, gates, marks)
