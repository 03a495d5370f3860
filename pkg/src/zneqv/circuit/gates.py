# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass, field

import numpy as np

from zneqv.errors import CircuitError

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

X = "X"
SX = "SX"
SXDG = "SXDG"
RZ = "RZ"
CX = "CX"
SU4 = "SU4"
SWAP = "SWAP"
BARRIER = "BARRIER"
MEASURE = "MEASURE"

GATE_KINDS = (X, SX, SXDG, RZ, CX, SU4, SWAP, BARRIER, MEASURE)
NATIVE_KINDS = frozenset([X, SX, RZ, CX, BARRIER, MEASURE])
SINGLE_QUBIT_KINDS = frozenset([X, SX, SXDG, RZ])
TWO_QUBIT_KINDS = frozenset([CX, SU4, SWAP])
NON_UNITARY_KINDS = frozenset([BARRIER, MEASURE])

UNITARY_TOL = 1e-10

X_MATRIX = np.array([[0, 1], [1, 0]], dtype=complex)
SX_MATRIX = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex)
SXDG_MATRIX = SX_MATRIX.conj().T
CX_MATRIX = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
SWAP_MATRIX = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)


def rz_matrix(theta):
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=complex)


def ry_matrix(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def is_unitary(matrix, tol=UNITARY_TOL):
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return np.max(np.abs(matrix.conj().T @ matrix - np.eye(matrix.shape[0]))) < tol


@dataclass(frozen=True, eq=False)
class Gate:
    """
    A single circuit operation. Multi-qubit matrices are written in the local basis in which the
    first listed qubit is the most significant bit, so ``Gate(CX, (c, t))`` has the textbook CNOT
    matrix.
    """
    kind: str
    qubits: tuple
    angle: float = None
    matrix: np.ndarray = field(default=None, repr=False)
    clbit: int = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise CircuitError("Unknown gate kind %s" % self.kind)
        qubits = tuple(int(q) for q in self.qubits)
        object.__setattr__(self, "qubits", qubits)
        if any(q < 0 for q in qubits):
            raise CircuitError("Negative qubit index in %s gate: %s" % (self.kind, qubits))
        if len(set(qubits)) != len(qubits):
            raise CircuitError("Qubit indices of a %s gate must be distinct, got %s"
                               % (self.kind, qubits))
        if self.kind in SINGLE_QUBIT_KINDS or self.kind == MEASURE:
            expected = 1
        elif self.kind in TWO_QUBIT_KINDS:
            expected = 2
        else:
            expected = None
        if expected is not None and len(qubits) != expected:
            raise CircuitError("A %s gate acts on %d qubit(s), got %s" % (self.kind, expected,
                                                                          qubits))
        if self.kind == BARRIER and not qubits:
            raise CircuitError("A barrier needs at least one qubit")
        if self.kind == RZ:
            if self.angle is None or not np.isfinite(self.angle):
                raise CircuitError("RZ angle must be finite, got %s" % self.angle)
            object.__setattr__(self, "angle", float(self.angle))
        if self.kind == SU4:
            matrix = np.array(self.matrix, dtype=complex)
            if matrix.shape != (4, 4) or not is_unitary(matrix):
                raise CircuitError("SU4 block on qubits %s is not a 4x4 unitary" % (qubits,))
            matrix.setflags(write=False)
            object.__setattr__(self, "matrix", matrix)
        if self.kind == MEASURE:
            if self.clbit is None or int(self.clbit) < 0:
                raise CircuitError("Measurement of qubit %s needs a classical bit" % qubits[0])
            object.__setattr__(self, "clbit", int(self.clbit))

    def __eq__(self, other):
        if not isinstance(other, Gate):
            return NotImplemented
        if (self.kind, self.qubits, self.angle, self.clbit) != \
                (other.kind, other.qubits, other.angle, other.clbit):
            return False
        if self.matrix is None or other.matrix is None:
            return self.matrix is None and other.matrix is None
        return np.array_equal(self.matrix, other.matrix)

    @property
    def is_unitary(self):
        return self.kind not in NON_UNITARY_KINDS

    @property
    def is_native(self):
        return self.kind in NATIVE_KINDS

    def to_matrix(self):
        """
        Returns the local matrix of the gate.

        :return: 2x2 or 4x4 complex matrix
        :rtype: numpy.ndarray
        """
        if self.kind == X:
            return X_MATRIX.copy()
        if self.kind == SX:
            return SX_MATRIX.copy()
        if self.kind == SXDG:
            return SXDG_MATRIX.copy()
        if self.kind == RZ:
            return rz_matrix(self.angle)
        if self.kind == CX:
            return CX_MATRIX.copy()
        if self.kind == SWAP:
            return SWAP_MATRIX.copy()
        if self.kind == SU4:
            return np.array(self.matrix)
        raise CircuitError("%s gates have no matrix" % self.kind)

    def inverse(self):
        if self.kind == SX:
            return Gate(SXDG, self.qubits)
        if self.kind == SXDG:
            return Gate(SX, self.qubits)
        if self.kind == RZ:
            return Gate(RZ, self.qubits, angle=-self.angle)
        if self.kind == SU4:
            return Gate(SU4, self.qubits, matrix=self.matrix.conj().T)
        if self.kind == MEASURE:
            raise CircuitError("Measurements cannot be inverted")
        return self

    def remap(self, mapping):
        """
        Returns a copy acting on ``mapping[q]`` for every qubit q.
        """
        return Gate(self.kind, tuple(mapping[q] for q in self.qubits), angle=self.angle,
                    matrix=self.matrix, clbit=self.clbit)


def x(qubit):
    return Gate(X, (qubit,))


def sx(qubit):
    return Gate(SX, (qubit,))


def sxdg(qubit):
    return Gate(SXDG, (qubit,))


def rz(angle, qubit):
    return Gate(RZ, (qubit,), angle=angle)


def cx(control, target):
    return Gate(CX, (control, target))


def su4(matrix, qubit_a, qubit_b):
    return Gate(SU4, (qubit_a, qubit_b), matrix=matrix)


def swap(qubit_a, qubit_b):
    return Gate(SWAP, (qubit_a, qubit_b))


def barrier(*qubits):
    return Gate(BARRIER, tuple(qubits))


def measure(qubit, clbit):
    return Gate(MEASURE, (qubit,), clbit=clbit)
