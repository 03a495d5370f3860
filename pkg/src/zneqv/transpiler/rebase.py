# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np

from zneqv.circuit.gates import Gate, X_MATRIX, SX_MATRIX, x, sx, rz, cx, is_unitary
from zneqv.circuit.unitary import phase_invariant_distance
from zneqv.errors import DecompositionError

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

ANGLE_EPS = 1e-12
_SHORTCUT_TOL = 1e-12


def normalize_angle(angle):
    """
    Maps an angle into (-pi, pi].
    """
    angle = float(np.mod(angle + np.pi, 2 * np.pi) - np.pi)
    return np.pi if angle <= -np.pi + ANGLE_EPS else angle


def _rz_or_nothing(angle, qubit):
    angle = normalize_angle(angle)
    return [] if abs(angle) < ANGLE_EPS else [rz(angle, qubit)]


def single_qubit_matrix(gates):
    """
    Product of a run of single-qubit gates in application order.
    """
    m = np.eye(2, dtype=complex)
    for g in gates:
        m = g.to_matrix() @ m
    return m


def zyz_angles(matrix):
    """
    Angles (theta, phi, lam) with matrix = e^{i alpha} RZ(phi) RY(theta) RZ(lam).
    """
    v = matrix / np.sqrt(np.linalg.det(matrix))
    theta = 2 * np.arctan2(abs(v[1, 0]), abs(v[0, 0]))
    if abs(v[1, 0]) < _SHORTCUT_TOL:
        phi_plus_lam, phi_minus_lam = 2 * np.angle(v[1, 1]), 0.
    elif abs(v[0, 0]) < _SHORTCUT_TOL:
        phi_plus_lam, phi_minus_lam = 0., 2 * np.angle(v[1, 0])
    else:
        phi_plus_lam, phi_minus_lam = 2 * np.angle(v[1, 1]), 2 * np.angle(v[1, 0])
    phi = (phi_plus_lam + phi_minus_lam) / 2
    lam = (phi_plus_lam - phi_minus_lam) / 2
    return theta, phi, lam


def rebase_1q(unitary, qubit=0):
    """
    Rewrites a single-qubit unitary (or a run of single-qubit gates) as RZ-SX-RZ-SX-RZ, with
    shortcuts for the identity, pure Z rotations and X (and SX). RZ gates with vanishing angle are
    dropped.

    :param unitary: 2x2 unitary or list of single-qubit gates
    :type unitary: numpy.ndarray, list
    :param qubit: qubit the output acts on
    :type qubit: int
    :return: native gates in application order
    :rtype: list(Gate)
    """
    if isinstance(unitary, (list, tuple)) and all(isinstance(g, Gate) for g in unitary):
        unitary = single_qubit_matrix(unitary)
    m = np.asarray(unitary, dtype=complex)
    if m.shape != (2, 2) or not is_unitary(m, 1e-8):
        raise DecompositionError("rebase_1q expects a 2x2 unitary")
    if abs(m[1, 0]) < _SHORTCUT_TOL and abs(m[0, 1]) < _SHORTCUT_TOL:
        return _rz_or_nothing(np.angle(m[1, 1]) - np.angle(m[0, 0]), qubit)
    if phase_invariant_distance(m, X_MATRIX) < _SHORTCUT_TOL:
        return [x(qubit)]
    if phase_invariant_distance(m, SX_MATRIX) < _SHORTCUT_TOL:
        return [sx(qubit)]
    theta, phi, lam = zyz_angles(m)
    return _rz_or_nothing(lam, qubit) + [sx(qubit)] + _rz_or_nothing(theta + np.pi, qubit) + \
        [sx(qubit)] + _rz_or_nothing(phi + np.pi, qubit)


def swap_to_cx(a, b):
    return [cx(a, b), cx(b, a), cx(a, b)]

