# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np
import pytest

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import X, SX, RZ, X_MATRIX, rz, sx, x
from zneqv.circuit.unitary import compose_unitary, phase_invariant_distance
from zneqv.errors import DecompositionError
from zneqv.qv.haar import haar_random_unitary
from zneqv.transpiler.rebase import rebase_1q, normalize_angle, swap_to_cx, single_qubit_matrix


def test_identity_is_empty():
    assert rebase_1q(np.eye(2)) == []
    assert rebase_1q(np.exp(0.4j) * np.eye(2)) == []


def test_x_shortcut():
    gates = rebase_1q(X_MATRIX, 3)
    assert [g.kind for g in gates] == [X]
    assert gates[0].qubits == (3,)


def test_diagonal_becomes_single_rz():
    gates = rebase_1q([rz(0.3, 0), rz(0.4, 0)])
    assert [g.kind for g in gates] == [RZ]
    assert gates[0].angle == pytest.approx(0.7)


def test_random_unitaries():
    rng = np.random.default_rng(17)
    for _ in range(100):
        u = haar_random_unitary(2, rng)
        gates = rebase_1q(u)
        assert [g.kind for g in gates if g.kind != RZ] == [SX, SX]
        assert len(gates) <= 5
        assert phase_invariant_distance(compose_unitary(Circuit(1, gates)), u) < 1e-9


def test_gate_run_input():
    run = [sx(0), rz(1.1, 0), x(0), sx(0), rz(-0.2, 0)]
    gates = rebase_1q(run)
    assert phase_invariant_distance(compose_unitary(Circuit(1, gates)),
                                    single_qubit_matrix(run)) < 1e-9


def test_rejects_non_unitary():
    with pytest.raises(DecompositionError):
        rebase_1q(np.array([[1, 1], [0, 1]]))


def test_normalize_angle():
    assert normalize_angle(3 * np.pi) == pytest.approx(np.pi)
    assert normalize_angle(-np.pi) == pytest.approx(np.pi)
    assert normalize_angle(2 * np.pi + 0.5) == pytest.approx(0.5)


def test_swap_to_cx():
    gates = swap_to_cx(0, 1)
    assert [g.qubits for g in gates] == [(0, 1), (1, 0), (0, 1)]


if __name__ == "__main__":
    pytest.main([__file__])
