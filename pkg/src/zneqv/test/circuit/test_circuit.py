# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np
import pytest

from zneqv.circuit.circuit import Circuit, gate_counts
from zneqv.circuit.gates import Gate, CX, SU4, RZ, MEASURE, SXDG, x, sx, sxdg, rz, cx, su4, \
    swap, barrier, measure
from zneqv.errors import CircuitError


@pytest.mark.parametrize("build", [
    lambda: cx(0, 0),
    lambda: Gate(CX, (0,)),
    lambda: rz(np.nan, 0),
    lambda: Gate(MEASURE, (0,)),
    lambda: su4(np.ones((4, 4)), 0, 1),
    lambda: Gate("H", (0,)),
    lambda: barrier(),
])
def test_invalid_gates(build):
    with pytest.raises(CircuitError):
        build()


def test_gate_inverse():
    assert sx(1).inverse() == sxdg(1)
    assert sxdg(1).inverse() == sx(1)
    assert rz(0.3, 0).inverse().angle == -0.3
    assert cx(0, 1).inverse() == cx(0, 1)
    with pytest.raises(CircuitError):
        measure(0, 0).inverse()


def test_su4_matrix_read_only_and_inverse():
    m = np.kron(np.array([[0, 1], [1, 0]]), np.eye(2))
    g = su4(m, 0, 1)
    with pytest.raises(ValueError):
        g.matrix[0, 0] = 2
    assert np.allclose(g.inverse().to_matrix() @ g.to_matrix(), np.eye(4))


def test_gate_remap():
    g = cx(0, 1).remap([3, 2])
    assert g.qubits == (3, 2)
    assert rz(0.5, 1).remap({1: 4}) == rz(0.5, 4)


def test_circuit_validation():
    with pytest.raises(CircuitError):
        Circuit(2, [cx(0, 2)])
    with pytest.raises(CircuitError):
        Circuit(2, [measure(0, 0), x(1)])
    with pytest.raises(CircuitError):
        Circuit(2, [x(0), x(1)], layer_marks=(1, 2))
    with pytest.raises(CircuitError):
        Circuit(2, [x(0), x(1)], layer_marks=(0, 1, 1))
    with pytest.raises(CircuitError):
        Circuit(2, [x(0), x(1)], layer_marks=(0, 1))
    # barriers and measurements may follow the last mark
    c = Circuit(2, [x(0), barrier(0, 1), measure(0, 0), measure(1, 1)], layer_marks=(0, 1))
    assert c.n_layers == 1
    assert c.tail_start() == 1


def test_layers_without_marks():
    c = Circuit(2, [x(0), barrier(0, 1), cx(0, 1), measure(0, 0), measure(1, 1)])
    layers = c.layers()
    assert len(layers) == 2
    assert layers[1][0].kind == "BARRIER"
    assert c.tail() == [measure(0, 0), measure(1, 1)]
    assert c.unitary_part().has_measurements() is False


def test_from_layers_skips_empty_layers():
    c = Circuit.from_layers(2, [[x(0)], [], [cx(0, 1), sx(1)]], [measure(0, 0), measure(1, 1)])
    assert c.layer_marks == (0, 1, 3)
    assert c.n_layers == 2
    assert [len(layer) for layer in c.layers()] == [1, 2]
    assert c.cx_count() == 1


def test_gate_counts():
    c = Circuit(2, [x(0), sx(1), sxdg(1), rz(0.1, 0), cx(0, 1), swap(0, 1), measure(0, 0)])
    counts = gate_counts(c)
    assert counts[CX] == 1
    assert counts[SXDG] == 1
    assert counts[RZ] == 1
    assert counts[SU4] == 0
    assert sum(counts.values()) == len(c)


if __name__ == "__main__":
    pytest.main([__file__])
