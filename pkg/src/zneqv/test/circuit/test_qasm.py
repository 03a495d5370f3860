# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import math

import numpy as np
import pytest

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import CX, x, rz, cx, su4, measure, barrier
from zneqv.circuit.qasm import qasm_export, qasm_import, format_angle, parse_angle
from zneqv.errors import CircuitError, QasmParseError
from zneqv.test.test_toolbox import random_native_gates, scripted_qv_circuit, SCRIPTED_LINE_CX
from zneqv.topology.create_graph import line_graph
from zneqv.transpiler.routing import route, Layout, check_hardware_conformance


def test_export_format():
    text = qasm_export(Circuit(2, [rz(math.pi / 2, 0), cx(0, 1), measure(0, 0), measure(1, 1)]))
    assert text == ('OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[2];\ncreg c[2];\n'
                    'rz(pi/2) q[0];\ncx q[0],q[1];\nmeasure q[0] -> c[0];\n'
                    'measure q[1] -> c[1];\n')


@pytest.mark.parametrize("angle, text", [(math.pi, "pi"), (-3 * math.pi / 4, "-3*pi/4"),
                                         (math.pi / 4, "pi/4"), (2 * math.pi, "2*pi"),
                                         (0., "0")])
def test_symbolic_angles(angle, text):
    assert format_angle(angle) == text
    assert parse_angle(text) == angle


def test_round_trip_is_lossless():
    rng = np.random.default_rng(11)
    for n in (1, 3, 5):
        gates = random_native_gates(n, 40, rng) + [barrier(*range(n))] \
            + [measure(q, n - 1 - q) for q in range(n)]
        circuit = Circuit(n, gates)
        text = qasm_export(circuit)
        back = qasm_import(text)
        assert back.n_qubits == n
        assert back.gates == circuit.gates
        assert qasm_export(back) == text


def test_export_rejects_non_native():
    with pytest.raises(CircuitError):
        qasm_export(Circuit(2, [su4(np.eye(4), 0, 1)]))


def test_unknown_gate_reports_position():
    text = 'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[2];\nh q[0];\n'
    with pytest.raises(QasmParseError) as err:
        qasm_import(text)
    assert err.value.line == 4
    assert "Unknown gate 'h'" in str(err.value)


@pytest.mark.parametrize("body", ["x q[2];", "cx q[0],q[0];", "rz q[0];", "rz(pi/0) q[0];",
                                  "measure q[0];"])
def test_malformed_statements(body):
    text = 'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[2];\ncreg c[2];\n' + body + "\n"
    with pytest.raises(QasmParseError):
        qasm_import(text)


def test_id_gates_and_comments_are_dropped():
    text = 'OPENQASM 2.0;\n// comment\nqreg q[1];\nid q[0];\nx q[0];\n'
    assert qasm_import(text).gates == (x(0),)


def test_routed_circuit_file(tmp_path):
    layout = Layout((0, 1, 2, 3), line_graph(4))
    text = qasm_export(route(scripted_qv_circuit(), layout))
    path = str(tmp_path / "qv_n4_line.qasm")
    with open(path, "w") as fp:
        fp.write(text)
    with open(path) as fp:
        circuit = qasm_import(fp.read())
    assert circuit.n_qubits == 4
    assert sum(1 for g in circuit.gates if g.kind == CX) == SCRIPTED_LINE_CX
    assert len(circuit.measurements()) == 4
    assert check_hardware_conformance(circuit, layout)
    assert qasm_export(circuit) == text


if __name__ == "__main__":
    pytest.main([__file__])
