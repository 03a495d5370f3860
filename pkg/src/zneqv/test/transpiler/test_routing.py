# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np
import pytest

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import MEASURE, NATIVE_KINDS, cx
from zneqv.errors import RoutingError
from zneqv.networks import heavy_hex_27
from zneqv.qv.generator import generate_qv_circuit, ideal_distribution
from zneqv.topology.create_graph import line_graph, CouplingGraph
from zneqv.topology.graph_searches import enumerate_subgraph_classes
from zneqv.test.test_toolbox import scripted_qv_circuit, SCRIPTED_LINE_CX
from zneqv.transpiler.routing import route, Layout, trivial_layout, layout_from_embedding, \
    final_positions, check_hardware_conformance


def test_all_to_all_inserts_no_swaps():
    qv = generate_qv_circuit(4, 11)
    routed = route(qv, trivial_layout(4))
    assert routed.cx_count() == 24
    assert final_positions(routed) == (0, 1, 2, 3)


def test_line_of_four():
    logical = scripted_qv_circuit()
    layout = Layout((0, 1, 2, 3), line_graph(4))
    routed = route(logical, layout)
    assert check_hardware_conformance(routed, layout)
    assert routed.cx_count() == SCRIPTED_LINE_CX
    assert final_positions(routed) == (0, 2, 3, 1)
    assert np.allclose(ideal_distribution(routed), ideal_distribution(logical), atol=1e-6)
    assert all(g.kind in NATIVE_KINDS for g in routed.gates)
    assert routed.n_layers == 4
    assert [g.clbit for g in routed.measurements()] == [0, 1, 2, 3]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_routing_preserves_distribution(n):
    qv = generate_qv_circuit(n, 300 + n)
    layout = Layout(tuple(range(n)), line_graph(n))
    routed = route(qv, layout)
    check_hardware_conformance(routed, layout)
    assert np.allclose(ideal_distribution(routed), ideal_distribution(qv), atol=1e-6)


def test_heavy_hex_embedding():
    g = heavy_hex_27()
    cls = enumerate_subgraph_classes(g, 5)[0]
    layout = layout_from_embedding(g, cls.embeddings[0])
    qv = generate_qv_circuit(5, 4)
    routed = route(qv, layout)
    assert check_hardware_conformance(routed, layout)
    assert np.allclose(ideal_distribution(routed), ideal_distribution(qv), atol=1e-6)
    assert Layout.from_dict(layout.to_dict()) == layout


def test_disconnected_layout_rejected():
    layout = Layout((0, 1, 2), CouplingGraph((0, 1, 2), ((0, 1),)))
    with pytest.raises(RoutingError):
        route(generate_qv_circuit(3, 0), layout)
    with pytest.raises(RoutingError):
        route(generate_qv_circuit(3, 0), trivial_layout(4))


def test_invalid_layouts():
    with pytest.raises(RoutingError):
        Layout((0, 0), line_graph(2))
    with pytest.raises(RoutingError):
        Layout((0, 5), line_graph(2))


def test_conformance_check_fails_on_uncoupled_cx():
    line = Layout((0, 1, 2), line_graph(3))
    assert check_hardware_conformance(Circuit(3, [cx(0, 1), cx(2, 1)]), line)
    with pytest.raises(RoutingError):
        check_hardware_conformance(Circuit(3, [cx(0, 2)]), line)
    routed = route(generate_qv_circuit(3, 1), trivial_layout(3))
    assert sum(g.kind == MEASURE for g in routed.gates) == 3


if __name__ == "__main__":
    pytest.main([__file__])
