# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass

import networkx as nx

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import SU4, SWAP, CX, BARRIER, MEASURE, SINGLE_QUBIT_KINDS, barrier, \
    measure
from zneqv.errors import RoutingError
from zneqv.topology.create_graph import CouplingGraph, create_nxgraph, fully_connected_graph
from zneqv.transpiler.decompose import decompose_su4
from zneqv.transpiler.rebase import rebase_1q, swap_to_cx

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Layout:
    """
    Places logical qubit j on physical vertex ``mapping[j]``. The routed circuit works on local
    qubits 0..n-1, local qubit j standing for ``mapping[j]``.
    """
    mapping: tuple
    subgraph: CouplingGraph

    def __post_init__(self):
        mapping = tuple(int(v) for v in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if len(set(mapping)) != len(mapping):
            raise RoutingError("Layout mapping %s is not injective" % (mapping,))
        if not set(mapping) <= set(self.subgraph.vertices):
            raise RoutingError("Layout mapping %s leaves the subgraph %s"
                               % (mapping, self.subgraph.vertices))

    @property
    def n(self):
        return len(self.mapping)

    def local_graph(self):
        """
        Connectivity between local qubits.
        """
        index = {v: j for j, v in enumerate(self.mapping)}
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((index[a], index[b]) for a, b in self.subgraph.edges
                             if a in index and b in index)
        return graph

    def to_dict(self):
        return {"mapping": list(self.mapping), "subgraph": self.subgraph.to_dict()}

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d["mapping"]), CouplingGraph.from_dict(d["subgraph"]))


def layout_from_embedding(coupling, embedding):
    """
    Layout placing logical qubit j on ``embedding[j]`` within the induced subgraph.
    """
    return Layout(tuple(embedding), coupling.induced(embedding))


def trivial_layout(n):
    """
    All-to-all layout on n qubits.
    """
    return Layout(tuple(range(n)), fully_connected_graph(n))


class _SingleQubitBuffer:
    """
    Collects consecutive single-qubit matrices per qubit and emits them merged.
    """

    def __init__(self, n):
        self.pending = [None] * n

    def push(self, gates):
        for g in gates:
            q = g.qubits[0]
            m = g.to_matrix()
            self.pending[q] = m if self.pending[q] is None else m @ self.pending[q]

    def flush(self, qubits, out):
        for q in qubits:
            if self.pending[q] is not None:
                out.extend(rebase_1q(self.pending[q], q))
                self.pending[q] = None


def route(qv, layout):
    """
    Maps a logical QV circuit onto a layout. SU(4) blocks on non-adjacent qubits are preceded by
    SWAPs along the lexicographically smallest shortest path, every block is decomposed into CX and
    single-qubit natives, and runs of single-qubit gates are merged. Logical qubit q is finally
    measured into classical bit q, so measured bitstrings keep the logical bit order whatever
    permutation the SWAPs left behind.

    :param qv: logical circuit (QvCircuit or Circuit of SU4/SWAP/single-qubit gates)
    :type qv: QvCircuit, Circuit
    :param layout: target layout with a connected subgraph of n vertices
    :type layout: Layout
    :return: native circuit with layer marks and trailing measurements
    :rtype: Circuit
    """
    circuit = getattr(qv, "circuit", qv)
    n = circuit.n_qubits
    if layout.n != n:
        raise RoutingError("Layout places %d qubits, circuit has %d" % (layout.n, n))
    graph = layout.local_graph()
    if not nx.is_connected(graph):
        raise RoutingError("Layout subgraph on %s is disconnected" % (layout.mapping,))
    pos = list(range(n))
    occupant = list(range(n))
    buffer = _SingleQubitBuffer(n)
    layers, n_swaps = [], 0
    for layer in circuit.layers():
        out = []
        for g in layer:
            if g.kind == BARRIER:
                continue
            if g.kind in SINGLE_QUBIT_KINDS:
                buffer.push([g.remap(pos)])
                continue
            if g.kind not in (SU4, SWAP, CX):
                raise RoutingError("Cannot route %s gates" % g.kind)
            a, b = g.qubits
            if not graph.has_edge(pos[a], pos[b]):
                path = min(nx.all_shortest_paths(graph, pos[a], pos[b]))
                for u, v in zip(path[:-2], path[1:-1]):
                    buffer.flush((u, v), out)
                    out.extend(swap_to_cx(u, v))
                    occupant[u], occupant[v] = occupant[v], occupant[u]
                    pos[occupant[u]], pos[occupant[v]] = u, v
                    n_swaps += 1
            pa, pb = pos[a], pos[b]
            if g.kind == SU4:
                gates = decompose_su4(g.matrix, (pa, pb))
            elif g.kind == SWAP:
                gates = swap_to_cx(pa, pb)
            else:
                gates = [g.remap(pos)]
            for h in gates:
                if h.kind == CX:
                    buffer.flush(h.qubits, out)
                    out.append(h)
                else:
                    buffer.push([h])
        buffer.flush(range(n), out)
        layers.append(out)
    tail = [barrier(*range(n))] + [measure(pos[q], q) for q in range(n)]
    logger.debug("routed %d-qubit circuit onto %s with %d SWAPs"
                 % (n, layout.mapping, n_swaps))
    return Circuit.from_layers(n, layers, tail)


def final_positions(routed):
    """
    Local qubit holding each logical qubit at the end of a routed circuit.
    """
    pos = [None] * routed.n_qubits
    for g in routed.measurements():
        pos[g.clbit] = g.qubits[0]
    return tuple(pos)


def check_hardware_conformance(circuit, layout):
    """
    Raises if a CX acts on a pair of local qubits that is not coupled.
    """
    graph = layout.local_graph()
    for g in circuit.gates:
        if g.kind == CX and not graph.has_edge(*g.qubits):
            raise RoutingError("CX on %s is not a coupling of layout %s"
                               % (g.qubits, layout.mapping))
    return True
