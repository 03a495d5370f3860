# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass

import networkx as nx

from zneqv.errors import RoutingError

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CouplingGraph:
    """
    Undirected device connectivity. Edges are stored as sorted pairs in sorted order.
    """
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        vertices = tuple(sorted(int(v) for v in self.vertices))
        if len(set(vertices)) != len(vertices):
            raise RoutingError("Duplicate vertices in coupling graph")
        edges = set()
        vset = set(vertices)
        for a, b in self.edges:
            a, b = int(a), int(b)
            if a == b:
                raise RoutingError("Self-loop on vertex %d" % a)
            if a not in vset or b not in vset:
                raise RoutingError("Edge (%d, %d) refers to an unknown vertex" % (a, b))
            edges.add((min(a, b), max(a, b)))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    def __len__(self):
        return len(self.vertices)

    def has_edge(self, a, b):
        return (min(a, b), max(a, b)) in set(self.edges)

    def is_connected(self):
        return len(self.vertices) > 0 and nx.is_connected(create_nxgraph(self))

    def induced(self, vertices):
        vset = set(vertices)
        return CouplingGraph(tuple(vset), tuple(e for e in self.edges
                                                if e[0] in vset and e[1] in vset))

    def to_dict(self):
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, d):
        edges = [tuple(e) for e in d["edges"]]
        vertices = d.get("vertices")
        if vertices is None:
            vertices = sorted({v for e in edges for v in e})
        return cls(tuple(vertices), tuple(edges))

    @classmethod
    def from_nxgraph(cls, graph):
        return cls(tuple(graph.nodes), tuple(graph.edges))


def create_nxgraph(coupling):
    """
    Converts a coupling graph into a networkx graph.

    :param coupling: the device connectivity
    :type coupling: CouplingGraph
    :return: undirected graph with one node per physical qubit
    :rtype: networkx.Graph
    """
    graph = nx.Graph()
    graph.add_nodes_from(coupling.vertices)
    graph.add_edges_from(coupling.edges)
    return graph


def line_graph(n):
    return CouplingGraph(tuple(range(n)), tuple((i, i + 1) for i in range(n - 1)))


def fully_connected_graph(n):
    return CouplingGraph(tuple(range(n)), tuple((i, j) for i in range(n)
                                                for j in range(i + 1, n)))
