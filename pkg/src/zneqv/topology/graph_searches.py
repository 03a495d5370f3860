# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass

import networkx as nx
import pandas as pd
from networkx.algorithms.isomorphism import GraphMatcher

from zneqv.constants import MAX_SUBGRAPH_SIZE
from zneqv.errors import RoutingError
from zneqv.topology.create_graph import create_nxgraph, CouplingGraph

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgraphClass:
    """
    One isomorphism class of connected induced subgraphs. ``graph`` is the class representative on
    vertices 0..n-1; every embedding maps representative vertex i to ``embedding[i]``.
    """
    index: int
    graph: CouplingGraph
    embeddings: tuple

    @property
    def n(self):
        return len(self.graph)

    def degree_sequence(self):
        graph = create_nxgraph(self.graph)
        return tuple(sorted((d for _, d in graph.degree()), reverse=True))


def connected_vertex_subsets(graph, n):
    """
    All vertex sets of size n that induce a connected subgraph.

    :param graph: networkx graph
    :type graph: networkx.Graph
    :param n: subset size
    :type n: int
    :return: sorted list of sorted vertex tuples
    :rtype: list
    """
    if n < 1:
        return []
    level = {frozenset([v]) for v in graph.nodes}
    for _ in range(n - 1):
        level = {s | {u} for s in level for v in s for u in graph[v] if u not in s}
    return sorted(tuple(sorted(s)) for s in level)


def _relabelled(graph, vertices):
    index = {v: i for i, v in enumerate(vertices)}
    return nx.relabel_nodes(graph.subgraph(vertices), index, copy=True)


def enumerate_subgraph_classes(coupling, n):
    """
    Groups all connected induced n-vertex subgraphs of a coupling graph into isomorphism classes.
    Candidates are bucketed by Weisfeiler-Lehman hash and then separated by an exact isomorphism
    check, so the classes are pairwise non-isomorphic. Each vertex subset contributes exactly one
    embedding.

    :param coupling: the device connectivity
    :type coupling: CouplingGraph, networkx.Graph
    :param n: subgraph size (at most 8)
    :type n: int
    :return: classes ordered by edge count, degree sequence and first embedding
    :rtype: list(SubgraphClass)

    :Example:
        >>> classes = enumerate_subgraph_classes(heavy_hex_27(), 6)
        >>> len(classes)
        3
    """
    if n > MAX_SUBGRAPH_SIZE:
        raise RoutingError("Subgraph enumeration is limited to n <= %d, got %d"
                           % (MAX_SUBGRAPH_SIZE, n))
    graph = coupling if isinstance(coupling, nx.Graph) else create_nxgraph(coupling)
    buckets = {}
    for subset in connected_vertex_subsets(graph, n):
        sub = _relabelled(graph, subset)
        key = nx.weisfeiler_lehman_graph_hash(sub)
        candidates = buckets.setdefault(key, [])
        for cls in candidates:
            matcher = GraphMatcher(cls["graph"], sub)
            if matcher.is_isomorphic():
                cls["embeddings"].append(tuple(subset[matcher.mapping[i]] for i in range(n)))
                break
        else:
            candidates.append({"graph": sub, "embeddings": [tuple(subset)]})
    found = [c for bucket in buckets.values() for c in bucket]

    def sort_key(c):
        degrees = sorted((d for _, d in c["graph"].degree()), reverse=True)
        return c["graph"].number_of_edges(), degrees, c["embeddings"][0]

    classes = []
    for i, c in enumerate(sorted(found, key=sort_key)):
        classes.append(SubgraphClass(i, CouplingGraph.from_nxgraph(c["graph"]),
                                     tuple(c["embeddings"])))
    logger.info("found %d subgraph classes of size %d with %d embeddings"
                % (len(classes), n, sum(len(c.embeddings) for c in classes)))
    return classes


def subgraph_class_table(classes):
    """
    Summarises subgraph classes as a pandas DataFrame (one row per class).
    """
    return pd.DataFrame([{"class": c.index, "n": c.n, "edges": len(c.graph.edges),
                          "degrees": "".join(str(d) for d in c.degree_sequence()),
                          "embeddings": len(c.embeddings),
                          "first_embedding": list(c.embeddings[0])} for c in classes])
