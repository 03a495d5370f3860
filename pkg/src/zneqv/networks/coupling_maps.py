# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import json
import os

from zneqv import zq_dir
from zneqv.errors import ConfigError
from zneqv.topology.create_graph import CouplingGraph, line_graph, fully_connected_graph

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)
coupling_map_path = os.path.join(zq_dir, "networks", "network_files")


def load_coupling_map(filename):
    """
    Loads a coupling graph from a JSON file ``{"vertices": [...], "edges": [[a, b], ...]}``.

    :param filename: path or file-like object
    :type filename: str, file-object
    :return: the coupling graph
    :rtype: CouplingGraph
    """
    if hasattr(filename, "read"):
        data = json.load(filename)
    else:
        if not os.path.isfile(filename):
            raise UserWarning("File %s does not exist!!" % filename)
        with open(filename) as fp:
            data = json.load(fp)
    return CouplingGraph.from_dict(data)


def heavy_hex_27():
    """
    The 27-qubit heavy-hex device graph.

    :return: coupling graph with 27 vertices and 28 edges
    :rtype: CouplingGraph

    :Example:
        >>> len(zneqv.networks.heavy_hex_27().edges)
        28
    """
    return load_coupling_map(os.path.join(coupling_map_path, "heavy_hex_27.json"))


def coupling_map_by_name(name, n=None):
    """
    Resolves a coupling map given by name ("heavy_hex_27", "line", "full") or by file path.
    """
    if name == "heavy_hex_27":
        return heavy_hex_27()
    if name in ("line", "full"):
        if n is None:
            raise ConfigError("The '%s' coupling map needs a qubit count" % name)
        return line_graph(n) if name == "line" else fully_connected_graph(n)
    if isinstance(name, str) and os.path.isfile(name):
        return load_coupling_map(name)
    raise ConfigError("Unknown coupling map '%s'" % name)
