# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import pandas as pd

from zneqv.circuit.circuit import gate_counts
from zneqv.harness.config import init_options
from zneqv.harness.run_experiment import resolve_layout, build_circuit, scaled_circuits
from zneqv.transpiler.decompose import rebase_only

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


def set_logger_level_zneqv(level):
    """
    Set logger level from outside to reduce/extend the zneqv printout.

    :param level: levels according to 'logging' (i.e. DEBUG, INFO, WARNING, ERROR and CRITICAL)
    :type level: str
    :return: No output

    EXAMPLE:
        set_logger_level_zneqv('WARNING')

    """
    logging.getLogger("zneqv").setLevel(level)


def gate_count_table(config, circuit_id=0):
    """
    Gate counts, layers and CX counts of every executed variant of one benchmark circuit after
    rebasing, one row per (scale factor, instance).

    :param config: experiment configuration
    :type config: dict, ExperimentConfig
    :param circuit_id: circuit index
    :type circuit_id: int, default 0
    :return: table of gate counts
    :rtype: pandas.DataFrame
    """
    config = init_options(config)
    _, _, routed = build_circuit(config, circuit_id, resolve_layout(config))
    rows = []
    for lam, circuits in scaled_circuits(config, circuit_id, routed):
        for instance, circuit in enumerate(circuits):
            native = rebase_only(circuit)
            row = {"lambda": lam, "instance": instance, "layers": native.n_layers}
            row.update(gate_counts(native))
            rows.append(row)
    return pd.DataFrame(rows)
