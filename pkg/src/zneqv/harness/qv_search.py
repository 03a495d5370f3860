# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from zneqv.constants import DECISION_PASS, MAX_SIM_QUBITS
from zneqv.errors import ConfigError
from zneqv.harness.config import init_options, default_options
from zneqv.harness.run_experiment import run_experiment

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


def effective_qv_search(config, n_min, n_max, mitigated=True, out_root="runs", workers=None):
    """
    Runs the benchmark for n = n_min, n_min + 1, ... and returns the largest n that passes. The
    search stops at the first failing n. An explicit layout mapping only applies to its own
    width; other widths use the default subgraph selection.

    :param config: template configuration, its ``n`` is ignored
    :type config: dict, ExperimentConfig
    :param n_min: smallest width
    :type n_min: int
    :param n_max: largest width, at most 10
    :type n_max: int
    :param mitigated: judge the zero-noise estimate (True) or the raw lambda = 1 HOPs (False)
    :type mitigated: bool, default True
    :return: largest passing n, None if n_min fails; the reports per n
    :rtype: tuple

    :Example:
        >>> effective_qv_search({"num_circuits": 50}, 2, 4)[0]
        4
    """
    if not 2 <= n_min <= n_max <= MAX_SIM_QUBITS:
        raise ConfigError("Need 2 <= n_min <= n_max <= %d, got %s and %s"
                          % (MAX_SIM_QUBITS, n_min, n_max))
    template = dict(config or {})
    best, reports = None, {}
    for n in range(n_min, n_max + 1):
        opts = dict(template, n=n)
        layout = opts.get("layout", {})
        if "mapping" in layout and len(layout["mapping"]) != n:
            opts["layout"] = dict(default_options["layout"])
        report = run_experiment(init_options(opts), out_root=out_root, workers=workers)
        reports[n] = report
        decision = report["decision"] if mitigated else report["raw_decision"]
        logger.info("n=%d: %s" % (n, decision))
        if decision != DECISION_PASS:
            break
        best = n
    return best, reports
