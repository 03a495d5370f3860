# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np
from pandapower.auxiliary import ADict

from zneqv.errors import ConfigError
from zneqv.harness.config import init_options
from zneqv.harness.run_experiment import resolve_layout, build_circuit, executable_schedule
from zneqv.sim.density_matrix import simulate, exact_heavy_prob

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


def mean_exact_hop(prepared, noise):
    """
    Mean exact heavy mass of prepared (schedule, heavy set) pairs under a noise model.
    """
    return float(np.mean([exact_heavy_prob(simulate(sched, noise), heavy, noise.readout_flip)
                          for sched, heavy in prepared]))


def calibrate_p2(config, target=(0.55, 0.66), circuits=50, p2_max=0.2, max_iter=40):
    """
    Bisects the two-qubit error p2 until the mean exact lambda = 1 heavy mass of the first
    ``circuits`` circuits of the configuration lies inside ``target``. p1 follows as p2 / 10
    unless the configuration fixes it; readout and idle drift are kept.

    :param config: experiment configuration
    :type config: dict, ExperimentConfig
    :param target: open interval for the raw mean HOP
    :type target: tuple, default (0.55, 0.66)
    :param circuits: number of circuits averaged
    :type circuits: int, default 50
    :param p2_max: upper end of the search interval
    :type p2_max: float, default 0.2
    :param max_iter: bisection steps
    :type max_iter: int, default 40
    :return: ADict with p2, p1, mean_hop and iterations
    :rtype: ADict
    """
    config = init_options(config)
    low_target, high_target = target
    if not 0.5 < low_target < high_target < 1.:
        raise ConfigError("Calibration target must satisfy 0.5 < low < high < 1, got %s"
                          % (target,))
    layout = resolve_layout(config)
    durations = config.duration_model()
    prepared = []
    for i in range(int(circuits)):
        _, heavy, routed = build_circuit(config, i, layout)
        prepared.append((executable_schedule(routed, durations, config["dd_enabled"]), heavy))
    base = config.noise_model()
    scale_p1 = config["noise"]["p1"] is None

    def evaluate(p2):
        return mean_exact_hop(prepared, base.with_p2(p2, scale_p1))

    low, high = 0., float(p2_max)
    hop_low, hop_high = evaluate(low), evaluate(high)
    if hop_low <= low_target:
        raise ConfigError("Even without gate noise the mean HOP is %.4f <= %.4f"
                          % (hop_low, low_target))
    if hop_high >= high_target:
        raise ConfigError("p2 = %g still gives mean HOP %.4f >= %.4f; raise p2_max"
                          % (high, hop_high, high_target))
    p2, hop = high, hop_high
    for iteration in range(1, int(max_iter) + 1):
        p2 = (low + high) / 2.
        hop = evaluate(p2)
        logger.info("calibration step %d: p2=%.6f mean HOP %.4f" % (iteration, p2, hop))
        if low_target < hop < high_target:
            break
        if hop >= high_target:
            low = p2
        else:
            high = p2
    else:
        raise ConfigError("Calibration did not reach %s within %d steps" % (target, max_iter))
    noise = base.with_p2(p2, scale_p1)
    return ADict(p2=p2, p1=noise.p1, mean_hop=hop, iterations=iteration)
