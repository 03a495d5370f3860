# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np

from zneqv.constants import HOP_THRESHOLD, CONFIDENCE_Z, DECISION_PASS, DECISION_FAIL, \
    BOOTSTRAP_RESAMPLES
from zneqv.errors import AnalysisError


def bootstrap_sigma(hop_vector, resamples=BOOTSTRAP_RESAMPLES, rng=None):
    """
    Standard deviation of the means of ``resamples`` resamples (with replacement, full vector
    size) of the per-circuit HOP vector.

    :param hop_vector: per-circuit (extrapolated) HOPs
    :type hop_vector: list, numpy.ndarray
    :param resamples: number of bootstrap resamples
    :type resamples: int, default 100
    :param rng: seed or generator
    :type rng: int, numpy.random.Generator, default None
    :return: sigma
    :rtype: float
    """
    vec = np.asarray(hop_vector, dtype=float)
    if vec.size == 0:
        raise AnalysisError("Cannot bootstrap an empty HOP vector")
    if resamples < 1:
        raise AnalysisError("resamples must be at least 1, got %s" % resamples)
    if np.ptp(vec) == 0.:
        return 0.
    rng = np.random.default_rng(rng)
    index = rng.integers(0, vec.size, size=(int(resamples), vec.size))
    return float(np.std(vec[index].mean(axis=1)))


def evaluate_pass(mean_hop, sigma):
    """
    The benchmark passes iff mean_hop - 2 sigma > 2/3.

    :Example:
        >>> evaluate_pass(0.70, 0.01)
        'pass'
        >>> evaluate_pass(0.70, 0.02)
        'fail'
    """
    if sigma < 0:
        raise AnalysisError("sigma must be non-negative, got %s" % sigma)
    return DECISION_PASS if mean_hop - CONFIDENCE_Z * sigma > HOP_THRESHOLD else DECISION_FAIL


def cumulative_series(hop_vector, resamples=BOOTSTRAP_RESAMPLES, seed=0):
    """
    Running statistics over the first i+1 circuits: (i, mean, 2 sigma). The bootstrap of prefix
    i draws from a generator seeded with (seed, i), so every prefix is reproducible on its own.

    :param hop_vector: per-circuit HOPs in circuit order
    :type hop_vector: list, numpy.ndarray
    :param resamples: bootstrap resamples per prefix
    :type resamples: int, default 100
    :param seed: bootstrap seed
    :type seed: int, default 0
    :return: list of (index, cumulative mean, cumulative 2 sigma)
    :rtype: list
    """
    vec = np.asarray(hop_vector, dtype=float)
    if vec.size == 0:
        raise AnalysisError("Cannot build a cumulative series of an empty HOP vector")
    means = np.cumsum(vec) / np.arange(1, vec.size + 1)
    means[-1] = np.mean(vec)
    series = []
    for i in range(vec.size):
        sigma = bootstrap_sigma(vec[:i + 1], resamples, np.random.default_rng([int(seed), i]))
        series.append((i, float(means[i]), CONFIDENCE_Z * sigma))
    return series
