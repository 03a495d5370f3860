# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np

from zneqv.errors import SimulationError
from zneqv.qv.heavy import index_to_bitstring
from zneqv.sim.density_matrix import measurement_probabilities


def sample_counts(state, shots, readout_flip=0., rng=None):
    """
    Draws measurement counts from a simulated state.

    :param state: simulated state
    :type state: DensityState
    :param shots: number of shots, at least 1
    :type shots: int
    :param readout_flip: symmetric readout bit-flip probability
    :type readout_flip: float, default 0
    :param rng: seed or generator
    :type rng: int, numpy.random.Generator, default None
    :return: bitstring -> count for every observed bitstring, keys sorted
    :rtype: dict
    """
    if int(shots) < 1:
        raise SimulationError("shots must be at least 1, got %s" % shots)
    rng = np.random.default_rng(rng)
    probs = measurement_probabilities(state, readout_flip)
    draws = rng.multinomial(int(shots), probs)
    return {index_to_bitstring(i, state.n): int(draws[i]) for i in np.flatnonzero(draws)}
