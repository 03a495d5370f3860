# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np

from zneqv.errors import AnalysisError
from zneqv.qv.heavy import bitstring_to_index


def hop_from_counts(counts, heavy):
    """
    Heavy output proportion: fraction of shots that landed in the heavy set.

    :param counts: bitstring -> count (classical bit 0 rightmost)
    :type counts: dict
    :param heavy: heavy set of the ideal circuit
    :type heavy: HeavySet
    :return: fraction in [0, 1]
    :rtype: float

    :Example:
        >>> hop_from_counts({"00": 50, "11": 50}, HeavySet(2, frozenset([3]), 0.))
        0.5
    """
    if not counts:
        raise AnalysisError("No counts given")
    total = 0
    heavy_shots = 0
    for bits, c in counts.items():
        if len(bits) != heavy.n:
            raise AnalysisError("Bitstring %s does not have %d bits" % (bits, heavy.n))
        total += int(c)
        if bitstring_to_index(bits) in heavy.members:
            heavy_shots += int(c)
    if total <= 0:
        raise AnalysisError("Counts contain zero shots")
    return heavy_shots / total


def combine_local_ensemble(hops):
    """
    Averages the HOPs of the random local-folding instances at one scale factor.
    """
    if len(hops) == 0:
        raise AnalysisError("Cannot combine an empty ensemble")
    return float(np.mean(hops))
