# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np
import pytest

from zneqv.analysis import hop_from_counts, combine_local_ensemble
from zneqv.errors import AnalysisError
from zneqv.folding import fold_local_ensemble
from zneqv.qv.generator import generate_qv_circuit, ideal_distribution
from zneqv.qv.heavy import heavy_set, HeavySet
from zneqv.sim import NoiseModel, simulate, exact_heavy_prob, sample_counts
from zneqv.transpiler.routing import route, trivial_layout


def test_simple_counts():
    heavy = HeavySet(2, frozenset({3}), 0.)
    assert hop_from_counts({"11": 20}, heavy) == 1.
    assert hop_from_counts({"00": 50, "11": 50}, heavy) == 0.5
    assert hop_from_counts({"00": 5, "01": 0}, heavy) == 0.


def test_invalid_counts():
    heavy = HeavySet(2, frozenset({3}), 0.)
    with pytest.raises(AnalysisError):
        hop_from_counts({}, heavy)
    with pytest.raises(AnalysisError):
        hop_from_counts({"00": 0}, heavy)
    with pytest.raises(AnalysisError):
        hop_from_counts({"011": 3}, heavy)


def test_combine_local_ensemble():
    assert combine_local_ensemble([0.6]) == pytest.approx(0.6)
    assert combine_local_ensemble([0.5, 0.7]) == pytest.approx(0.6)
    with pytest.raises(AnalysisError):
        combine_local_ensemble([])


def test_hop_matches_exact_heavy_prob():
    qv = generate_qv_circuit(4, 31)
    heavy = heavy_set(ideal_distribution(qv))
    state = simulate(route(qv, trivial_layout(4)), NoiseModel(p2=0.03))
    exact = exact_heavy_prob(state, heavy)
    shots = 10 ** 5
    hop = hop_from_counts(sample_counts(state, shots, rng=2), heavy)
    assert abs(hop - exact) < 4 * np.sqrt(exact * (1 - exact) / shots)


def test_local_ensemble_average():
    qv = generate_qv_circuit(3, 8)
    heavy = heavy_set(ideal_distribution(qv))
    routed = route(qv, trivial_layout(3))
    noise = NoiseModel(p2=0.04)
    ensemble = fold_local_ensemble(routed, 1.5, 10, 4)
    states = [simulate(f.circuit, noise) for f in ensemble]
    exact = np.mean([exact_heavy_prob(s, heavy) for s in states])
    shots = 2000
    hops = [hop_from_counts(sample_counts(s, shots, rng=i), heavy) for i, s in enumerate(states)]
    assert abs(combine_local_ensemble(hops) - exact) < 4 * np.sqrt(0.25 / (10 * shots))


if __name__ == "__main__":
    pytest.main([__file__])
