# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np
import pytest

from zneqv.errors import CircuitError
from zneqv.qv.generator import generate_qv_circuit, ideal_distribution
from zneqv.qv.heavy import heavy_set, HeavySet, index_to_bitstring, bitstring_to_index


def test_single_peak():
    hs = heavy_set([0., 0., 0., 1.])
    assert hs.members == frozenset({3})
    assert hs.median == 0.
    assert hs.bitstrings() == ["11"]
    assert list(hs.mask()) == [False, False, False, True]


def test_uniform_distribution_has_no_heavy_outputs():
    hs = heavy_set([0.25] * 4)
    assert len(hs) == 0


def test_even_median_is_mean_of_central_values():
    hs = heavy_set([0.1, 0.2, 0.3, 0.4])
    assert hs.median == pytest.approx(0.25)
    assert hs.members == frozenset({2, 3})


def test_rejects_bad_distributions():
    with pytest.raises(CircuitError):
        heavy_set([0.5, 0.25, 0.25])
    with pytest.raises(CircuitError):
        heavy_set([0.5, 0.6])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generic_circuit_heavy_half(n):
    p = ideal_distribution(generate_qv_circuit(n, 7 * n))
    hs = heavy_set(p)
    assert len(hs) == 2 ** (n - 1)
    assert p[hs.mask()].sum() >= 0.5
    # uniform sampling hop
    assert len(hs) / 2 ** n <= 0.5


def test_bitstring_conversions():
    assert index_to_bitstring(1, 3) == "001"
    assert index_to_bitstring(6, 3) == "110"
    assert bitstring_to_index("110") == 6


def test_dict_roundtrip():
    hs = heavy_set(ideal_distribution(generate_qv_circuit(3, 5)))
    assert HeavySet.from_dict(hs.to_dict()) == hs


@pytest.mark.parametrize("n", [4, pytest.param(5, marks=pytest.mark.slow),
                               pytest.param(6, marks=pytest.mark.slow),
                               pytest.param(7, marks=pytest.mark.slow)])
def test_mean_noiseless_heavy_mass(n):
    rng = np.random.default_rng(n)
    masses = []
    for _ in range(200):
        p = ideal_distribution(generate_qv_circuit(n, rng))
        masses.append(p[heavy_set(p).mask()].sum())
    assert 0.80 <= np.mean(masses) <= 0.89


if __name__ == "__main__":
    pytest.main([__file__])
