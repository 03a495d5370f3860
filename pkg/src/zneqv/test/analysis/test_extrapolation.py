# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import pytest

from zneqv.analysis import extrapolate, extrapolation_combinations, ZneEstimate, \
    ORDER_RICHARDSON
from zneqv.errors import ExtrapolationError, AnalysisError


def test_two_point_line():
    est = extrapolate([(1., 0.64), (1.2, 0.62)])
    assert est.intercept == pytest.approx(0.74, abs=1e-12)
    assert est.order == 1
    assert est.lambdas_used == (1., 1.2)
    assert est.residual_rms == pytest.approx(0., abs=1e-12)


def test_collinear_points():
    est = extrapolate([(1., 0.7), (1.5, 0.65), (2., 0.6)])
    assert est.intercept == pytest.approx(0.8, abs=1e-12)
    assert est.residual_rms == pytest.approx(0., abs=1e-12)
    assert est(1.5) == pytest.approx(0.65)


def test_flat_points():
    est = extrapolate([(1., 0.5), (1.5, 0.5), (2., 0.5)])
    assert est.intercept == pytest.approx(0.5)


def test_no_clipping():
    est = extrapolate([(1., 0.9), (1.2, 0.7)])
    assert est.intercept == pytest.approx(1.9)


def test_affine_equivariance():
    points = [(1., 0.61), (1.2, 0.6), (1.5, 0.57), (2., 0.55)]
    base = extrapolate(points).intercept
    shifted = extrapolate([(lam, hop + 0.1) for lam, hop in points]).intercept
    assert shifted == pytest.approx(base + 0.1)


def test_least_squares_residual():
    est = extrapolate([(1., 0.6), (1.5, 0.6), (2., 0.5)])
    assert est.residual_rms > 0
    assert est.coefficients[0] == pytest.approx(-0.1)


def test_richardson_uses_all_points():
    points = [(1., 0.7), (1.5, 0.64), (2., 0.6)]
    est = extrapolate(points, ORDER_RICHARDSON)
    assert est.order == 2
    assert est.residual_rms == pytest.approx(0., abs=1e-10)
    assert all(est(lam) == pytest.approx(hop) for lam, hop in points)


def test_insufficient_points():
    with pytest.raises(ExtrapolationError):
        extrapolate([(1., 0.7)])
    with pytest.raises(ExtrapolationError):
        extrapolate([(1., 0.7), (1., 0.69)])
    with pytest.raises(ExtrapolationError):
        extrapolate([(1., 0.7), (1.5, 0.6)], order=2)
    with pytest.raises(ExtrapolationError):
        extrapolate([(0.5, 0.7), (1., 0.6)])
    with pytest.raises(AnalysisError):
        extrapolate([])


def test_estimate_dict_roundtrip():
    est = extrapolate([(1., 0.64), (1.2, 0.62), (2., 0.55)])
    assert ZneEstimate.from_dict(est.to_dict()) == est


def test_combinations():
    assert extrapolation_combinations([1., 1.2, 1.5]) == [(1., 1.2), (1., 1.5), (1., 1.2, 1.5)]
    combos = extrapolation_combinations([1., 1.2, 1.5, 1.8, 2.])
    assert len(combos) == 15
    assert len(extrapolation_combinations([1., 1.2, 1.5, 1.8, 2.], order=2)) == 11
    with pytest.raises(ExtrapolationError):
        extrapolation_combinations([1.2, 1.5])


if __name__ == "__main__":
    pytest.main([__file__])
