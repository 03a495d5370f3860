# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import pytest

from zneqv.analysis import LambdaResult, QvRecord, lambda_means, ensemble_combination_table
from zneqv.errors import AnalysisError
from zneqv.qv.heavy import HeavySet

HEAVY = HeavySet(2, frozenset({3}), 0.1)


def _record(circuit_id, hops):
    per_lambda = {lam: LambdaResult(lam, hop, 100, 1) for lam, hop in hops.items()}
    return QvRecord(circuit_id, 2, HEAVY, per_lambda)


def test_lambda_result_from_counts():
    res = LambdaResult.from_counts(1.5, [{"11": 60, "00": 40}, {"11": 80, "01": 20}], HEAVY)
    assert res.hop == pytest.approx(0.7)
    assert res.shots == 200
    assert res.instances == 2
    assert LambdaResult.from_dict(res.to_dict()) == res
    assert res.to_dict()["lambda"] == 1.5
    with pytest.raises(AnalysisError):
        LambdaResult.from_counts(1., [], HEAVY)


def test_record_needs_unit_scale_factor():
    with pytest.raises(AnalysisError):
        _record(0, {1.5: 0.6})
    with pytest.raises(AnalysisError):
        _record(0, {1.: 1.2})


def test_record_extrapolation():
    rec = _record(3, {1.: 0.64, 1.2: 0.62}).with_zne()
    assert rec.raw_hop == 0.64
    assert rec.lambdas == (1., 1.2)
    assert rec.zne.intercept == pytest.approx(0.74)
    assert QvRecord.from_dict(rec.to_dict()) == rec


def test_non_physical_extrapolation_is_kept():
    rec = _record(0, {1.: 0.95, 2.: 0.6}).with_zne()
    assert rec.zne.intercept == pytest.approx(1.3)


def test_lambda_means():
    records = [_record(0, {1.: 0.6, 2.: 0.5}), _record(1, {1.: 0.7, 2.: 0.6})]
    means = lambda_means(records)
    assert means[1.] == pytest.approx(0.65)
    assert means[2.] == pytest.approx(0.55)


def test_combination_table():
    records = [_record(0, {1.: 0.7, 1.5: 0.65, 2.: 0.6}),
               _record(1, {1.: 0.6, 1.5: 0.55, 2.: 0.5})]
    table = ensemble_combination_table(records)
    assert list(table.columns) == ["lambdas", "points", "mean_hop"]
    assert list(table["lambdas"]) == ["1,1.5", "1,2", "1,1.5,2"]
    assert list(table["points"]) == [2, 2, 3]
    assert all(table["mean_hop"].round(12) == 0.75)
    with pytest.raises(AnalysisError):
        ensemble_combination_table([])


if __name__ == "__main__":
    pytest.main([__file__])
