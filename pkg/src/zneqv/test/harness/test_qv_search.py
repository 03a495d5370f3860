# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import importlib

import pytest

from zneqv.constants import DECISION_PASS, DECISION_FAIL
from zneqv.errors import ConfigError
from zneqv.harness.qv_search import effective_qv_search
from zneqv.test.test_toolbox import small_experiment_config

search_module = importlib.import_module("zneqv.harness.qv_search")


@pytest.fixture
def fake_runs(monkeypatch):
    calls = []

    def fake_run_experiment(config, out_root="runs", workers=None):
        calls.append(config)
        n = config["n"]
        return {"n": n, "decision": DECISION_PASS if n <= 3 else DECISION_FAIL,
                "raw_decision": DECISION_PASS if n <= 2 else DECISION_FAIL}

    monkeypatch.setattr(search_module, "run_experiment", fake_run_experiment)
    return calls


def test_search_stops_at_first_failure(fake_runs):
    best, reports = effective_qv_search(small_experiment_config(), 2, 6)
    assert best == 3
    assert sorted(reports) == [2, 3, 4]
    assert [c["n"] for c in fake_runs] == [2, 3, 4]


def test_search_on_raw_decision(fake_runs):
    best, reports = effective_qv_search(small_experiment_config(), 2, 6, mitigated=False)
    assert best == 2
    assert sorted(reports) == [2, 3]


def test_search_first_width_fails(fake_runs):
    best, reports = effective_qv_search(small_experiment_config(), 4, 6)
    assert best is None
    assert list(reports) == [4]


def test_explicit_mapping_only_for_its_width(fake_runs):
    config = small_experiment_config(layout={"mapping": [0, 1, 2]})
    effective_qv_search(config, 2, 4)
    assert [list(c["layout"].get("mapping", [])) for c in fake_runs] == [[], [0, 1, 2], []]


@pytest.mark.parametrize("n_min, n_max", [(1, 3), (4, 3), (2, 11)])
def test_invalid_range(n_min, n_max):
    with pytest.raises(ConfigError):
        effective_qv_search(small_experiment_config(), n_min, n_max)


def test_fully_depolarized_device_has_no_volume(tmp_path):
    config = small_experiment_config(num_circuits=4, noise={"p2": 1.})
    best, reports = effective_qv_search(config, 2, 3, out_root=str(tmp_path))
    assert best is None
    assert list(reports) == [2]
    assert reports[2]["raw_mean"] == pytest.approx(0.5, abs=0.1)


@pytest.mark.slow
def test_noiseless_device_passes_all_widths(tmp_path):
    config = small_experiment_config(num_circuits=40, noise={"p2": 0.})
    best, reports = effective_qv_search(config, 2, 4, out_root=str(tmp_path))
    assert best == 4
    assert all(r["decision"] == DECISION_PASS for r in reports.values())


if __name__ == "__main__":
    pytest.main([__file__])
