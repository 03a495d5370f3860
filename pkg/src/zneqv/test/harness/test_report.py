# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import os

import pandas as pd
import pytest

from zneqv.constants import HOP_THRESHOLD
from zneqv.errors import AnalysisError
from zneqv.harness.report import emit_report, analyze_records, analyze_run, summary_dict, \
    cumulative_frame, load_run, CUMULATIVE_FILE, SUMMARY_FILE, TIMING_FILE, CHART_FILE, \
    COMBINATIONS_FILE, COMBINATIONS_CHART_FILE
from zneqv.harness.run_experiment import run_experiment
from zneqv.io.file_io import from_json
from zneqv.plotting.hop_plots import THRESHOLD_GID, ASYMPTOTE_GID
from zneqv.test.test_toolbox import small_experiment_config


@pytest.fixture(scope="module")
def finished_run(tmp_path_factory):
    run_dir = str(tmp_path_factory.mktemp("run"))
    report = run_experiment(small_experiment_config(lambdas=[1, 1.5, 2], num_circuits=8),
                            run_dir=run_dir)
    return run_dir, report


def test_report_contents(finished_run):
    _, report = finished_run
    assert len(report["records"]) == 8
    assert sorted(report["lambda_means"]) == [1., 1.5, 2.]
    assert report["sigma"] >= 0.
    assert report["decision"] in ("pass", "fail")
    assert report["cumulative"][-1][1] == pytest.approx(report["zne_mean"], abs=1e-12)
    assert report["non_physical"] == sum(1 for r in report["records"]
                                         if not 0. <= r.zne.intercept <= 1.)


def test_written_files(finished_run):
    run_dir, report = finished_run
    for name in (CUMULATIVE_FILE, SUMMARY_FILE, TIMING_FILE, CHART_FILE, COMBINATIONS_FILE,
                 COMBINATIONS_CHART_FILE, "config.json"):
        assert os.path.isfile(os.path.join(run_dir, name))
    frame = pd.read_csv(os.path.join(run_dir, CUMULATIVE_FILE))
    assert len(frame) == 8
    assert list(frame.columns) == ["index", "mean", "two_sigma", "lower", "upper", "lambda_1",
                                   "lambda_1.5", "lambda_2"]
    assert abs(frame["mean"].iloc[-1] - report["zne_mean"]) < 1e-12
    assert frame["upper"].iloc[-1] == pytest.approx(report["zne_mean"] + 2 * report["sigma"])
    combos = pd.read_csv(os.path.join(run_dir, COMBINATIONS_FILE))
    assert list(combos["points"]) == [2, 2, 3]


def test_svg_reference_lines(finished_run):
    run_dir, _ = finished_run
    with open(os.path.join(run_dir, CHART_FILE)) as fp:
        svg = fp.read()
    assert 'id="%s"' % THRESHOLD_GID in svg
    assert 'id="%s"' % ASYMPTOTE_GID in svg


def test_summary_excludes_timing(finished_run):
    run_dir, report = finished_run
    summary = from_json(os.path.join(run_dir, SUMMARY_FILE))
    assert "timing" not in summary
    assert summary["num_circuits"] == 8
    assert summary["lower_bound"] == pytest.approx(report["zne_mean"] - 2 * report["sigma"])
    assert summary["decision"] == ("pass" if summary["lower_bound"] > HOP_THRESHOLD else "fail")
    timing = from_json(os.path.join(run_dir, TIMING_FILE))
    assert timing["circuits_run"] == 8


def test_emit_is_reproducible(finished_run, tmp_path):
    run_dir, report = finished_run
    emit_report(report, str(tmp_path))
    for name in (SUMMARY_FILE, CUMULATIVE_FILE, CHART_FILE):
        with open(os.path.join(run_dir, name)) as fa, open(str(tmp_path / name)) as fb:
            assert fa.read() == fb.read()


def test_selected_formats(finished_run, tmp_path):
    _, report = finished_run
    written = emit_report(report, str(tmp_path), formats=("json",))
    assert sorted(written) == ["summary", "timing"]
    assert not (tmp_path / CHART_FILE).exists()


def test_analyze_run_matches(finished_run):
    run_dir, report = finished_run
    again = analyze_run(run_dir, emit=False)
    assert summary_dict(again) == summary_dict(report)
    assert again["timing"]["circuits_run"] == 8
    assert cumulative_frame(again).equals(cumulative_frame(report))


def test_record_count_must_match(finished_run):
    run_dir, _ = finished_run
    config, records = load_run(run_dir)
    with pytest.raises(AnalysisError):
        analyze_records(records[:-1], config)


def test_two_scale_factors_skip_combinations(tmp_path):
    report = run_experiment(small_experiment_config(num_circuits=2), run_dir=str(tmp_path))
    assert not (tmp_path / COMBINATIONS_FILE).exists()
    assert (tmp_path / CHART_FILE).is_file()
    assert len(report["lambda_cumulative"][2.]) == 2


if __name__ == "__main__":
    pytest.main([__file__])
