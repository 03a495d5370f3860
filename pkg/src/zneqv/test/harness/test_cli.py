# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import json
import os

import pytest

from zneqv.circuit.circuit import gate_counts
from zneqv.circuit.gates import X, SX, RZ, CX, BARRIER, MEASURE
from zneqv.harness.cli import main, build_parser
from zneqv.harness.config import init_options, run_directory
from zneqv.harness.report import analyze_run, summary_dict
from zneqv.io.file_io import to_json, from_json, from_qasm
from zneqv.test.test_toolbox import small_experiment_config


@pytest.fixture
def config_file(tmp_path):
    path = str(tmp_path / "config.json")
    to_json(small_experiment_config(num_circuits=3), path)
    return path


def _stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_hash(config_file, tmp_path, capsys):
    assert main(["hash", "--config", config_file, "--out-root", str(tmp_path)]) == 0
    expected = run_directory(init_options(small_experiment_config(num_circuits=3)), str(tmp_path))
    assert capsys.readouterr().out.strip() == expected


def test_subgraphs(capsys):
    assert main(["subgraphs", "--n", "6"]) == 0
    rows = [ln for ln in capsys.readouterr().out.splitlines() if ln.strip()]
    assert len(rows) == 1 + 3


def test_gen_transpile_fold(config_file, tmp_path):
    gen_dir, tr_dir, fold_dir = (str(tmp_path / d) for d in ("gen", "transpiled", "folded"))
    assert main(["gen", "--config", config_file, "--count", "2", "--out", gen_dir]) == 0
    assert sorted(os.listdir(gen_dir)) == ["qv_0000.json", "qv_0000.qasm", "qv_0001.json",
                                           "qv_0001.qasm"]
    generated = from_json(os.path.join(gen_dir, "qv_0001.json"))
    assert generated["circuit_id"] == 1
    assert generated["seed"] == 12
    assert len(generated["permutations"]) == 3
    assert sorted(generated["heavy_set"]) == ["median", "members", "n"]
    assert from_qasm(os.path.join(gen_dir, "qv_0001.qasm")).n_qubits == 3
    assert sum(generated["ideal_distribution"]) == pytest.approx(1.)
    assert len(generated["heavy_set"]["members"]) == 4

    assert main(["transpile", "--config", config_file, "--count", "2", "--out", tr_dir]) == 0
    assert sorted(os.listdir(tr_dir)) == ["layout.json", "qv_0000.qasm", "qv_0001.qasm"]
    routed = from_qasm(os.path.join(tr_dir, "qv_0000.qasm"))
    assert routed.cx_count() >= 9

    assert main(["fold", "--config", config_file, "--count", "1", "--out", fold_dir]) == 0
    files = sorted(os.listdir(fold_dir))
    assert "qv_0000_lambda_1_00.qasm" in files
    assert "qv_0000_lambda_2_00.json" in files
    meta = from_json(os.path.join(fold_dir, "qv_0000_lambda_2_00.json"))
    assert meta["shots"] == 200
    assert (meta["lambda"], meta["k"], meta["basis"], meta["t_or_d"]) == (2., 1, "layers", 3)
    assert meta["instance_seed"] is None
    unfolded = from_json(os.path.join(fold_dir, "qv_0000_lambda_1_00.json"))
    assert unfolded["k"] == 0
    folded = from_qasm(os.path.join(fold_dir, "qv_0000_lambda_2_00.qasm"))
    assert folded.cx_count() > routed.cx_count()
    used = set(kind for kind, count in gate_counts(folded).items() if count)
    assert used <= {X, SX, RZ, CX, BARRIER, MEASURE}


def test_run_export_ingest_analyze(config_file, tmp_path, capsys):
    run_dir = str(tmp_path / "run")
    assert main(["run", "--config", config_file, "--run-dir", run_dir]) == 0
    summary = _stdout_json(capsys)
    assert summary["num_circuits"] == 3
    assert summary == summary_dict(analyze_run(run_dir, emit=False))

    assert main(["analyze", "--run-dir", run_dir]) == 0
    assert _stdout_json(capsys) == summary

    assert main(["export", "--run-dir", run_dir]) == 0
    counts = capsys.readouterr().out.strip()
    assert os.path.isfile(counts)

    assert main(["ingest", "--run-dir", run_dir, "--counts", counts]) == 0
    ingested = _stdout_json(capsys)
    assert ingested["zne_mean"] == pytest.approx(summary["zne_mean"], abs=1e-12)
    assert os.path.isfile(os.path.join(run_dir, "ingested", "summary.json"))

    out = str(tmp_path / "csv_only")
    assert main(["report", "--run-dir", run_dir, "--out", out, "--formats", "csv"]) == 0
    assert os.listdir(out) == ["cumulative.csv"]


def test_num_circuits_override(config_file, tmp_path, capsys):
    run_dir = str(tmp_path / "run")
    assert main(["run", "--config", config_file, "--num-circuits", "2", "--run-dir", run_dir]) == 0
    assert _stdout_json(capsys)["num_circuits"] == 2


def test_error_exit_code(tmp_path):
    assert main(["analyze", "--run-dir", str(tmp_path / "missing")]) == 1
    assert main(["run", "--config", str(tmp_path / "missing.json")]) == 1


def test_ingest_order_argument():
    parser = build_parser()
    args = parser.parse_args(["ingest", "--run-dir", "r", "--counts", "c.jsonl"])
    assert args.order == 1
    args = parser.parse_args(["ingest", "--run-dir", "r", "--counts", "c.jsonl", "--order",
                              "richardson"])
    assert args.order == "richardson"
    args = parser.parse_args(["ingest", "--run-dir", "r", "--counts", "c.jsonl", "--order", "2"])
    assert args.order == 2


def test_calibrate(config_file, capsys):
    assert main(["calibrate", "--config", config_file, "--circuits", "3", "--low", "0.6",
                 "--high", "0.7"]) == 0
    result = _stdout_json(capsys)
    assert 0.6 < result["mean_hop"] < 0.7


if __name__ == "__main__":
    pytest.main([__file__])
