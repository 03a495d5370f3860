# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import os

import numpy as np
import pandas as pd
from pandapower.auxiliary import ADict

from zneqv import __format_version__
from zneqv.analysis.records import lambda_means, ensemble_combination_table
from zneqv.analysis.statistics import bootstrap_sigma, cumulative_series, evaluate_pass
from zneqv.errors import AnalysisError
from zneqv.harness.config import init_options
from zneqv.harness.record_log import RecordLog, RECORDS_FILE
from zneqv.io.file_io import to_json, from_json
from zneqv.plotting.hop_plots import plot_cumulative_hop, plot_combination_histogram

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

CUMULATIVE_FILE = "cumulative.csv"
SUMMARY_FILE = "summary.json"
TIMING_FILE = "timing.json"
CHART_FILE = "cumulative_hop.svg"
COMBINATIONS_FILE = "combinations.csv"
COMBINATIONS_CHART_FILE = "combinations.svg"


class BenchmarkReport(ADict):
    """
    Outcome of a benchmark run: config snapshot, per-circuit records, ensemble means per scale
    factor and at zero noise, bootstrap sigma, pass decision, cumulative series and timing.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    def __repr__(self):  # pragma: no cover
        return "BenchmarkReport(n=%s, circuits=%d, zne_mean=%.4f, sigma=%.4f, decision=%s)" \
               % (self["config"]["n"], len(self["records"]), self["zne_mean"], self["sigma"],
                  self["decision"])


def _running_mean(values):
    values = np.asarray(values, dtype=float)
    return np.cumsum(values) / np.arange(1, values.size + 1)


def analyze_records(records, config):
    """
    Re-extrapolates every record with the configured fit order and computes the ensemble
    statistics. The report's sigma is the bootstrap sigma of the last cumulative element; the raw
    (lambda = 1) HOPs are judged with the same bootstrap stream.

    :param records: one record per circuit
    :type records: list(QvRecord)
    :param config: experiment configuration
    :type config: ExperimentConfig, dict
    :return: the report
    :rtype: BenchmarkReport
    """
    config = init_options(config)
    records = sorted(records, key=lambda r: r.circuit_id)
    if len(records) != config["num_circuits"]:
        raise AnalysisError("Expected %d records, got %d" % (config["num_circuits"], len(records)))
    records = [r.with_zne(config["fit_order"]) for r in records]
    zne = np.array([r.zne.intercept for r in records])
    raw = np.array([r.raw_hop for r in records])
    resamples, seed = config["bootstrap_resamples"], config["bootstrap_seed"]
    series = cumulative_series(zne, resamples, seed)
    sigma = series[-1][2] / 2.
    raw_sigma = bootstrap_sigma(raw, resamples, np.random.default_rng([int(seed), raw.size - 1]))
    zne_mean = series[-1][1]
    raw_mean = float(np.mean(raw))
    n_unphysical = int(np.sum((zne < 0.) | (zne > 1.)))
    if n_unphysical:
        logger.info("%d of %d extrapolated HOPs lie outside [0, 1]" % (n_unphysical, zne.size))
    report = BenchmarkReport(
        config=config.to_dict(), records=records, lambda_means=lambda_means(records),
        zne_mean=zne_mean, sigma=sigma, decision=evaluate_pass(zne_mean, sigma),
        raw_mean=raw_mean, raw_sigma=raw_sigma, raw_decision=evaluate_pass(raw_mean, raw_sigma),
        cumulative=series, non_physical=n_unphysical,
        lambda_cumulative={lam: _running_mean([r.per_lambda[lam].hop for r in records])
                           for lam in records[0].lambdas},
        timing={})
    logger.info("n=%d: raw mean HOP %.4f (%s), ZNE mean HOP %.4f +- %.4f (%s)"
                % (config["n"], raw_mean, report["raw_decision"], zne_mean, 2 * sigma,
                   report["decision"]))
    return report


def summary_dict(report):
    """
    Deterministic summary of a report; wall-time data is kept out.
    """
    return {"format_version": __format_version__, "config": report["config"],
            "n": report["config"]["n"], "num_circuits": len(report["records"]),
            "lambda_means": {"%g" % lam: m for lam, m in sorted(report["lambda_means"].items())},
            "zne_mean": report["zne_mean"], "sigma": report["sigma"],
            "lower_bound": report["zne_mean"] - 2 * report["sigma"],
            "decision": report["decision"], "raw_mean": report["raw_mean"],
            "raw_sigma": report["raw_sigma"], "raw_decision": report["raw_decision"],
            "non_physical": report["non_physical"]}


def cumulative_frame(report):
    """
    Cumulative series as a DataFrame: index, mean, two_sigma, lower, upper and the running mean
    per scale factor.
    """
    series = report["cumulative"]
    frame = pd.DataFrame({"index": [s[0] for s in series], "mean": [s[1] for s in series],
                          "two_sigma": [s[2] for s in series]})
    frame["lower"] = frame["mean"] - frame["two_sigma"]
    frame["upper"] = frame["mean"] + frame["two_sigma"]
    for lam, values in sorted(report["lambda_cumulative"].items()):
        frame["lambda_%g" % lam] = values
    return frame


def _write(writer, path):
    try:
        writer(path)
    except OSError as e:
        raise OSError("Could not write report file %s: %s" % (path, e)) from e
    return path


def emit_report(report, out_dir, formats=("csv", "json", "svg")):
    """
    Writes the report files into ``out_dir``: cumulative.csv, summary.json, timing.json,
    cumulative_hop.svg and, with more than two scale factors, the extrapolation combination table
    and its histogram.

    :param report: completed report
    :type report: BenchmarkReport
    :param out_dir: output directory
    :type out_dir: str
    :param formats: subset of "csv", "json" and "svg"
    :type formats: tuple, default ("csv", "json", "svg")
    :return: kind -> written path
    :rtype: dict
    """
    os.makedirs(out_dir, exist_ok=True)
    written = {}
    order = report["config"]["fit_order"]
    table = None
    if len(report["lambda_means"]) > 2:
        table = ensemble_combination_table(report["records"], order)
    if "csv" in formats:
        written["cumulative"] = _write(
            lambda p: cumulative_frame(report).to_csv(p, index=False),
            os.path.join(out_dir, CUMULATIVE_FILE))
        if table is not None:
            written["combinations"] = _write(lambda p: table.to_csv(p, index=False),
                                             os.path.join(out_dir, COMBINATIONS_FILE))
    if "json" in formats:
        written["summary"] = _write(lambda p: to_json(summary_dict(report), p),
                                    os.path.join(out_dir, SUMMARY_FILE))
        written["timing"] = _write(lambda p: to_json(report["timing"], p),
                                   os.path.join(out_dir, TIMING_FILE))
    if "svg" in formats:
        title = "n = %d, %s folding" % (report["config"]["n"], report["config"]["folding"])
        written["chart"] = _write(
            lambda p: plot_cumulative_hop(report["cumulative"], report["lambda_cumulative"],
                                          title, p),
            os.path.join(out_dir, CHART_FILE))
        if table is not None:
            written["combinations_chart"] = _write(
                lambda p: plot_combination_histogram(table, title=title, filename=p),
                os.path.join(out_dir, COMBINATIONS_CHART_FILE))
    logger.info("report written to %s" % out_dir)
    return written


def load_run(run_dir):
    """
    Config and records of a run directory.
    """
    config = init_options(from_json(os.path.join(run_dir, "config.json")))
    records = RecordLog(os.path.join(run_dir, RECORDS_FILE)).read_records()
    return config, records


def analyze_run(run_dir, emit=True):
    config, records = load_run(run_dir)
    report = analyze_records(records, config)
    timing_path = os.path.join(run_dir, TIMING_FILE)
    if os.path.isfile(timing_path):
        report["timing"] = from_json(timing_path)
    if emit:
        emit_report(report, run_dir)
    return report
