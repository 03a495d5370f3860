# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import argparse
import os
import sys

from zneqv.analysis.extrapolation import ORDER_RICHARDSON
from zneqv.errors import ZneqvError
from zneqv.harness.calibration import calibrate_p2
from zneqv.harness.config import load_config, init_options, run_directory
from zneqv.harness.ingest import ingest_counts, export_counts
from zneqv.harness.record_log import RecordLog, RECORDS_FILE
from zneqv.harness.report import analyze_run, analyze_records, emit_report, summary_dict
from zneqv.harness.run_experiment import run_experiment, resolve_layout, build_circuit, \
    scaled_instances, executable_schedule, circuit_seed
from zneqv.io.file_io import to_json, from_json, to_qasm, dumps_canonical
from zneqv.networks.coupling_maps import coupling_map_by_name
from zneqv.qv.generator import ideal_distribution
from zneqv.scheduling.dynamical_decoupling import insert_dd
from zneqv.topology.graph_searches import enumerate_subgraph_classes, subgraph_class_table
from zneqv.transpiler.decompose import rebase_only

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


def _config(args):
    overrides = {}
    if getattr(args, "n", None) is not None:
        overrides["n"] = args.n
    if getattr(args, "num_circuits", None) is not None:
        overrides["num_circuits"] = args.num_circuits
    if args.config:
        return load_config(args.config, **overrides)
    return init_options(None, **overrides)


def _fit_order(value):
    return value if value == ORDER_RICHARDSON else int(value)


def _circuit_ids(args, config):
    return range(min(args.count, config["num_circuits"]))


def cmd_gen(args):
    config = _config(args)
    os.makedirs(args.out, exist_ok=True)
    layout = resolve_layout(config)
    for i in _circuit_ids(args, config):
        qv, heavy, routed = build_circuit(config, i, layout)
        stem = os.path.join(args.out, "qv_%04d" % i)
        to_qasm(routed, stem + ".qasm")
        to_json({"circuit_id": i, "n": qv.n, "seed": circuit_seed(config, i),
                 "permutations": qv.layer_permutations, "heavy_set": heavy,
                 "ideal_distribution": ideal_distribution(qv)}, stem + ".json")
    logger.info("generated %d circuits in %s" % (len(_circuit_ids(args, config)), args.out))


def cmd_transpile(args):
    config = _config(args)
    os.makedirs(args.out, exist_ok=True)
    layout = resolve_layout(config)
    to_json(layout, os.path.join(args.out, "layout.json"))
    for i in _circuit_ids(args, config):
        _, _, routed = build_circuit(config, i, layout)
        to_qasm(routed, os.path.join(args.out, "qv_%04d.qasm" % i))


def cmd_fold(args):
    config = _config(args)
    os.makedirs(args.out, exist_ok=True)
    layout = resolve_layout(config)
    durations = config.duration_model()
    for i in _circuit_ids(args, config):
        _, _, routed = build_circuit(config, i, layout)
        for lam, instances in scaled_instances(config, i, routed):
            for instance, folding in enumerate(instances):
                circuit = folding.circuit
                if config["dd_enabled"]:
                    native = insert_dd(executable_schedule(circuit, durations, False), durations)
                else:
                    native = rebase_only(circuit)
                stem = "qv_%04d_lambda_%g_%02d" % (i, lam, instance)
                to_qasm(native, os.path.join(args.out, stem + ".qasm"))
                to_json(dict(folding.sidecar(), circuit_id=i, instance=instance,
                              shots=config.shots_for(lam)),
                        os.path.join(args.out, stem + ".json"))


def cmd_run(args):
    config = _config(args)
    report = run_experiment(config, run_dir=args.run_dir, out_root=args.out_root,
                            workers=args.workers)
    print(dumps_canonical(summary_dict(report)))


def cmd_ingest(args):
    records = ingest_counts(os.path.join(args.run_dir, RECORDS_FILE), args.counts,
                            order=args.order)
    config = init_options(from_json(os.path.join(args.run_dir, "config.json")),
                          fit_order=args.order)
    out = args.out or os.path.join(args.run_dir, "ingested")
    os.makedirs(out, exist_ok=True)
    path = os.path.join(out, RECORDS_FILE)
    if os.path.isfile(path):
        os.remove(path)
    with RecordLog(path, config["flush_interval"]) as log:
        for rec in records:
            log.append(rec)
    to_json(config.to_dict(), os.path.join(out, "config.json"))
    report = analyze_records(records, config)
    emit_report(report, out)
    print(dumps_canonical(summary_dict(report)))


def cmd_export(args):
    print(export_counts(args.run_dir, args.out))


def cmd_analyze(args):
    report = analyze_run(args.run_dir, emit=False)
    print(dumps_canonical(summary_dict(report)))


def cmd_report(args):
    report = analyze_run(args.run_dir, emit=False)
    written = emit_report(report, args.out or args.run_dir, tuple(args.formats))
    for kind, path in sorted(written.items()):
        print("%s: %s" % (kind, path))


def cmd_subgraphs(args):
    coupling = coupling_map_by_name(args.coupling_map, args.n)
    classes = enumerate_subgraph_classes(coupling, args.n)
    print(subgraph_class_table(classes).to_string(index=False))


def cmd_calibrate(args):
    config = _config(args)
    result = calibrate_p2(config, (args.low, args.high), args.circuits)
    print(dumps_canonical(dict(result)))


def cmd_hash(args):
    print(run_directory(_config(args), args.out_root))


def _add_config_args(parser, count=False):
    parser.add_argument("--config", help="experiment config JSON file")
    parser.add_argument("--n", type=int, help="override the circuit width")
    parser.add_argument("--num-circuits", type=int, help="override the number of circuits")
    if count:
        parser.add_argument("--count", type=int, default=10, help="circuits to write")
        parser.add_argument("--out", required=True, help="output directory")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zneqv", description="Effective quantum volume with zero-noise extrapolation",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("--log-level", default="INFO", help="logging level")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate QV circuits, ideal distributions and heavy sets")
    _add_config_args(p, count=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transpile", help="route QV circuits and export native QASM")
    _add_config_args(p, count=True)
    p.set_defaults(func=cmd_transpile)

    p = sub.add_parser("fold", help="export the folded executable circuits as QASM")
    _add_config_args(p, count=True)
    p.set_defaults(func=cmd_fold)

    p = sub.add_parser("run", help="run the simulated benchmark")
    _add_config_args(p)
    p.add_argument("--run-dir", help="run directory (default: <out-root>/<config hash>)")
    p.add_argument("--out-root", default="runs", help="parent of hashed run directories")
    p.add_argument("--workers", type=int, help="worker processes (default: ZNEQV_WORKERS or 1)")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("ingest", help="recompute a run from externally produced counts")
    p.add_argument("--run-dir", required=True)
    p.add_argument("--counts", nargs="+", required=True, help="counts JSON-lines files")
    p.add_argument("--order", type=_fit_order, default=1,
                   help="extrapolation order or '%s'" % ORDER_RICHARDSON)
    p.add_argument("--out", help="output directory (default: <run-dir>/ingested)")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("export", help="write the counts of a run as JSON lines")
    p.add_argument("--run-dir", required=True)
    p.add_argument("--out", help="output file (default: <run-dir>/counts.jsonl)")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("analyze", help="print the summary of a run")
    p.add_argument("--run-dir", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("report", help="write CSV, JSON and SVG report files of a run")
    p.add_argument("--run-dir", required=True)
    p.add_argument("--out", help="output directory (default: the run directory)")
    p.add_argument("--formats", nargs="+", default=["csv", "json", "svg"],
                   choices=["csv", "json", "svg"])
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("subgraphs", help="list subgraph isomorphism classes of a coupling map")
    p.add_argument("--coupling-map", default="heavy_hex_27")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_subgraphs)

    p = sub.add_parser("calibrate", help="find p2 that puts the raw mean HOP into a target band")
    _add_config_args(p)
    p.add_argument("--low", type=float, default=0.55)
    p.add_argument("--high", type=float, default=0.66)
    p.add_argument("--circuits", type=int, default=50)
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("hash", help="print the run directory of a config")
    _add_config_args(p)
    p.add_argument("--out-root", default="runs")
    p.set_defaults(func=cmd_hash)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(),
                        format="%(asctime)s %(name)s %(levelname)s: %(message)s")
    try:
        args.func(args)
    except (ZneqvError, UserWarning) as e:
        logger.error(str(e))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
