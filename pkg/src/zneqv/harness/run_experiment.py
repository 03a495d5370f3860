# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import os
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from zneqv.analysis.records import LambdaResult, QvRecord
from zneqv.constants import ENV_WORKERS
from zneqv.errors import ZneqvError, ExperimentError, ConfigError
from zneqv.folding.global_folding import fold_global
from zneqv.folding.local_folding import fold_local_random, fold_local_ensemble
from zneqv.harness.config import ExperimentConfig, init_options, run_directory, FOLDING_GLOBAL
from zneqv.harness.record_log import RecordLog, RECORDS_FILE
from zneqv.harness.report import analyze_records, emit_report
from zneqv.io.file_io import to_json
from zneqv.networks.coupling_maps import coupling_map_by_name
from zneqv.qv.generator import generate_qv_circuit, ideal_distribution
from zneqv.qv.heavy import heavy_set
from zneqv.scheduling.alap import schedule_alap
from zneqv.scheduling.dynamical_decoupling import pad_dd
from zneqv.sim.density_matrix import simulate, exact_heavy_prob
from zneqv.sim.sampling import sample_counts
from zneqv.topology.graph_searches import enumerate_subgraph_classes
from zneqv.transpiler.decompose import rebase_only
from zneqv.transpiler.routing import route, layout_from_embedding

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

# sub-streams of a circuit seed
_STREAM_CIRCUIT = 0
_STREAM_SHOTS = 1
_STREAM_FOLDING = 2


def resolve_layout(config):
    """
    Layout of the experiment: an explicit ``mapping`` or the selected embedding of the selected
    subgraph class of the coupling map.
    """
    coupling = coupling_map_by_name(config["coupling_map"], config["n"])
    layout = config["layout"]
    if "mapping" in layout:
        return layout_from_embedding(coupling, layout["mapping"])
    classes = enumerate_subgraph_classes(coupling, config["n"])
    cls_index, emb_index = int(layout["subgraph_class"]), int(layout["embedding"])
    if not 0 <= cls_index < len(classes):
        raise ConfigError("Subgraph class %d does not exist, the coupling map has %d classes of "
                          "size %d" % (cls_index, len(classes), config["n"]))
    embeddings = classes[cls_index].embeddings
    if not 0 <= emb_index < len(embeddings):
        raise ConfigError("Subgraph class %d has %d embeddings, got index %d"
                          % (cls_index, len(embeddings), emb_index))
    return layout_from_embedding(coupling, embeddings[emb_index])


def circuit_seed(config, circuit_id):
    return int(config["base_seed"]) + int(circuit_id)


def build_circuit(config, circuit_id, layout):
    """
    Generates QV circuit ``circuit_id`` and routes it onto the layout.

    :return: the logical QV circuit, its heavy set and the routed native circuit
    :rtype: tuple
    """
    rng = np.random.default_rng([circuit_seed(config, circuit_id), _STREAM_CIRCUIT])
    qv = generate_qv_circuit(config["n"], rng)
    heavy = heavy_set(ideal_distribution(qv))
    return qv, heavy, route(qv, layout)


def folded_instances(config, routed, scale_factor, rng):
    """
    Foldings executed at one scale factor: the unfolded routed circuit (k = 0) for lambda = 1,
    one global fold or ``local_instances`` random local folds otherwise.

    :return: the folded circuits with their fold plans
    :rtype: list(FoldedCircuit)
    """
    if config["folding"] == FOLDING_GLOBAL:
        return [fold_global(routed, scale_factor)]
    if scale_factor == 1.:
        return [fold_local_random(routed, scale_factor, rng)]
    return fold_local_ensemble(routed, scale_factor, config["local_instances"], rng)


def folded_circuits(config, routed, scale_factor, rng):
    return [f.circuit for f in folded_instances(config, routed, scale_factor, rng)]


def scaled_instances(config, circuit_id, routed):
    """
    Yields (scale factor, foldings) in ascending scale-factor order. Local folding draws from the
    circuit's folding stream, so the sequence is the same wherever it is regenerated.
    """
    fold_rng = np.random.default_rng([circuit_seed(config, circuit_id), _STREAM_FOLDING])
    for lam in config["lambdas"]:
        yield lam, folded_instances(config, routed, lam, fold_rng)


def scaled_circuits(config, circuit_id, routed):
    for lam, instances in scaled_instances(config, circuit_id, routed):
        yield lam, [f.circuit for f in instances]


def executable_schedule(circuit, durations, dd_enabled=True):
    """
    Rebase, ALAP schedule and (optionally) X-X padding of a folded circuit.
    """
    scheduled = schedule_alap(rebase_only(circuit), durations)
    return pad_dd(scheduled, durations) if dd_enabled else scheduled


def run_single_circuit(config, circuit_id, layout=None):
    """
    Runs the full pipeline for one circuit: generate, route, fold, rebase, schedule with dynamical
    decoupling, simulate, sample and extrapolate. Every random choice derives from
    base_seed + circuit_id, so the record does not depend on which worker produced it.

    :param config: experiment configuration
    :type config: ExperimentConfig, dict
    :param circuit_id: index of the circuit
    :type circuit_id: int
    :param layout: resolved layout, resolved from the config if None
    :type layout: Layout, default None
    :return: the circuit's record with its zero-noise estimate
    :rtype: QvRecord
    """
    if not isinstance(config, ExperimentConfig):
        config = init_options(config)
    layout = resolve_layout(config) if layout is None else layout
    noise, durations = config.noise_model(), config.duration_model()
    seed = circuit_seed(config, circuit_id)
    try:
        _, heavy, routed = build_circuit(config, circuit_id, layout)
        shot_rng = np.random.default_rng([seed, _STREAM_SHOTS])
        per_lambda = {}
        for lam, circuits in scaled_circuits(config, circuit_id, routed):
            counts, exact = [], []
            for circuit in circuits:
                state = simulate(executable_schedule(circuit, durations, config["dd_enabled"]),
                                 noise)
                counts.append(sample_counts(state, config.shots_for(lam), noise.readout_flip,
                                            shot_rng))
                if config["exact_hop"]:
                    exact.append(exact_heavy_prob(state, heavy, noise.readout_flip))
            per_lambda[lam] = LambdaResult.from_counts(
                lam, counts, heavy, float(np.mean(exact)) if exact else None)
        record = QvRecord(int(circuit_id), config["n"], heavy, per_lambda, seed=seed)
        return record.with_zne(config["fit_order"])
    except ZneqvError as e:
        logger.error("circuit %s failed: %s" % (circuit_id, e))
        raise ExperimentError("circuit %s: %s" % (circuit_id, e), circuit_id) from e


def _run_worker(args):
    config, circuit_id, layout = args
    return run_single_circuit(init_options(config), circuit_id, layout)


def _worker_count(workers):
    if workers is None:
        workers = os.environ.get(ENV_WORKERS, 1)
    try:
        workers = int(workers)
    except ValueError:
        raise ConfigError("%s must be an integer, got %s" % (ENV_WORKERS, workers))
    return max(workers, 1)


def run_experiment(config, run_dir=None, out_root="runs", workers=None, emit=True):
    """
    Executes the benchmark for all circuits of the configuration and analyzes the records.
    Records are appended to ``<run_dir>/records.jsonl``; circuits already in the log are skipped,
    so an interrupted run resumes where it stopped and yields the same report. Circuits are
    distributed over ``workers`` processes (default: the ZNEQV_WORKERS environment variable,
    else 1); the calling process is the only writer of the log.

    :param config: experiment configuration
    :type config: ExperimentConfig, dict
    :param run_dir: output directory, ``<out_root>/<config hash>`` if None
    :type run_dir: str, default None
    :param out_root: parent of the default run directory
    :type out_root: str, default "runs"
    :param workers: number of worker processes
    :type workers: int, default None
    :param emit: write the report files (CSV, JSON, SVG) into the run directory
    :type emit: bool, default True
    :return: the benchmark report
    :rtype: BenchmarkReport

    :Example:
        >>> report = run_experiment(init_options(n=4, num_circuits=100))
        >>> report.decision
        'pass'
    """
    if not isinstance(config, ExperimentConfig):
        config = init_options(config)
    run_dir = run_directory(config, out_root) if run_dir is None else run_dir
    os.makedirs(run_dir, exist_ok=True)
    to_json(config.to_dict(), os.path.join(run_dir, "config.json"))
    layout = resolve_layout(config)
    workers = _worker_count(workers)
    log = RecordLog(os.path.join(run_dir, RECORDS_FILE), config["flush_interval"])
    done = log.completed_ids()
    pending = [i for i in range(config["num_circuits"]) if i not in done]
    logger.info("running %d of %d circuits (n=%d, %s folding) with %d worker(s) in %s"
                % (len(pending), config["num_circuits"], config["n"], config["folding"],
                   workers, run_dir))
    start = time.perf_counter()
    with log:
        if workers > 1 and len(pending) > 1:
            plain = config.to_dict()
            with ProcessPoolExecutor(max_workers=workers) as executor:
                for record in executor.map(_run_worker, [(plain, i, layout) for i in pending],
                                           chunksize=max(1, len(pending) // (4 * workers))):
                    log.append(record)
        else:
            for i in pending:
                log.append(run_single_circuit(config, i, layout))
    elapsed = time.perf_counter() - start
    records = [r for r in log.read_records() if r.circuit_id < config["num_circuits"]]
    report = analyze_records(records, config)
    report["timing"] = {"wall_time_s": elapsed, "circuits_run": len(pending),
                        "workers": workers}
    if emit:
        emit_report(report, run_dir)
    return report
