# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import os

from zneqv.analysis.records import LambdaResult, QvRecord
from zneqv.errors import IngestError, AnalysisError
from zneqv.harness.record_log import RECORDS_FILE
from zneqv.io.file_io import append_jsonl, read_jsonl

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

COUNTS_FILE = "counts.jsonl"


def counts_lines(records):
    """
    One line per executed circuit: {"circuit_id", "lambda", "instance", "counts"}.
    """
    lines = []
    for rec in sorted(records, key=lambda r: r.circuit_id):
        for lam in rec.lambdas:
            for instance, counts in enumerate(rec.per_lambda[lam].counts):
                lines.append({"circuit_id": rec.circuit_id, "lambda": lam, "instance": instance,
                              "counts": dict(sorted(counts.items()))})
    return lines


def export_counts(run_dir, filename=None):
    """
    Writes the counts of all records of a run directory as JSON lines, the format read by
    :func:`ingest_counts`.

    :param run_dir: run directory containing records.jsonl
    :type run_dir: str
    :param filename: output path, ``<run_dir>/counts.jsonl`` if None
    :type filename: str, default None
    :return: the written path
    :rtype: str
    """
    filename = os.path.join(run_dir, COUNTS_FILE) if filename is None else filename
    records = [QvRecord.from_dict(d) for d in read_jsonl(os.path.join(run_dir, RECORDS_FILE))]
    if os.path.isfile(filename):
        os.remove(filename)
    n_lines = append_jsonl(counts_lines(records), filename)
    logger.info("exported %d count sets to %s" % (n_lines, filename))
    return filename


def _collect(counts_files):
    grouped = {}
    for path in counts_files:
        for line in read_jsonl(path):
            try:
                key = (int(line["circuit_id"]), float(line["lambda"]))
                instance = int(line.get("instance", 0))
                counts = {str(b): int(c) for b, c in line["counts"].items()}
            except (KeyError, TypeError, ValueError) as e:
                raise IngestError("Malformed counts line in %s: %s" % (path, e))
            grouped.setdefault(key, {})
            if instance in grouped[key]:
                raise IngestError("Duplicate counts for circuit %d, lambda %g, instance %d"
                                  % (key[0], key[1], instance))
            grouped[key][instance] = counts
    return grouped


def ingest_counts(records_file, counts_files, order=1):
    """
    Replaces the measured data of existing records by externally produced counts and recomputes
    HOPs and zero-noise estimates. Heavy sets, ids and seeds come from the records file.

    :param records_file: records.jsonl of the run that generated the circuits
    :type records_file: str, file-object
    :param counts_files: JSON-lines files of {"circuit_id", "lambda", "instance", "counts"}
    :type counts_files: list
    :param order: extrapolation order
    :type order: int, str, default 1
    :return: updated records ordered by circuit id
    :rtype: list(QvRecord)
    """
    if isinstance(counts_files, (str, bytes, os.PathLike)):
        counts_files = [counts_files]
    originals = {}
    for d in read_jsonl(records_file):
        rec = QvRecord.from_dict(d)
        originals.setdefault(rec.circuit_id, rec)
    grouped = _collect(counts_files)
    unknown = sorted(set(cid for cid, _ in grouped) - set(originals))
    if unknown:
        raise IngestError("Counts for unknown circuit ids %s" % unknown)
    by_circuit = {}
    for (cid, lam), instances in grouped.items():
        by_circuit.setdefault(cid, {})[lam] = instances
    updated = []
    for cid in sorted(originals):
        rec = originals[cid]
        per_lambda = {}
        for lam, instances in sorted(by_circuit.get(cid, {}).items()):
            counts = [instances[i] for i in sorted(instances)]
            for c in counts:
                wrong = [b for b in c if len(b) != rec.n or set(b) - {"0", "1"}]
                if wrong:
                    raise IngestError("Circuit %d, lambda %g: bitstrings %s do not have %d bits"
                                      % (cid, lam, wrong[:3], rec.n))
                if sum(c.values()) <= 0:
                    raise IngestError("Circuit %d, lambda %g: counts contain zero shots"
                                      % (cid, lam))
            per_lambda[lam] = LambdaResult.from_counts(lam, counts, rec.heavy_set)
        if 1. not in per_lambda:
            raise IngestError("Circuit %d has no counts at lambda = 1" % cid)
        try:
            updated.append(QvRecord(cid, rec.n, rec.heavy_set, per_lambda, seed=rec.seed)
                           .with_zne(order))
        except AnalysisError as e:
            raise IngestError("Circuit %d: %s" % (cid, e))
    logger.info("ingested counts for %d circuits" % len(updated))
    return updated
