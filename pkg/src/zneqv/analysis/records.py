# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass, field, replace

import numpy as np
import pandas as pd

from zneqv.analysis.extrapolation import ZneEstimate, extrapolate, extrapolation_combinations
from zneqv.analysis.hop import hop_from_counts, combine_local_ensemble
from zneqv.errors import AnalysisError
from zneqv.qv.heavy import HeavySet


@dataclass(frozen=True)
class LambdaResult:
    """
    Measured HOP of one circuit at one scale factor. ``counts`` holds one count dict per executed
    instance (one for lambda = 1 and global folding, m for local folding).
    """
    scale_factor: float
    hop: float
    shots: int
    instances: int
    counts: tuple = ()
    exact_hop: float = None

    @classmethod
    def from_counts(cls, scale_factor, counts, heavy, exact_hop=None):
        counts = tuple(dict(c) for c in counts)
        if not counts:
            raise AnalysisError("No counts for scale factor %g" % scale_factor)
        hops = [hop_from_counts(c, heavy) for c in counts]
        shots = sum(sum(c.values()) for c in counts)
        return cls(float(scale_factor), combine_local_ensemble(hops), int(shots), len(counts),
                   counts, exact_hop)

    def to_dict(self):
        d = {"lambda": self.scale_factor, "hop": self.hop, "shots": self.shots,
             "instances": self.instances, "counts": [dict(sorted(c.items())) for c in self.counts]}
        if self.exact_hop is not None:
            d["exact_hop"] = self.exact_hop
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(float(d["lambda"]), float(d["hop"]), int(d["shots"]), int(d["instances"]),
                   tuple(dict(c) for c in d.get("counts", ())), d.get("exact_hop"))


@dataclass(frozen=True)
class QvRecord:
    circuit_id: int
    n: int
    heavy_set: HeavySet
    per_lambda: dict = field(default_factory=dict)
    zne: ZneEstimate = None
    seed: int = None

    def __post_init__(self):
        if 1. not in self.per_lambda:
            raise AnalysisError("Record of circuit %s has no lambda = 1 entry" % self.circuit_id)
        for lam, res in self.per_lambda.items():
            if not 0. <= res.hop <= 1.:
                raise AnalysisError("HOP %s at lambda %g of circuit %s outside [0, 1]"
                                    % (res.hop, lam, self.circuit_id))

    @property
    def lambdas(self):
        return tuple(sorted(self.per_lambda))

    @property
    def raw_hop(self):
        return self.per_lambda[1.].hop

    def points(self, lambdas=None):
        lambdas = self.lambdas if lambdas is None else lambdas
        return [(lam, self.per_lambda[lam].hop) for lam in lambdas]

    def with_zne(self, order=1):
        return replace(self, zne=extrapolate(self.points(), order))

    def to_dict(self):
        return {"circuit_id": self.circuit_id, "n": self.n, "seed": self.seed,
                "heavy_set": self.heavy_set.to_dict(),
                "per_lambda": [self.per_lambda[lam].to_dict() for lam in self.lambdas],
                "zne": None if self.zne is None else self.zne.to_dict()}

    @classmethod
    def from_dict(cls, d):
        per_lambda = {}
        for entry in d["per_lambda"]:
            res = LambdaResult.from_dict(entry)
            per_lambda[res.scale_factor] = res
        zne = None if d.get("zne") is None else ZneEstimate.from_dict(d["zne"])
        return cls(int(d["circuit_id"]), int(d["n"]), HeavySet.from_dict(d["heavy_set"]),
                   per_lambda, zne, d.get("seed"))


def lambda_means(records):
    """
    Ensemble mean HOP per scale factor.
    """
    lambdas = sorted(set(lam for r in records for lam in r.per_lambda))
    return {lam: float(np.mean([r.per_lambda[lam].hop for r in records if lam in r.per_lambda]))
            for lam in lambdas}


def ensemble_combination_table(records, order=1):
    """
    Mean extrapolated HOP of the ensemble for every usable combination of scale factors.

    :param records: per-circuit records sharing the same scale factors
    :type records: list(QvRecord)
    :param order: fit order passed to extrapolate
    :type order: int, str, default 1
    :return: one row per combination with columns lambdas, points and mean_hop
    :rtype: pandas.DataFrame
    """
    if not records:
        raise AnalysisError("No records given")
    rows = []
    for combo in extrapolation_combinations(records[0].lambdas, order):
        hops = [extrapolate(r.points(combo), order).intercept for r in records]
        rows.append({"lambdas": ",".join("%g" % v for v in combo), "points": len(combo),
                     "mean_hop": float(np.mean(hops))})
    return pd.DataFrame(rows, columns=["lambdas", "points", "mean_hop"])
