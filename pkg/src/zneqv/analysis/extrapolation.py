# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from zneqv.errors import ExtrapolationError

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

ORDER_RICHARDSON = "richardson"


@dataclass(frozen=True)
class ZneEstimate:
    """
    Polynomial fit of HOP against the scale factor. ``coefficients`` are ordered from the highest
    power down, as returned by numpy.polyfit; ``intercept`` is the fit at lambda = 0 and is not
    clipped to [0, 1].
    """
    intercept: float
    coefficients: tuple
    order: int
    lambdas_used: tuple
    residual_rms: float

    def __call__(self, scale_factor):
        return float(np.polyval(self.coefficients, scale_factor))

    def to_dict(self):
        return {"intercept": self.intercept, "coefficients": list(self.coefficients),
                "order": self.order, "lambdas_used": list(self.lambdas_used),
                "residual_rms": self.residual_rms}

    @classmethod
    def from_dict(cls, d):
        return cls(float(d["intercept"]), tuple(float(c) for c in d["coefficients"]),
                   int(d["order"]), tuple(float(v) for v in d["lambdas_used"]),
                   float(d["residual_rms"]))


def extrapolate(points, order=1):
    """
    Least-squares polynomial fit of (lambda, hop) points, evaluated at zero noise.

    :param points: (scale factor, HOP) pairs, every scale factor >= 1
    :type points: list
    :param order: polynomial degree, or "richardson" for degree (#distinct scale factors - 1)
    :type order: int, str, default 1
    :return: the fit
    :rtype: ZneEstimate

    :Example:
        >>> round(extrapolate([(1., 0.64), (1.2, 0.62)]).intercept, 12)
        0.74
    """
    points = list(points)
    if not points:
        raise ExtrapolationError("No points to extrapolate")
    lams = np.array([float(p[0]) for p in points])
    hops = np.array([float(p[1]) for p in points])
    if np.any(lams < 1. - 1e-12):
        raise ExtrapolationError("Scale factors must be >= 1, got %s" % lams.tolist())
    distinct = np.unique(lams)
    degree = len(distinct) - 1 if order == ORDER_RICHARDSON else int(order)
    if degree < 0 or len(distinct) < degree + 1:
        raise ExtrapolationError("A degree %d fit needs %d distinct scale factors, got %d"
                                 % (degree, degree + 1, len(distinct)))
    if np.linalg.matrix_rank(np.vander(lams, degree + 1)) < degree + 1:
        raise ExtrapolationError("Degenerate design matrix for scale factors %s"
                                 % lams.tolist())
    coefficients = np.polyfit(lams, hops, degree)
    fitted = np.polyval(coefficients, lams)
    residual = float(np.sqrt(np.mean((fitted - hops) ** 2)))
    intercept = float(np.polyval(coefficients, 0.))
    if not 0. <= intercept <= 1.:
        logger.debug("non-physical extrapolated HOP %.4f from %s" % (intercept, lams.tolist()))
    return ZneEstimate(intercept, tuple(float(c) for c in coefficients), degree,
                       tuple(float(v) for v in distinct), residual)


def extrapolation_combinations(lambdas, order=1):
    """
    Every subset of the scale factors that contains 1 and enough further factors for a fit of
    the given order, smallest subsets first.

    :Example:
        >>> extrapolation_combinations([1., 1.2, 1.5])
        [(1.0, 1.2), (1.0, 1.5), (1.0, 1.2, 1.5)]
    """
    lambdas = sorted(set(float(v) for v in lambdas))
    if 1. not in lambdas:
        raise ExtrapolationError("Scale factors must contain 1, got %s" % lambdas)
    others = [v for v in lambdas if v != 1.]
    minimum = 1 if order == ORDER_RICHARDSON else max(int(order), 1)
    combos = []
    for size in range(minimum, len(others) + 1):
        combos.extend((1.,) + c for c in combinations(others, size))
    return combos
