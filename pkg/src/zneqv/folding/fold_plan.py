# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import math
from dataclasses import dataclass

from zneqv.constants import MAX_SCALE_FACTOR
from zneqv.errors import FoldingError

BASIS_LAYERS = "layers"
BASIS_CX = "cx_gates"

# absorbs binary rounding of scale factors such as 1.2
_FLOOR_EPS = 1e-9


def fold_count(t_or_d, scale_factor):
    """
    Number of folded units k = floor(t_or_d * (lambda - 1) / 2).

    :param t_or_d: number of CX gates (local folding) or layers (global folding)
    :type t_or_d: int
    :param scale_factor: noise scale factor lambda in [1, 3]
    :type scale_factor: float
    :return: k
    :rtype: int

    :Example:
        >>> fold_count(7, 2.)
        3
    """
    if not 1. <= scale_factor <= MAX_SCALE_FACTOR:
        raise FoldingError("Scale factor must lie in [1, %g], got %s"
                           % (MAX_SCALE_FACTOR, scale_factor))
    if t_or_d < 0:
        raise FoldingError("Negative unit count %s" % t_or_d)
    return int(math.floor(t_or_d * (scale_factor - 1.) / 2. + _FLOOR_EPS))


@dataclass(frozen=True)
class FoldPlan:
    scale_factor: float
    k: int
    basis: str
    t_or_d: int

    def __post_init__(self):
        if self.basis not in (BASIS_LAYERS, BASIS_CX):
            raise FoldingError("Unknown folding basis %s" % self.basis)
        if self.k != fold_count(self.t_or_d, self.scale_factor):
            raise FoldingError("Fold count %d does not match floor(%d * (%g - 1) / 2)"
                               % (self.k, self.t_or_d, self.scale_factor))

    @classmethod
    def create(cls, t_or_d, scale_factor, basis):
        return cls(float(scale_factor), fold_count(t_or_d, scale_factor), basis, int(t_or_d))


@dataclass(frozen=True)
class FoldedCircuit:
    circuit: object
    plan: FoldPlan
    local_instance_seed: int = None

    def sidecar(self):
        """
        JSON-ready description of the folding.
        """
        return {"lambda": self.plan.scale_factor, "k": self.plan.k, "basis": self.plan.basis,
                "t_or_d": self.plan.t_or_d, "instance_seed": self.local_instance_seed}
