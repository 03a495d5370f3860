# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import numpy as np

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import CX, barrier
from zneqv.constants import LOCAL_INSTANCES
from zneqv.errors import FoldingError
from zneqv.folding.fold_plan import FoldPlan, FoldedCircuit, BASIS_CX

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


def fold_local_random(circuit, scale_factor, rng):
    """
    Random local folding restricted to CX gates: k = floor(t (lambda - 1) / 2) distinct CX gates,
    drawn without replacement, are replaced by CX-barrier-CX-barrier-CX.

    :param circuit: native circuit with t >= 1 CX gates
    :type circuit: Circuit
    :param scale_factor: lambda in [1, 3]
    :type scale_factor: float
    :param rng: seed or random generator; an integer seed is recorded on the result
    :type rng: int, numpy.random.Generator
    :return: folded circuit with t + 2k CX gates
    :rtype: FoldedCircuit
    """
    seed = int(rng) if isinstance(rng, (int, np.integer)) else None
    rng = np.random.default_rng(rng)
    cx_positions = [i for i, g in enumerate(circuit.gates) if g.kind == CX]
    t = len(cx_positions)
    if t == 0:
        raise FoldingError("Local CX folding needs at least one CX gate")
    plan = FoldPlan.create(t, scale_factor, BASIS_CX)
    if plan.k == 0:
        return FoldedCircuit(circuit, plan, seed)
    chosen = {cx_positions[i] for i in rng.choice(t, size=plan.k, replace=False)}
    gates, offsets = [], []
    for i, g in enumerate(circuit.gates):
        offsets.append(len(gates))
        if i in chosen:
            fence = barrier(*g.qubits)
            gates.extend([g, fence, g, fence, g])
        else:
            gates.append(g)
    offsets.append(len(gates))
    marks = None if circuit.layer_marks is None else tuple(offsets[b] for b in circuit.layer_marks)
    logger.debug("local folding: t=%d, lambda=%g, k=%d" % (t, scale_factor, plan.k))
    return FoldedCircuit(Circuit(circuit.n_qubits, gates, marks), plan, seed)


def fold_local_ensemble(circuit, scale_factor, m=LOCAL_INSTANCES, rng=None):
    """
    m independent random local foldings. Each instance gets its own seed drawn from ``rng`` so it
    can be regenerated on its own. A single instance (m = 1) is folded with ``rng`` itself and
    equals :func:`fold_local_random` given the same ``rng``.

    :param circuit: native circuit
    :type circuit: Circuit
    :param scale_factor: lambda in [1, 3]
    :type scale_factor: float
    :param m: number of instances
    :type m: int, default 10
    :param rng: seed or random generator
    :type rng: int, numpy.random.Generator
    :return: m folded circuits
    :rtype: list(FoldedCircuit)
    """
    if m < 1:
        raise FoldingError("A local folding ensemble needs m >= 1, got %s" % m)
    if m == 1:
        return [fold_local_random(circuit, scale_factor, rng)]
    rng = np.random.default_rng(rng)
    seeds = rng.integers(0, 2 ** 63 - 1, size=m)
    return [fold_local_random(circuit, scale_factor, int(s)) for s in seeds]
