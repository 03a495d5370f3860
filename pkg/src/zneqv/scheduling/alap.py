# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass, field

import pandas as pd

from zneqv.circuit.gates import BARRIER

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

TIME_EPS = 1e-9


@dataclass(frozen=True)
class ScheduledCircuit:
    """
    A circuit with start times. ``idle_windows`` maps every qubit to its (start, duration) gaps
    between consecutive operations and before the end of the circuit.
    """
    circuit: object
    start_times: tuple
    durations: tuple
    idle_windows: dict = field(default_factory=dict)
    total_duration: float = 0.

    def to_frame(self):
        """
        Timeline as a DataFrame with one row per gate.
        """
        return pd.DataFrame({"gate": [g.kind for g in self.circuit.gates],
                             "qubits": [g.qubits for g in self.circuit.gates],
                             "start": list(self.start_times),
                             "duration": list(self.durations)})


def qubit_timelines(circuit, start_times, durations):
    """
    Per qubit the list of (gate index, start, end) of the operations touching it, in order.
    Barriers are not operations.
    """
    lines = {q: [] for q in range(circuit.n_qubits)}
    for i, g in enumerate(circuit.gates):
        if g.kind == BARRIER:
            continue
        for q in g.qubits:
            lines[q].append((i, start_times[i], start_times[i] + durations[i]))
    return lines


def idle_gaps(circuit, start_times, durations, total):
    """
    Per qubit the idle gaps as (index of the preceding gate, start, duration). The time before a
    qubit's first operation is not idle.
    """
    gaps = {}
    for q, ops in qubit_timelines(circuit, start_times, durations).items():
        gaps[q] = []
        for (i, _, end), (_, nxt, _) in zip(ops, ops[1:] + [(None, total, None)]):
            if nxt - end > TIME_EPS:
                gaps[q].append((i, end, nxt - end))
    return gaps


def _windows(gaps):
    return {q: [(s, d) for _, s, d in g] for q, g in gaps.items()}


def build_schedule(circuit, start_times, durations):
    total = max([s + d for s, d in zip(start_times, durations)], default=0.)
    gaps = idle_gaps(circuit, start_times, durations, total)
    return ScheduledCircuit(circuit, tuple(start_times), tuple(durations), _windows(gaps), total)


def schedule_alap(circuit, durations):
    """
    As-late-as-possible schedule: a reverse pass assigns every gate the latest start that still
    precedes all later gates on its qubits. Barriers take no time but synchronise their qubits.

    :param circuit: native circuit
    :type circuit: Circuit
    :param durations: gate duration model
    :type durations: DurationModel
    :return: the scheduled circuit
    :rtype: ScheduledCircuit

    :Example:
        >>> sched = schedule_alap(Circuit(2, [cx(0, 1), x(0)]), DurationModel())
        >>> sched.idle_windows[1]
        [(5.0, 1.0)]
    """
    n = circuit.n_qubits
    avail = [0.] * n
    rev_end = [0.] * len(circuit.gates)
    gate_durations = [durations.duration(g) for g in circuit.gates]
    for i in range(len(circuit.gates) - 1, -1, -1):
        g = circuit.gates[i]
        t = max(avail[q] for q in g.qubits)
        end = t + gate_durations[i]
        for q in g.qubits:
            avail[q] = end
        rev_end[i] = end
    total = max(avail, default=0.)
    starts = [total - e for e in rev_end]
    return build_schedule(circuit, starts, gate_durations)
