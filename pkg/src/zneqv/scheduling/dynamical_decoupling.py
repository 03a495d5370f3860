# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from zneqv.circuit.circuit import Circuit
from zneqv.circuit.gates import x
from zneqv.scheduling.alap import idle_gaps, build_schedule

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


def dd_pulse_starts(window_start, window_duration, x_duration):
    """
    Start times of the two X pulses of an X-X sequence centred at 1/4 and 3/4 of an idle window,
    or None if the window is shorter than two pulses.
    """
    if window_duration < 2 * x_duration:
        return None
    half = x_duration / 2.
    return (window_start + window_duration / 4. - half,
            window_start + 3. * window_duration / 4. - half)


def pad_dd(scheduled, durations):
    """
    Fills every idle window of at least two X durations with an X-X pair. The pulses are placed
    right after the operation preceding the window, with explicit start times, so the returned
    schedule keeps the idle structure around them. Layer marks are dropped.

    :param scheduled: ALAP-scheduled circuit
    :type scheduled: ScheduledCircuit
    :param durations: gate duration model
    :type durations: DurationModel
    :return: the padded schedule
    :rtype: ScheduledCircuit
    """
    circuit = scheduled.circuit
    gaps = idle_gaps(circuit, scheduled.start_times, scheduled.durations,
                     scheduled.total_duration)
    inserts = {}
    n_pairs = 0
    for q, windows in gaps.items():
        for after, start, length in windows:
            starts = dd_pulse_starts(start, length, durations.x)
            if starts is None:
                continue
            inserts.setdefault(after, []).extend((q, s) for s in starts)
            n_pairs += 1
    gates, start_times, gate_durations = [], [], []
    for i, g in enumerate(circuit.gates):
        gates.append(g)
        start_times.append(scheduled.start_times[i])
        gate_durations.append(scheduled.durations[i])
        for q, s in inserts.get(i, []):
            gates.append(x(q))
            start_times.append(s)
            gate_durations.append(durations.x)
    logger.debug("inserted %d X-X pairs" % n_pairs)
    return build_schedule(Circuit(circuit.n_qubits, gates), start_times, gate_durations)


def insert_dd(scheduled, durations):
    """
    X-X dynamical decoupling on an ALAP schedule; see :func:`pad_dd`.

    :return: circuit with the inserted pulses
    :rtype: Circuit
    """
    return pad_dd(scheduled, durations).circuit
