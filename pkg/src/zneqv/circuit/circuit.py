# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass

from zneqv.circuit.gates import Gate, GATE_KINDS, MEASURE, BARRIER, CX
from zneqv.errors import CircuitError

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Circuit:
    """
    Immutable gate list over ``n_qubits`` qubits.

    ``layer_marks`` (optional) holds d+1 gate offsets 0 = b_0 < ... < b_d; layer i consists of
    ``gates[b_i:b_{i+1}]``. Everything after b_d must be a measurement or a barrier.
    """
    n_qubits: int
    gates: tuple = ()
    layer_marks: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "n_qubits", int(self.n_qubits))
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.n_qubits < 1:
            raise CircuitError("A circuit needs at least one qubit, got %s" % self.n_qubits)
        measured = False
        for i, g in enumerate(self.gates):
            if not isinstance(g, Gate):
                raise CircuitError("Entry %d of the gate list is not a Gate: %r" % (i, g))
            if any(q >= self.n_qubits for q in g.qubits):
                raise CircuitError("Gate %d (%s) acts on %s, outside of %d qubits"
                                   % (i, g.kind, g.qubits, self.n_qubits))
            if g.kind == MEASURE:
                measured = True
            elif measured and g.kind != BARRIER:
                raise CircuitError("Gate %d (%s) follows a measurement" % (i, g.kind))
        if self.layer_marks is not None:
            marks = tuple(int(b) for b in self.layer_marks)
            object.__setattr__(self, "layer_marks", marks)
            if not marks or marks[0] != 0:
                raise CircuitError("Layer marks must start at offset 0, got %s" % (marks,))
            if any(b >= c for b, c in zip(marks[:-1], marks[1:])):
                raise CircuitError("Layer marks must be strictly increasing, got %s" % (marks,))
            if marks[-1] > len(self.gates):
                raise CircuitError("Layer mark %d exceeds the gate count %d"
                                   % (marks[-1], len(self.gates)))
            if any(g.kind not in (MEASURE, BARRIER) for g in self.gates[marks[-1]:]):
                raise CircuitError("Unitary gates after the last layer mark %d" % marks[-1])

    def __len__(self):
        return len(self.gates)

    @property
    def n_layers(self):
        return None if self.layer_marks is None else len(self.layer_marks) - 1

    def layers(self):
        """
        Returns the logical layers as lists of gates. Without layer marks every unitary gate is a
        layer of its own (barriers attach to the following gate).
        """
        if self.layer_marks is not None:
            return [list(self.gates[b:c]) for b, c in zip(self.layer_marks[:-1],
                                                          self.layer_marks[1:])]
        layers, pending = [], []
        for g in self.unitary_part().gates:
            pending.append(g)
            if g.kind != BARRIER:
                layers.append(pending)
                pending = []
        if pending:
            if layers:
                layers[-1].extend(pending)
            else:
                layers.append(pending)
        return layers

    def measurements(self):
        return [g for g in self.gates if g.kind == MEASURE]

    def has_measurements(self):
        return any(g.kind == MEASURE for g in self.gates)

    def tail_start(self):
        """
        Offset of the trailing measurement block (including barriers directly in front of it).
        """
        if self.layer_marks is not None:
            return self.layer_marks[-1]
        i = len(self.gates)
        if not self.has_measurements():
            return i
        while i > 0 and self.gates[i - 1].kind in (MEASURE, BARRIER):
            i -= 1
        return i

    def unitary_part(self):
        end = self.tail_start()
        return Circuit(self.n_qubits, self.gates[:end], self.layer_marks)

    def tail(self):
        return list(self.gates[self.tail_start():])

    def without_measurements(self):
        return Circuit(self.n_qubits, [g for g in self.gates if g.kind != MEASURE],
                       None if self.layer_marks is None else self.layer_marks)

    def cx_count(self):
        return sum(1 for g in self.gates if g.kind == CX)

    def replace(self, gates=None, layer_marks=None, keep_marks=False):
        marks = self.layer_marks if keep_marks else layer_marks
        return Circuit(self.n_qubits, self.gates if gates is None else gates, marks)

    @classmethod
    def from_layers(cls, n_qubits, layers, tail=()):
        """
        Builds a layered circuit. Empty layers are skipped.

        :param n_qubits: number of qubits
        :type n_qubits: int
        :param layers: gate lists, one per layer
        :type layers: iterable
        :param tail: measurement block appended after the last layer
        :type tail: iterable
        :return: circuit with layer marks
        :rtype: Circuit
        """
        gates, marks = [], [0]
        for layer in layers:
            layer = list(layer)
            if not layer:
                logger.debug("skipping an empty layer")
                continue
            gates.extend(layer)
            marks.append(len(gates))
        gates.extend(tail)
        return cls(n_qubits, gates, tuple(marks))


def gate_counts(circuit):
    """
    Counts the gates of a circuit by kind.

    :param circuit: circuit to inspect
    :type circuit: Circuit
    :return: counts for every known gate kind (zero if absent)
    :rtype: dict
    """
    counts = dict.fromkeys(GATE_KINDS, 0)
    for g in circuit.gates:
        counts[g.kind] += 1
    return counts
