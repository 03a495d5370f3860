# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

from dataclasses import dataclass

import numpy as np

from zneqv.circuit.gates import BARRIER, MEASURE, RZ, TWO_QUBIT_KINDS, rz_matrix
from zneqv.circuit.unitary import apply_matrix, qubit_axes, measurement_order, permute_to_clbits
from zneqv.constants import MAX_SIM_QUBITS
from zneqv.errors import SimulationError
from zneqv.scheduling.alap import ScheduledCircuit, idle_gaps
from zneqv.sim.noise_model import NoiseModel
from zneqv.sim.sim_toolbox import readout_convolve, heavy_mass

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

TRACE_TOL = 1e-10
HERMITIAN_TOL = 1e-10
POSITIVITY_TOL = 1e-8


@dataclass(frozen=True)
class DensityState:
    """
    Density matrix of n qubits (qubit 0 is the least significant bit of row and column
    indices). ``clbits`` is the classical bit measured from every qubit, None if unmeasured.
    """
    n: int
    rho: np.ndarray
    clbits: tuple = None

    def __post_init__(self):
        dim = 2 ** self.n
        if self.rho.shape != (dim, dim):
            raise SimulationError("Density matrix of %d qubits must be %dx%d, got %s"
                                  % (self.n, dim, dim, self.rho.shape))
        if abs(np.trace(self.rho) - 1.) > TRACE_TOL:
            raise SimulationError("Density matrix trace %.12f differs from 1"
                                  % np.trace(self.rho).real)

    def is_valid(self):
        """
        Full check of trace, hermiticity and positivity. The eigenvalue check is O(8^n).
        """
        if abs(np.trace(self.rho) - 1.) > TRACE_TOL:
            return False
        if np.max(np.abs(self.rho - self.rho.conj().T)) > HERMITIAN_TOL:
            return False
        return bool(np.linalg.eigvalsh(self.rho).min() > -POSITIVITY_TOL)

    def diagonal(self):
        return np.clip(np.real(np.diag(self.rho)), 0., None)

    def purity(self):
        return float(np.real(np.trace(self.rho @ self.rho)))

    @classmethod
    def ground(cls, n, clbits=None):
        rho = np.zeros((2 ** n, 2 ** n), dtype=complex)
        rho[0, 0] = 1.
        return cls(n, rho, clbits)

    @classmethod
    def from_statevector(cls, psi, clbits=None):
        psi = np.asarray(psi, dtype=complex).reshape(-1)
        n = int(round(np.log2(len(psi))))
        return cls(n, np.outer(psi, psi.conj()), clbits)


def _apply_unitary(tensor, matrix, qubits, n):
    tensor = apply_matrix(tensor, matrix, qubit_axes(qubits, n))
    return apply_matrix(tensor, np.conj(matrix), qubit_axes(qubits, n, offset=n))


def depolarize(tensor, qubits, p, n):
    """
    With probability p the listed qubits are replaced by the maximally mixed state:
    rho -> (1 - p) rho + p Tr_S(rho) (x) I / 2^|S|.
    """
    if p == 0.:
        return tensor
    mixed = tensor
    for q in qubits:
        row, col = n - 1 - q, 2 * n - 1 - q
        reduced = np.trace(mixed, axis1=row, axis2=col)
        mixed = np.zeros_like(tensor)
        for b in (0, 1):
            index = [slice(None)] * (2 * n)
            index[row] = b
            index[col] = b
            mixed[tuple(index)] = reduced / 2.
    return (1. - p) * tensor + p * mixed


def _drift_after(gaps):
    drift = {}
    for q, windows in gaps.items():
        for prev, _, duration in windows:
            drift.setdefault(prev, []).append((q, duration))
    return drift


def simulate(circuit, noise=None, initial=None):
    """
    Exact density-matrix simulation of a native circuit. Every unitary gate is followed by a
    depolarizing channel on its qubits (p2 for two-qubit gates, p1 for X/SX, none for virtual
    RZ). With a scheduled circuit every idle window accrues RZ(idle_z_rate * duration) on its
    qubit. Measurements only fix the classical bit order of the resulting state.

    :param circuit: circuit or ALAP schedule to simulate
    :type circuit: Circuit, ScheduledCircuit
    :param noise: noise parameters, noiseless if None
    :type noise: NoiseModel, default None
    :param initial: state to continue from instead of |0...0>
    :type initial: DensityState, default None
    :return: final state
    :rtype: DensityState

    :Example:
        >>> state = simulate(Circuit(2, [cx(0, 1)]), NoiseModel(p2=1.))
        >>> np.real(np.diag(state.rho))
        array([0.25, 0.25, 0.25, 0.25])
    """
    noise = NoiseModel() if noise is None else noise
    drift = {}
    if isinstance(circuit, ScheduledCircuit):
        sched, circuit = circuit, circuit.circuit
        if noise.idle_z_rate != 0.:
            drift = _drift_after(idle_gaps(circuit, sched.start_times, sched.durations,
                                           sched.total_duration))
    elif noise.idle_z_rate != 0.:
        raise SimulationError("Idle Z drift requires a ScheduledCircuit")
    n = circuit.n_qubits
    if n > MAX_SIM_QUBITS:
        raise SimulationError("Density-matrix simulation is limited to %d qubits, got %d"
                              % (MAX_SIM_QUBITS, n))
    if initial is not None and initial.n != n:
        raise SimulationError("Initial state has %d qubits, circuit has %d" % (initial.n, n))
    start = DensityState.ground(n) if initial is None else initial
    tensor = start.rho.reshape((2,) * (2 * n))
    for i, g in enumerate(circuit.gates):
        if g.kind not in (BARRIER, MEASURE):
            tensor = _apply_unitary(tensor, g.to_matrix(), g.qubits, n)
            if g.kind in TWO_QUBIT_KINDS:
                tensor = depolarize(tensor, g.qubits, noise.p2, n)
            elif g.kind != RZ:
                tensor = depolarize(tensor, g.qubits, noise.p1, n)
        for q, duration in drift.get(i, ()):
            tensor = _apply_unitary(tensor, rz_matrix(noise.idle_z_rate * duration), (q,), n)
    clbits = measurement_order(circuit) if circuit.has_measurements() else start.clbits
    logger.debug("simulated %d gates on %d qubits with %r" % (len(circuit.gates), n, noise))
    return DensityState(n, tensor.reshape(2 ** n, 2 ** n), clbits)


def measurement_probabilities(state, readout_flip=0.):
    """
    Distribution over classical bitstrings (bit 0 least significant) after symmetric readout
    bit flips.
    """
    probs = permute_to_clbits(state.diagonal(), state.clbits)
    probs = readout_convolve(np.ascontiguousarray(probs, dtype=np.float64), state.n,
                             float(readout_flip))
    return probs / probs.sum()


def exact_heavy_prob(state, heavy, readout_flip=0.):
    """
    Exact probability that a measurement of ``state`` lands in the heavy set.

    :param state: simulated state
    :type state: DensityState
    :param heavy: heavy set of the ideal circuit
    :type heavy: HeavySet
    :param readout_flip: symmetric readout bit-flip probability
    :type readout_flip: float, default 0
    :return: heavy mass
    :rtype: float
    """
    if heavy.n != state.n:
        raise SimulationError("Heavy set of %d qubits does not match a %d-qubit state"
                              % (heavy.n, state.n))
    return float(heavy_mass(measurement_probabilities(state, readout_flip), heavy.mask()))


def state_fidelity(state, psi):
    """
    Fidelity <psi|rho|psi> with a pure state given in qubit order.
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if len(psi) != 2 ** state.n:
        raise SimulationError("State vector of length %d does not match %d qubits"
                              % (len(psi), state.n))
    return float(np.real(np.vdot(psi, state.rho @ psi)))
