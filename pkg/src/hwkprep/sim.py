"""Dense statevector simulation used to check synthesized circuits.

Basis convention: flat qubit 0 (``q_1``) is the most significant bit, so the
ket ``|x_1 x_2 ... x_n a...>`` has index ``int("x_1 x_2 ... x_n a...", 2)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .circuit import Circuit, Gate, target_matrix
from .state import HWkStateSpec, to_vector

MAX_QUBITS = 26


class TooManyQubits(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class SizeMismatch(ValueError):
    pass


class StateVector:
    """Mutable amplitude array over ``num_qubits`` qubits."""

    def __init__(self, amplitudes: np.ndarray):
        amplitudes = np.asarray(amplitudes, dtype=complex)
        num_qubits = int(amplitudes.size).bit_length() - 1
        if amplitudes.ndim != 1 or amplitudes.size != 1 << num_qubits:
            raise ValueError("amplitude array length must be a power of two")
        self.amplitudes = amplitudes
        self.num_qubits = num_qubits

    def copy(self) -> StateVector:
        return StateVector(self.amplitudes.copy())

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def tensor(self) -> np.ndarray:
        # View, not a copy: axis j is flat qubit j.
        return self.amplitudes.reshape((2,) * self.num_qubits)

    def probability_of_one(self, qubit: int) -> float:
        t = self.tensor()
        sub = np.take(t, 1, axis=qubit)
        return float(np.sum(np.abs(sub) ** 2))

    def to_json(self) -> str:
        nz = np.flatnonzero(self.amplitudes)
        return json.dumps([[int(i), float(self.amplitudes[i].real), float(self.amplitudes[i].imag)] for i in nz])


def zero_state(num_qubits: int) -> StateVector:
    if num_qubits > MAX_QUBITS:
        raise TooManyQubits(f"{num_qubits} qubits exceeds the {MAX_QUBITS}-qubit limit")
    if num_qubits < 1:
        raise ValueError("need at least one qubit")
    amps = np.zeros(1 << num_qubits, dtype=complex)
    amps[0] = 1.0
    return StateVector(amps)


def apply_gate(state: StateVector, g: Gate) -> StateVector:
    """Apply ``g`` in place and return ``state``."""
    if max(g.qubits) >= state.num_qubits:
        raise IndexOutOfRange(f"{g} on a {state.num_qubits}-qubit state")
    t = state.tensor()
    index: list = [slice(None)] * state.num_qubits
    for c in g.controls:
        index[c] = 1
    index[g.target] = 0
    idx0 = tuple(index)
    index[g.target] = 1
    idx1 = tuple(index)
    if g.kind in ("x", "cx", "ccx"):
        tmp = t[idx0].copy()
        t[idx0] = t[idx1]
        t[idx1] = tmp
        return state
    u = target_matrix(g)
    a0 = t[idx0].copy()
    a1 = t[idx1]
    t[idx0] = u[0, 0] * a0 + u[0, 1] * a1
    t[idx1] = u[1, 0] * a0 + u[1, 1] * a1
    return state


def run(circuit: Circuit, on_gate: Callable[[int, StateVector], None] | None = None) -> StateVector:
    """Simulate from ``|0...0>``; ``on_gate(i, state)`` fires after gate ``i``."""
    state = zero_state(circuit.num_qubits)
    for i, g in enumerate(circuit.gates):
        apply_gate(state, g)
        if on_gate is not None:
            on_gate(i, state)
    return state


@dataclass(frozen=True)
class VerificationReport:
    fidelity: float
    max_amp_error: float
    ancilla_residual: float

    def passes(self, fidelity_tol: float = 1e-9, residual_tol: float = 1e-12) -> bool:
        return self.fidelity >= 1.0 - fidelity_tol and self.ancilla_residual <= residual_tol


def ancilla_residual(state: StateVector, n: int) -> float:
    """Probability mass on basis states with any qubit at flat index >= n set."""
    m = state.num_qubits - n
    if m <= 0:
        return 0.0
    block = state.amplitudes.reshape(1 << n, 1 << m)
    return float(np.sum(np.abs(block[:, 1:]) ** 2))


def compare_to_spec(state: StateVector, spec: HWkStateSpec) -> VerificationReport:
    m = spec.num_ancillas
    if state.num_qubits != spec.n + m:
        raise SizeMismatch(f"state has {state.num_qubits} qubits, spec needs {spec.n + m}")
    expected = to_vector(spec, m)
    return VerificationReport(
        fidelity=float(abs(np.vdot(expected, state.amplitudes))),
        max_amp_error=float(np.max(np.abs(state.amplitudes - expected))),
        ancilla_residual=ancilla_residual(state, spec.n),
    )
