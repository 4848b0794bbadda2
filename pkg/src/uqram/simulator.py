"""Minimal statevector simulator for the Grover pipeline: basis preparation,
permutation application, Hadamards, multi-controlled phase flips, and exact
address marginals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .permutation import PermutationTable, build_permutation
from .registers import MemoryConfig, QramParams, addr_qubit, encode_basis

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class StateVector:
    amplitudes: np.ndarray  # complex128, length 2^n_qubits
    n_qubits: int


@dataclass(frozen=True)
class AddressDistribution:
    probs: np.ndarray

    def to_csv(self) -> str:
        lines = ["address,probability"]
        for a, p in enumerate(self.probs):
            lines.append(f"{a},{p:.12g}")
        return "\n".join(lines) + "\n"


def init_basis(n_qubits: int, index: int) -> StateVector:
    if not 0 <= index < (1 << n_qubits):
        raise ValueError(f"basis index {index} out of range for {n_qubits} qubits")
    amp = np.zeros(1 << n_qubits, dtype=np.complex128)
    amp[index] = 1.0
    return StateVector(amp, n_qubits)


def apply_permutation(state: StateVector, table: PermutationTable) -> StateVector:
    if table.dim != len(state.amplitudes):
        raise ValueError("permutation dimension does not match state")
    new_amp = np.empty_like(state.amplitudes)
    new_amp[table.targets] = state.amplitudes
    return StateVector(new_amp, state.n_qubits)


def apply_h(state: StateVector, qubit: int) -> StateVector:
    if not 0 <= qubit < state.n_qubits:
        raise ValueError(f"qubit {qubit} out of range")
    low = 1 << qubit
    view = state.amplitudes.reshape(-1, 2, low)
    new_amp = np.empty_like(view)
    new_amp[:, 0, :] = (view[:, 0, :] + view[:, 1, :]) / _SQRT2
    new_amp[:, 1, :] = (view[:, 0, :] - view[:, 1, :]) / _SQRT2
    return StateVector(new_amp.reshape(-1), state.n_qubits)


def apply_phase_flip(state: StateVector, pos_controls: Iterable[int],
                     neg_controls: Iterable[int]) -> StateVector:
    pos = frozenset(pos_controls)
    neg = frozenset(neg_controls)
    if pos & neg:
        raise ValueError("positive and negative controls overlap")
    for q in pos | neg:
        if not 0 <= q < state.n_qubits:
            raise ValueError(f"qubit {q} out of range")
    pos_mask = sum(1 << q for q in pos)
    neg_mask = sum(1 << q for q in neg)
    idx = np.arange(len(state.amplitudes), dtype=np.int64)
    active = ((idx & pos_mask) == pos_mask) & ((idx & neg_mask) == 0)
    new_amp = np.where(active, -state.amplitudes, state.amplitudes)
    return StateVector(new_amp, state.n_qubits)


def grover_oracle(params: QramParams, target_value: int,
                  table: PermutationTable | None = None
                  ) -> Callable[[StateVector], StateVector]:
    """Phase oracle: lookup, flip phase where the output equals target_value,
    then uncompute.  The same table serves both lookups because the operator
    is its own inverse."""
    if not 0 <= target_value < (1 << params.word_bits):
        raise ValueError(f"target value {target_value} out of range")
    if table is None:
        table = build_permutation(params)
    pos = frozenset(j for j in range(params.word_bits) if (target_value >> j) & 1)
    neg = frozenset(j for j in range(params.word_bits) if not (target_value >> j) & 1)

    def oracle(state: StateVector) -> StateVector:
        state = apply_permutation(state, table)
        state = apply_phase_flip(state, pos, neg)
        return apply_permutation(state, table)

    return oracle


def grover_diffusion(params: QramParams) -> Callable[[StateVector], StateVector]:
    """Inversion about the mean on the address register, with the sign fixed
    so the composite equals 2|s><s| - I (uniform address state unchanged)."""
    addr = [addr_qubit(params, b) for b in range(params.addr_qubits)]

    def diffusion(state: StateVector) -> StateVector:
        for q in addr:
            state = apply_h(state, q)
        # 2|0><0| - I on the address factor: negate everything except the
        # all-zeros address, done as a flip on |0...0> plus a global -1.
        state = apply_phase_flip(state, (), addr)
        state = StateVector(-state.amplitudes, state.n_qubits)
        for q in addr:
            state = apply_h(state, q)
        return state

    return diffusion


def address_marginal(params: QramParams, state: StateVector) -> AddressDistribution:
    probs2 = np.abs(state.amplitudes) ** 2
    view = probs2.reshape(params.n_blocks, params.n_addresses, 1 << params.word_bits)
    return AddressDistribution(view.sum(axis=(0, 2)))


def run_grover(params: QramParams, data: MemoryConfig, target_value: int,
               iterations: int) -> AddressDistribution:
    """Full pipeline: memory in the basis state for `data`, uniform addresses,
    output |0>, then (diffusion . oracle)^iterations; returns the exact
    address marginal."""
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    state = init_basis(params.total_qubits, encode_basis(params, data, 0, 0))
    for b in range(params.addr_qubits):
        state = apply_h(state, addr_qubit(params, b))
    oracle = grover_oracle(params, target_value)
    diffusion = grover_diffusion(params)
    for _ in range(iterations):
        state = diffusion(oracle(state))
    return address_marginal(params, state)


def optimal_iterations(n_addresses: int, n_marked: int) -> int:
    """Standard Grover schedule: floor(pi/4 * sqrt(N/M)), at least 1 when
    there is anything to amplify."""
    if n_marked < 1 or n_marked > n_addresses:
        raise ValueError(f"n_marked {n_marked} out of range [1, {n_addresses}]")
    if n_marked == n_addresses:
        return 0
    return max(1, math.floor(math.pi / 4 * math.sqrt(n_addresses / n_marked)))
