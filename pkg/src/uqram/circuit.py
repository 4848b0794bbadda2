"""Multi-controlled-X circuits: the N*K-gate QRAM decomposition and the
data-dependent QROM baseline, plus composition back into permutation tables
and JSON/QASM export."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .permutation import PermutationTable
from .registers import (
    DEFAULT_QUBIT_CAP,
    MemoryConfig,
    QramParams,
    addr_qubit,
    mem_qubit,
    out_qubit,
    validate_memory,
)


@dataclass(frozen=True)
class McxGate:
    """One multi-controlled X.  pos_controls fire on |1>, neg_controls on |0>."""

    pos_controls: frozenset[int]
    neg_controls: frozenset[int]
    target: int

    def __post_init__(self):
        if self.pos_controls & self.neg_controls:
            raise ValueError("positive and negative controls overlap")
        if self.target in self.pos_controls or self.target in self.neg_controls:
            raise ValueError("target overlaps a control")

    @property
    def n_controls(self) -> int:
        return len(self.pos_controls) + len(self.neg_controls)


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    gates: tuple[McxGate, ...]

    def __post_init__(self):
        for g in self.gates:
            positions = g.pos_controls | g.neg_controls | {g.target}
            if min(positions) < 0 or max(positions) >= self.n_qubits:
                raise ValueError(f"gate {g} out of range for {self.n_qubits} qubits")


def decompose_qram(params: QramParams) -> Circuit:
    """The N*K-gate decomposition of the full operator.

    Gate (a, j) has address controls selecting addr == a (positive where bit b
    of a is 1, negative otherwise), a positive control on the memory qubit
    holding bit j of word a, and targets output bit j.  Order is address-major,
    bit-minor; the gates commute so order only matters for export stability.
    """
    gates = []
    for a in range(params.n_addresses):
        addr_pos = frozenset(addr_qubit(params, b)
                             for b in range(params.addr_qubits) if (a >> b) & 1)
        addr_neg = frozenset(addr_qubit(params, b)
                             for b in range(params.addr_qubits) if not (a >> b) & 1)
        for j in range(params.word_bits):
            gates.append(McxGate(
                pos_controls=addr_pos | {mem_qubit(params, a, j)},
                neg_controls=addr_neg,
                target=out_qubit(params, j),
            ))
    return Circuit(params.total_qubits, tuple(gates))


def decompose_qrom(params: QramParams, data: MemoryConfig) -> Circuit:
    """Data-dependent baseline on address + output qubits only.

    A gate exists exactly where a data bit is 1; gate count equals the total
    popcount of the data words.
    """
    validate_memory(params, data)
    n_qubits = params.addr_qubits + params.word_bits
    gates = []
    for a, w in enumerate(data.words):
        addr_pos = frozenset(addr_qubit(params, b)
                             for b in range(params.addr_qubits) if (a >> b) & 1)
        addr_neg = frozenset(addr_qubit(params, b)
                             for b in range(params.addr_qubits) if not (a >> b) & 1)
        for j in range(params.word_bits):
            if (w >> j) & 1:
                gates.append(McxGate(addr_pos, addr_neg, out_qubit(params, j)))
    return Circuit(n_qubits, tuple(gates))


def apply_gate_indices(gate: McxGate, indices: np.ndarray) -> np.ndarray:
    """Basis action of an MCX on an array of indices: flip the target bit
    where all positive-control bits are 1 and all negative-control bits are 0."""
    pos_mask = sum(1 << q for q in gate.pos_controls)
    neg_mask = sum(1 << q for q in gate.neg_controls)
    active = ((indices & pos_mask) == pos_mask) & ((indices & neg_mask) == 0)
    return indices ^ (active.astype(np.int64) << gate.target)


def gate_to_permutation(gate: McxGate, n_qubits: int) -> PermutationTable:
    indices = np.arange(1 << n_qubits, dtype=np.int64)
    return PermutationTable(apply_gate_indices(gate, indices))


def compose(circuit: Circuit, qubit_cap: int = DEFAULT_QUBIT_CAP) -> PermutationTable:
    """Apply the circuit's gates in temporal order to every basis state."""
    if circuit.n_qubits > qubit_cap:
        raise ValueError(
            f"{circuit.n_qubits} qubits exceeds cap {qubit_cap} for composition")
    indices = np.arange(1 << circuit.n_qubits, dtype=np.int64)
    for gate in circuit.gates:
        indices = apply_gate_indices(gate, indices)
    return PermutationTable(indices)


def gate_count_report(params: QramParams) -> dict:
    """Gate counts: the fixed decomposition, the worst-case baseline, and an
    order-of-magnitude 4^n figure for generic unitary synthesis (an estimate,
    not an exact count)."""
    return {
        "universal": params.n_addresses * params.word_bits,
        "qrom_max": params.n_addresses * params.word_bits,
        "generic_estimate": 4 ** params.total_qubits,
    }


# -- export ------------------------------------------------------------------

def export_circuit(circuit: Circuit, format: str) -> str:
    if format == "json":
        return _to_json(circuit)
    if format == "qasm":
        return _to_qasm(circuit)
    raise ValueError(f"unknown format {format!r}; expected 'json' or 'qasm'")


def _to_json(circuit: Circuit) -> str:
    gates = [
        {
            "pos": sorted(g.pos_controls),
            "neg": sorted(g.neg_controls),
            "target": g.target,
        }
        for g in circuit.gates
    ]
    return json.dumps({"n_qubits": circuit.n_qubits, "gates": gates}, indent=2)


def parse_circuit_json(text: str) -> Circuit:
    obj = json.loads(text)
    gates = tuple(
        McxGate(frozenset(g["pos"]), frozenset(g["neg"]), g["target"])
        for g in obj["gates"]
    )
    return Circuit(obj["n_qubits"], gates)


def _to_qasm(circuit: Circuit) -> str:
    """OpenQASM 3 text.  Negative controls are realized by conjugating the
    controlled-X with X on those qubits."""
    lines = ["OPENQASM 3.0;", f"qubit[{circuit.n_qubits}] q;"]
    for g in circuit.gates:
        neg = sorted(g.neg_controls)
        controls = sorted(g.pos_controls | g.neg_controls)
        for q in neg:
            lines.append(f"x q[{q}];")
        if controls:
            args = ", ".join(f"q[{q}]" for q in controls + [g.target])
            lines.append(f"ctrl({len(controls)}) @ x {args};")
        else:
            lines.append(f"x q[{g.target}];")
        for q in neg:
            lines.append(f"x q[{q}];")
    return "\n".join(lines) + "\n"
