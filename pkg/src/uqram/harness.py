"""Verification campaign: per-(N, K) structural checks, the data-dependent
baseline equivalence sweep, and report serialization."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

import numpy as np

from . import circuit as circ
from . import permutation as perm
from .registers import MemoryConfig, QramParams, make_params

# The ten (N, K) pairs of the headline verification campaign.
DEFAULT_PAIRS: tuple[tuple[int, int], ...] = (
    (2, 1), (2, 2), (2, 3), (2, 4),
    (4, 1), (4, 2), (4, 3),
    (8, 1), (8, 2),
    (16, 1),
)


@dataclass(frozen=True)
class VerificationRow:
    n_addresses: int
    word_bits: int
    total_qubits: int
    hilbert_dim: int
    permutation_ok: bool
    involution_ok: bool
    semantics_mismatches: int
    composition_ok: bool
    unitarity_residual: float | None
    wall_time: float

    @property
    def passed(self) -> bool:
        return (self.permutation_ok and self.involution_ok
                and self.semantics_mismatches == 0 and self.composition_ok)


def verify_pair(n: int, k: int) -> VerificationRow:
    start = time.perf_counter()
    params = make_params(n, k)
    table = perm.build_permutation(params)
    permutation_ok = perm.is_permutation(table)
    involution_ok = perm.is_involution(table)
    mismatches = perm.verify_semantics(params, table)["mismatches"]
    composed = circ.compose(circ.decompose_qram(params))
    composition_ok = composed == table
    residual = None
    if table.dim <= perm.DENSE_DIM_LIMIT:
        residual = perm.unitarity_residual(table)
    return VerificationRow(
        n_addresses=n,
        word_bits=k,
        total_qubits=params.total_qubits,
        hilbert_dim=params.hilbert_dim,
        permutation_ok=permutation_ok,
        involution_ok=involution_ok,
        semantics_mismatches=mismatches,
        composition_ok=composition_ok,
        unitarity_residual=residual,
        wall_time=time.perf_counter() - start,
    )


def run_verification_suite(pairs=DEFAULT_PAIRS) -> list[VerificationRow]:
    return [verify_pair(n, k) for n, k in pairs]


def run_qrom_equivalence(params: QramParams, trials: int = 100,
                         seed: int = 0) -> dict:
    """Check that composing the data-dependent baseline reproduces the memory
    block, exhaustively over all data configs when NK <= 8, otherwise over
    `trials` uniform random configs."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    nk = params.mem_qubits
    if nk <= 8:
        mem_indices = range(1 << nk)
    else:
        rng = np.random.default_rng(seed)
        mem_indices = rng.integers(0, 1 << nk, size=trials).tolist()
    failures = 0
    checked = 0
    for midx in mem_indices:
        words = _words_from_index(params, int(midx))
        data = MemoryConfig(words)
        composed = circ.compose(circ.decompose_qrom(params, data))
        if composed != perm.build_block(params, data):
            failures += 1
        checked += 1
    return {"configs_checked": checked, "failures": failures,
            "exhaustive": nk <= 8}


def _words_from_index(params: QramParams, midx: int) -> tuple[int, ...]:
    k = params.word_bits
    mask = (1 << k) - 1
    n = params.n_addresses
    return tuple((midx >> ((n - 1 - a) * k)) & mask for a in range(n))


# -- report serialization ----------------------------------------------------

def rows_to_json(rows: list[VerificationRow]) -> str:
    return json.dumps({
        "rows": [
            {
                "n": r.n_addresses,
                "k": r.word_bits,
                "qubits": r.total_qubits,
                "dim": r.hilbert_dim,
                "permutation": r.permutation_ok,
                "involution": r.involution_ok,
                "mismatches": r.semantics_mismatches,
                "composition": r.composition_ok,
                "residual": r.unitarity_residual,
                "seconds": r.wall_time,
            }
            for r in rows
        ],
        "all_pass": all(r.passed for r in rows),
    }, indent=2)


def rows_from_json(text: str) -> list[VerificationRow]:
    obj = json.loads(text)
    return [
        VerificationRow(
            n_addresses=r["n"],
            word_bits=r["k"],
            total_qubits=r["qubits"],
            hilbert_dim=r["dim"],
            permutation_ok=r["permutation"],
            involution_ok=r["involution"],
            semantics_mismatches=r["mismatches"],
            composition_ok=r["composition"],
            unitarity_residual=r["residual"],
            wall_time=r["seconds"],
        )
        for r in obj["rows"]
    ]


def rows_to_csv(rows: list[VerificationRow]) -> str:
    lines = ["n,k,qubits,dim,permutation,involution,mismatches,composition,"
             "residual,seconds"]
    for r in rows:
        residual = "" if r.unitarity_residual is None else repr(r.unitarity_residual)
        lines.append(
            f"{r.n_addresses},{r.word_bits},{r.total_qubits},{r.hilbert_dim},"
            f"{r.permutation_ok},{r.involution_ok},{r.semantics_mismatches},"
            f"{r.composition_ok},{residual},{r.wall_time:.6f}")
    return "\n".join(lines) + "\n"


def format_table(rows: list[VerificationRow]) -> str:
    header = (f"{'N':>3} {'K':>3} {'qubits':>7} {'dim':>10} {'perm':>5} "
              f"{'invol':>6} {'mismatch':>9} {'compose':>8} {'residual':>10} "
              f"{'seconds':>8}")
    lines = [header, "-" * len(header)]
    for r in rows:
        residual = "-" if r.unitarity_residual is None else f"{r.unitarity_residual:.1e}"
        lines.append(
            f"{r.n_addresses:>3} {r.word_bits:>3} {r.total_qubits:>7} "
            f"{r.hilbert_dim:>10} {str(r.permutation_ok):>5} "
            f"{str(r.involution_ok):>6} {r.semantics_mismatches:>9} "
            f"{str(r.composition_ok):>8} {residual:>10} {r.wall_time:>8.3f}")
    status = "ALL PASS" if all(r.passed for r in rows) else "FAILURES PRESENT"
    lines.append(status)
    return "\n".join(lines)
