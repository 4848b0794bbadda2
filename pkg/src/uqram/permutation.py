"""Closed-form construction of the universal QRAM unitary as a permutation table.

The full operator is a direct sum over memory configurations; each block is a
direct sum over addresses; each sub-block is a tensor product of I/X factors
on the output bits, one factor per bit of the stored word.  build_permutation
walks that structure directly and never consults the semantic oracle, so the
two can be checked against each other.
"""

from __future__ import annotations

import io
import json
import struct
from dataclasses import dataclass

import numpy as np

from .registers import MemoryConfig, QramParams, qram_map_all, validate_memory

DENSE_DIM_LIMIT = 1 << 13

_MAGIC = b"UQRM"
_HEADER = struct.Struct("<4sHH8s")
_FORMAT_VERSION = 1


@dataclass(eq=False)
class PermutationTable:
    """A permutation unitary stored as one target index per basis state."""

    targets: np.ndarray  # int64, shape (dim,)

    @property
    def dim(self) -> int:
        return len(self.targets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermutationTable):
            return NotImplemented
        return np.array_equal(self.targets, other.targets)

    @classmethod
    def identity(cls, dim: int) -> "PermutationTable":
        return cls(np.arange(dim, dtype=np.int64))


def build_permutation(params: QramParams) -> PermutationTable:
    """Materialize the full operator from the block formula.

    Sub-block a of every memory block applies X^(bit j of word a) to output
    bit j.  The loop runs address-major and bit-minor; within each (a, j) the
    update is vectorized across all memory blocks simultaneously, which is
    sound because sub-blocks with different (mem, a) act on disjoint index
    ranges.
    """
    targets = np.arange(params.hilbert_dim, dtype=np.int64)
    # view: [mem_index, address, output]
    view = targets.reshape(params.n_blocks, params.n_addresses, 1 << params.word_bits)
    midx = np.arange(params.n_blocks, dtype=np.int64)
    k = params.word_bits
    for a in range(params.n_addresses):
        shift = (params.n_addresses - 1 - a) * k
        for j in range(k):
            bit = (midx >> (shift + j)) & 1
            # X^bit on output bit j: flip where the memory bit is set.  The
            # low K bits of each target are the output value, so XOR there.
            view[:, a, :] ^= (bit << j)[:, None]
    return PermutationTable(targets)


def build_block(params: QramParams, mem: MemoryConfig) -> PermutationTable:
    """The block for one memory configuration: dimension N * 2^K."""
    validate_memory(params, mem)
    targets = np.arange(params.block_size, dtype=np.int64)
    view = targets.reshape(params.n_addresses, 1 << params.word_bits)
    for a, w in enumerate(mem.words):
        view[a, :] ^= w
    return PermutationTable(targets)


def is_permutation(table: PermutationTable) -> bool:
    """Exactly one target per basis state, checked in exact integer arithmetic."""
    t = table.targets
    if np.any(t < 0) or np.any(t >= table.dim):
        return False
    return bool(np.all(np.bincount(t, minlength=table.dim) == 1))


def is_involution(table: PermutationTable) -> bool:
    """True iff applying the permutation twice is the identity."""
    t = table.targets
    return bool(np.array_equal(t[t], np.arange(table.dim, dtype=np.int64)))


def verify_semantics(params: QramParams, table: PermutationTable) -> dict:
    """Compare every table entry against the semantic oracle.

    Covers every (memory, address, output) triple exactly once because the
    basis indices enumerate them bijectively.
    """
    if table.dim != params.hilbert_dim:
        raise ValueError(
            f"table dimension {table.dim} != hilbert dim {params.hilbert_dim}")
    expected = qram_map_all(params)
    mismatches = int(np.count_nonzero(table.targets != expected))
    return {"checked": table.dim, "mismatches": mismatches}


def unitarity_residual(table: PermutationTable) -> float:
    """max |UU^dag - I| over the densely materialized 0/1 matrix.

    Exact-integer checks are the primary verification; this exists to mirror
    the floating-point unitarity metric.  Guarded because dense storage is
    quadratic.
    """
    dim = table.dim
    if dim > DENSE_DIM_LIMIT:
        raise ValueError(
            f"dimension {dim} too large for dense unitarity check; "
            f"use is_permutation instead")
    u = np.zeros((dim, dim), dtype=np.float32)
    u[table.targets, np.arange(dim)] = 1.0
    residual = 0.0
    chunk = 1024
    for start in range(0, dim, chunk):
        stop = min(start + chunk, dim)
        prod = u[start:stop] @ u.T
        prod[np.arange(stop - start), np.arange(start, stop)] -= 1.0
        residual = max(residual, float(np.abs(prod).max()))
    return residual


@dataclass(frozen=True)
class ConstraintReport:
    """How much of the operator the input-output specification pins down."""

    constrained_basis_count: int
    unconstrained_basis_count: int
    residual_real_params: int


def count_constraints(params: QramParams, complete: bool) -> ConstraintReport:
    """Count constrained basis states and residual unitary freedom.

    The complete specification (all output values tested) fixes every basis
    state, leaving zero free parameters.  The incomplete one (only y=0 inputs)
    constrains N*2^(NK) states; the residual freedom is counted as d^2 real
    parameters for the unitary group on the unconstrained subspace.
    """
    dim = params.hilbert_dim
    if complete:
        return ConstraintReport(dim, 0, 0)
    constrained = params.n_addresses * params.n_blocks
    unconstrained = dim - constrained
    return ConstraintReport(constrained, unconstrained, unconstrained ** 2)


# -- export ------------------------------------------------------------------

def write_permutation_binary(table: PermutationTable, fileobj: io.IOBase) -> None:
    """Binary form: 16-byte header then dim little-endian u64 targets."""
    n_qubits = table.dim.bit_length() - 1
    if 1 << n_qubits != table.dim:
        raise ValueError("binary export requires a power-of-two dimension")
    fileobj.write(_HEADER.pack(_MAGIC, _FORMAT_VERSION, n_qubits, b"\x00" * 8))
    fileobj.write(table.targets.astype("<u8").tobytes())


def read_permutation_binary(fileobj: io.IOBase) -> PermutationTable:
    magic, version, n_qubits, _ = _HEADER.unpack(fileobj.read(_HEADER.size))
    if magic != _MAGIC:
        raise ValueError(f"bad magic {magic!r}")
    if version != _FORMAT_VERSION:
        raise ValueError(f"unsupported version {version}")
    targets = np.frombuffer(fileobj.read((1 << n_qubits) * 8), dtype="<u8")
    return PermutationTable(targets.astype(np.int64))


def permutation_to_json(table: PermutationTable) -> str:
    if table.dim > 4096:
        raise ValueError(f"JSON export limited to dim <= 4096, got {table.dim}")
    return json.dumps({"dim": table.dim, "targets": table.targets.tolist()})


def permutation_from_json(text: str) -> PermutationTable:
    obj = json.loads(text)
    targets = np.asarray(obj["targets"], dtype=np.int64)
    if len(targets) != obj["dim"]:
        raise ValueError("dim field does not match targets length")
    return PermutationTable(targets)
