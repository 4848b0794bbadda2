"""Register layout and basis-index semantics for the universal QRAM operator.

Index convention (fixed once, used everywhere): the memory register occupies
the most-significant bits, the address register sits below it, and the output
register takes the least-significant K bits,

    index = mem_index * (N * 2^K) + addr * 2^K + y

where mem_index = sum_a words[a] * 2^((N-1-a)*K), i.e. words[0] is the most
significant word and bit j of a word carries weight 2^j.  Qubit p corresponds
to bit weight 2^p of the index, which pins down every gate position below.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_QUBIT_CAP = 24


@dataclass(frozen=True)
class QramParams:
    """Validated (N, K) pair with all derived register sizes."""

    n_addresses: int
    word_bits: int
    addr_qubits: int
    out_qubits: int
    mem_qubits: int
    total_qubits: int

    @property
    def hilbert_dim(self) -> int:
        return 1 << self.total_qubits

    @property
    def block_size(self) -> int:
        """Dimension of one memory block: N * 2^K."""
        return self.n_addresses << self.word_bits

    @property
    def n_blocks(self) -> int:
        return 1 << self.mem_qubits


@dataclass(frozen=True)
class MemoryConfig:
    """The N stored words, each an integer in [0, 2^K)."""

    words: tuple[int, ...]

    @classmethod
    def from_text(cls, text: str) -> "MemoryConfig":
        """Parse the CLI form: comma-separated decimal words, e.g. '1,0,3,2'."""
        try:
            words = tuple(int(w) for w in text.split(","))
        except ValueError:
            raise ValueError(f"bad memory config text: {text!r}")
        return cls(words)

    def to_text(self) -> str:
        return ",".join(str(w) for w in self.words)


def make_params(n_addresses: int, word_bits: int,
                qubit_cap: int = DEFAULT_QUBIT_CAP) -> QramParams:
    """Validate (N, K) and derive all register sizes.

    N must be a power of two >= 2, K >= 1, and the total qubit count must not
    exceed `qubit_cap` (explicit table construction is infeasible beyond it).
    """
    if n_addresses < 2 or n_addresses & (n_addresses - 1) != 0:
        raise ValueError(f"n_addresses must be a power of two >= 2, got {n_addresses}")
    if word_bits < 1:
        raise ValueError(f"word_bits must be >= 1, got {word_bits}")
    addr_qubits = n_addresses.bit_length() - 1
    total = addr_qubits + word_bits + n_addresses * word_bits
    if total > qubit_cap:
        raise ValueError(
            f"total_qubits {total} exceeds cap {qubit_cap}: "
            f"explicit construction infeasible")
    return QramParams(
        n_addresses=n_addresses,
        word_bits=word_bits,
        addr_qubits=addr_qubits,
        out_qubits=word_bits,
        mem_qubits=n_addresses * word_bits,
        total_qubits=total,
    )


def validate_memory(params: QramParams, mem: MemoryConfig) -> None:
    if len(mem.words) != params.n_addresses:
        raise ValueError(
            f"expected {params.n_addresses} words, got {len(mem.words)}")
    limit = 1 << params.word_bits
    for a, w in enumerate(mem.words):
        if not 0 <= w < limit:
            raise ValueError(f"word {a} = {w} out of range [0, {limit})")


# -- qubit position bridge (bit weight 2^p of the basis index) --------------

def out_qubit(params: QramParams, j: int) -> int:
    """Position of output bit j."""
    return j


def addr_qubit(params: QramParams, b: int) -> int:
    """Position of address bit b (weight 2^b within the address value)."""
    return params.out_qubits + b


def mem_qubit(params: QramParams, a: int, j: int) -> int:
    """Position of bit j of the word stored at address a."""
    k = params.word_bits
    return params.out_qubits + params.addr_qubits + (params.n_addresses - 1 - a) * k + j


# -- basis-index encoding ----------------------------------------------------

def mem_index(params: QramParams, mem: MemoryConfig) -> int:
    """Integer value of the memory register for the given words."""
    validate_memory(params, mem)
    k = params.word_bits
    idx = 0
    for w in mem.words:
        idx = (idx << k) | w
    return idx


def mem_from_index(params: QramParams, idx: int) -> MemoryConfig:
    k = params.word_bits
    mask = (1 << k) - 1
    n = params.n_addresses
    words = tuple((idx >> ((n - 1 - a) * k)) & mask for a in range(n))
    return MemoryConfig(words)


def encode_basis(params: QramParams, mem: MemoryConfig, addr: int, y: int) -> int:
    """Pack a (memory, address, output) triple into a basis index."""
    if not 0 <= addr < params.n_addresses:
        raise ValueError(f"address {addr} out of range [0, {params.n_addresses})")
    if not 0 <= y < (1 << params.word_bits):
        raise ValueError(f"output value {y} out of range")
    return mem_index(params, mem) * params.block_size + addr * (1 << params.word_bits) + y


def decode_basis(params: QramParams, index: int) -> tuple[MemoryConfig, int, int]:
    """Exact inverse of encode_basis."""
    if not 0 <= index < params.hilbert_dim:
        raise ValueError(f"index {index} out of range [0, {params.hilbert_dim})")
    y = index & ((1 << params.word_bits) - 1)
    rest = index >> params.word_bits
    addr = rest & (params.n_addresses - 1)
    midx = rest >> params.addr_qubits
    return mem_from_index(params, midx), addr, y


def qram_map(params: QramParams, index: int) -> int:
    """The semantic oracle: |mem, a, y> -> |mem, a, y XOR words[a]>."""
    mem, addr, y = decode_basis(params, index)
    return encode_basis(params, mem, addr, y ^ mem.words[addr])


def qram_map_all(params: QramParams) -> np.ndarray:
    """Vectorized oracle: qram_map applied to every basis index at once.

    Decodes each index arithmetically, so it stays an independent route from
    the block-structured table construction it is used to check.
    """
    dim = params.hilbert_dim
    k = params.word_bits
    out_mask = (1 << k) - 1
    idx = np.arange(dim, dtype=np.int64)
    y = idx & out_mask
    rest = idx >> k
    addr = rest & (params.n_addresses - 1)
    midx = rest >> params.addr_qubits
    shift = (params.n_addresses - 1 - addr) * k
    word = (midx >> shift) & out_mask
    return (idx ^ y) | (y ^ word)
