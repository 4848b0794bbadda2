import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uqram.permutation import (
    PermutationTable,
    build_block,
    build_permutation,
    count_constraints,
    is_involution,
    is_permutation,
    permutation_from_json,
    permutation_to_json,
    read_permutation_binary,
    unitarity_residual,
    verify_semantics,
    write_permutation_binary,
)
from uqram.registers import MemoryConfig, make_params, mem_index, qram_map

SMALL_PAIRS = [(2, 1), (2, 2), (2, 3), (4, 1), (4, 2), (8, 1)]


def brute_force_table(params):
    """Independent route: apply the semantic map index by index."""
    return np.array([qram_map(params, i) for i in range(params.hilbert_dim)])


def test_build_permutation_n2k1_block_structure():
    p = make_params(2, 1)
    t = build_permutation(p).targets
    # mem=[0,0] block: identity on 0..3
    assert t[0:4].tolist() == [0, 1, 2, 3]
    # mem=[1,0] block (indices 8..11): X on address 0, identity on address 1
    assert t[8:12].tolist() == [9, 8, 10, 11]


def test_build_permutation_n2k2_block_example():
    p = make_params(2, 2)
    t = build_permutation(p).targets
    base = mem_index(p, MemoryConfig((2, 1))) * p.block_size
    assert t[base + 0 * 4 + 0] == base + 0 * 4 + 2  # addr 0, y 0 -> y 2
    assert t[base + 1 * 4 + 0] == base + 1 * 4 + 1  # addr 1, y 0 -> y 1


@pytest.mark.parametrize("n,k", SMALL_PAIRS)
def test_build_permutation_matches_brute_force(n, k):
    p = make_params(n, k)
    assert np.array_equal(build_permutation(p).targets, brute_force_table(p))


def test_build_block_examples():
    p = make_params(2, 1)
    assert build_block(p, MemoryConfig((0, 1))).targets.tolist() == [0, 1, 3, 2]
    assert build_block(p, MemoryConfig((0, 0))).targets.tolist() == [0, 1, 2, 3]

    p = make_params(4, 1)
    assert build_block(p, MemoryConfig((1, 1, 1, 1))).targets.tolist() == \
        [1, 0, 3, 2, 5, 4, 7, 6]


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (2, 3), (2, 4), (4, 1), (4, 2), (8, 1)])
def test_block_is_slice_of_full_table_exhaustive(n, k):
    p = make_params(n, k)
    full = build_permutation(p).targets
    bs = p.block_size
    for midx in range(p.n_blocks):
        words = tuple((midx >> ((n - 1 - a) * k)) & (2**k - 1) for a in range(n))
        block = build_block(p, MemoryConfig(words)).targets
        base = midx * bs
        assert np.array_equal(full[base:base + bs] - base, block)


def test_block_is_slice_of_full_table_randomized():
    rng = np.random.default_rng(7)
    for n, k in [(8, 2), (16, 1)]:
        p = make_params(n, k)
        full = build_permutation(p).targets
        bs = p.block_size
        for midx in rng.integers(0, p.n_blocks, size=100):
            midx = int(midx)
            words = tuple((midx >> ((n - 1 - a) * k)) & (2**k - 1)
                          for a in range(n))
            block = build_block(p, MemoryConfig(words)).targets
            base = midx * bs
            assert np.array_equal(full[base:base + bs] - base, block)


def test_k1_blocks_are_identity_or_swap_pairs():
    p = make_params(4, 1)
    for midx in range(p.n_blocks):
        words = tuple((midx >> (3 - a)) & 1 for a in range(4))
        block = build_block(p, MemoryConfig(words)).targets
        for a in range(4):
            pair = block[2 * a:2 * a + 2].tolist()
            assert pair == ([2 * a + 1, 2 * a] if words[a] else [2 * a, 2 * a + 1])


def test_is_permutation():
    assert is_permutation(PermutationTable.identity(8))
    p = make_params(2, 2)
    assert is_permutation(build_permutation(p))
    bad = PermutationTable(np.array([0, 0, 2, 3]))
    assert not is_permutation(bad)
    out_of_range = PermutationTable(np.array([0, 1, 2, 4]))
    assert not is_permutation(out_of_range)


def test_is_involution():
    assert is_involution(PermutationTable.identity(8))
    assert is_involution(build_permutation(make_params(2, 1)))
    three_cycle = PermutationTable(np.array([1, 2, 0]))
    assert not is_involution(three_cycle)


def test_verify_semantics_pass_and_planted_fault():
    p = make_params(2, 1)
    t = build_permutation(p)
    assert verify_semantics(p, t) == {"checked": 16, "mismatches": 0}

    faulty = t.targets.copy()
    faulty[[2, 3]] = faulty[[3, 2]]
    assert verify_semantics(p, PermutationTable(faulty))["mismatches"] == 2


def test_verify_semantics_large():
    p = make_params(16, 1)
    report = verify_semantics(p, build_permutation(p))
    assert report == {"checked": 2_097_152, "mismatches": 0}


def test_verify_semantics_dimension_mismatch():
    p = make_params(2, 1)
    with pytest.raises(ValueError):
        verify_semantics(p, PermutationTable.identity(8))


def test_unitarity_residual():
    assert unitarity_residual(PermutationTable.identity(4)) == 0.0
    assert unitarity_residual(build_permutation(make_params(2, 1))) == 0.0
    r = unitarity_residual(build_permutation(make_params(4, 1)))
    assert r < 1e-10
    # non-permutation table has a visible residual
    assert unitarity_residual(PermutationTable(np.array([0, 0, 2, 3]))) >= 1.0


def test_unitarity_residual_guard():
    with pytest.raises(ValueError):
        unitarity_residual(PermutationTable.identity(1 << 14))


def test_count_constraints():
    p = make_params(2, 1)
    r = count_constraints(p, complete=True)
    assert (r.constrained_basis_count, r.unconstrained_basis_count,
            r.residual_real_params) == (16, 0, 0)
    r = count_constraints(p, complete=False)
    assert (r.constrained_basis_count, r.unconstrained_basis_count,
            r.residual_real_params) == (8, 8, 64)

    p = make_params(2, 2)
    r = count_constraints(p, complete=False)
    assert (r.constrained_basis_count, r.unconstrained_basis_count,
            r.residual_real_params) == (32, 96, 9216)
    assert r.constrained_basis_count + r.unconstrained_basis_count == p.hilbert_dim


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(16))))
def test_is_permutation_accepts_any_bijection(perm):
    assert is_permutation(PermutationTable(np.array(perm)))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 15), min_size=16, max_size=16))
def test_is_permutation_rejects_non_bijections(values):
    table = PermutationTable(np.array(values))
    assert is_permutation(table) == (len(set(values)) == 16)


def test_binary_export_roundtrip():
    t = build_permutation(make_params(4, 1))
    buf = io.BytesIO()
    write_permutation_binary(t, buf)
    raw = buf.getvalue()
    assert raw[:4] == b"UQRM"
    assert len(raw) == 16 + t.dim * 8
    buf.seek(0)
    assert read_permutation_binary(buf) == t


def test_json_export_roundtrip():
    t = build_permutation(make_params(2, 2))
    assert permutation_from_json(permutation_to_json(t)) == t
    with pytest.raises(ValueError):
        permutation_to_json(PermutationTable.identity(8192))
