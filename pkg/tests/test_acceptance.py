"""Acceptance gate: one test per headline criterion, each printing a
pass/fail line.  Run with `pytest tests/test_acceptance.py -v -s`."""

import math
import random

import numpy as np
import pytest

from uqram.circuit import Circuit, compose, decompose_qram, decompose_qrom
from uqram.harness import DEFAULT_PAIRS, run_qrom_equivalence, run_verification_suite
from uqram.permutation import (
    build_block,
    build_permutation,
    count_constraints,
    unitarity_residual,
)
from uqram.registers import MemoryConfig, make_params
from uqram.simulator import run_grover


@pytest.fixture(scope="module")
def suite_rows():
    return run_verification_suite(DEFAULT_PAIRS)


def _report(name, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    assert ok


def test_criterion_1_full_campaign(suite_rows):
    ok = all(
        r.permutation_ok and r.involution_ok and r.semantics_mismatches == 0
        and r.composition_ok
        for r in suite_rows
    ) and len(suite_rows) == 10
    _report("criterion 1: all ten (N,K) rows pass every exact check", ok)


def test_criterion_2_unitarity_metric():
    r1 = unitarity_residual(build_permutation(make_params(2, 1)))
    r2 = unitarity_residual(build_permutation(make_params(4, 1)))
    ok = r1 < 1e-10 and r2 < 1e-10
    _report(f"criterion 2: unitarity residual < 1e-10 (got {r1}, {r2})", ok)


def test_criterion_3_gate_counts():
    ok = True
    for n, k in DEFAULT_PAIRS:
        p = make_params(n, k)
        c = decompose_qram(p)
        ok &= len(c.gates) == n * k
        ok &= all(g.n_controls == p.addr_qubits + 1 for g in c.gates)
    ok &= len(decompose_qram(make_params(4, 1)).gates) == 4
    _report("criterion 3: N*K gates with log2(N)+1 controls each", ok)


def test_criterion_4_construction_equivalence():
    ok = True
    rng = random.Random(0)
    for n, k in DEFAULT_PAIRS:
        p = make_params(n, k)
        circuit = decompose_qram(p)
        reference = build_permutation(p)
        ok &= compose(circuit) == reference
        if p.total_qubits <= 13:
            gates = list(circuit.gates)
            for _ in range(10):
                shuffled = gates[:]
                rng.shuffle(shuffled)
                ok &= compose(Circuit(p.total_qubits, tuple(shuffled))) == reference
    _report("criterion 4: composed circuit equals closed form, "
            "order-independent", ok)


def test_criterion_5_qrom_block_equivalence():
    ok = True
    for n, k in DEFAULT_PAIRS:
        p = make_params(n, k)
        report = run_qrom_equivalence(p, trials=100, seed=0)
        ok &= report["failures"] == 0
        if n * k <= 8:
            ok &= report["exhaustive"] and report["configs_checked"] == 2**(n * k)
        else:
            ok &= report["configs_checked"] >= 100
    _report("criterion 5: baseline circuits reproduce memory blocks", ok)


def test_criterion_6_grover_end_to_end():
    def closed_form(n, m, iters):
        return math.sin((2 * iters + 1) * math.asin(math.sqrt(m / n))) ** 2

    p4 = run_grover(make_params(4, 1), MemoryConfig((0, 0, 1, 0)), 1, 1)
    ok = abs(p4.probs[2] - 1.0) < 1e-9
    ok &= abs(p4.probs[2] - closed_form(4, 1, 1)) < 1e-9

    words = tuple(1 if a == 11 else 0 for a in range(16))
    p16 = run_grover(make_params(16, 1), MemoryConfig(words), 1, 3)
    ok &= abs(p16.probs[11] - 0.9613) < 1e-3
    ok &= abs(p16.probs[11] - closed_form(16, 1, 3)) < 1e-9
    _report(f"criterion 6: Grover success probabilities "
            f"({p4.probs[2]:.6f}, {p16.probs[11]:.6f})", ok)


def test_criterion_7_involution(suite_rows):
    ok = all(r.involution_ok for r in suite_rows)
    _report("criterion 7: operator is self-inverse for all ten pairs", ok)


def test_criterion_8_constraint_counting():
    ok = True
    for n, k in DEFAULT_PAIRS:
        p = make_params(n, k)
        complete = count_constraints(p, complete=True)
        ok &= complete.residual_real_params == 0
        ok &= complete.unconstrained_basis_count == 0
        ok &= complete.constrained_basis_count == p.hilbert_dim
        partial = count_constraints(p, complete=False)
        ok &= partial.constrained_basis_count == n * 2**(n * k)
        ok &= partial.unconstrained_basis_count == 2**(n * k) * n * (2**k - 1)
        ok &= partial.residual_real_params == partial.unconstrained_basis_count ** 2
        ok &= (partial.constrained_basis_count
               + partial.unconstrained_basis_count == p.hilbert_dim)
    _report("criterion 8: constraint counts (complete spec fully pinned)", ok)
