"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria complete.  Budgets stated alongside a criterion are asserted as
measured wall-clock time.
"""

import time

import pytest

from rmopt import check_sets, formulas, verify
from rmopt.check_sets import (
    feng_rao_set,
    generic_improved_set,
    generic_standard_set,
    has_product_split,
    standard_set,
)
from rmopt.cli import main
from rmopt.codes import check_matrix, code_summary, min_distance_bruteforce
from rmopt.gf import GF
from rmopt.monomials import (
    binom,
    degree_start,
    divisor_count,
    divisor_count_enumerated,
    index_to_monomial,
    iter_monomials,
    monomial_to_index,
)

GENERIC_GRID = {2: 200, 3: 80, 4: 40}


def _case2_grid():
    for m, t_max in GENERIC_GRID.items():
        for t in range(1, t_max + 1):
            a = index_to_monomial(t, m)
            if any(a[:-1]):
                yield t, m, a


def test_criterion_1_size_formulas_for_standard_and_feng_rao():
    start = time.perf_counter()
    cases = 0
    for m in (1, 2, 3, 4, 5):
        for t in range(26):
            assert formulas.r_standard(t, m) == len(standard_set(t, m)), (t, m)
            assert formulas.r_feng_rao(t, m) == len(feng_rao_set(t, m)), (t, m)
            cases += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    print(f"PASS criterion 1: standard/feng_rao formulas match enumeration "
          f"({cases} design points, {elapsed:.1f}s)")


def test_criterion_2_size_formulas_for_generic_families():
    start = time.perf_counter()
    cases = pure_powers = 0
    for m, t_max in GENERIC_GRID.items():
        for t in range(1, t_max + 1):
            assert formulas.r_generic_standard(t, m) == len(generic_standard_set(t, m)), (t, m)
            assert formulas.r_generic_improved(t, m) == len(generic_improved_set(t, m)), (t, m)
            cases += 1
            a = index_to_monomial(t, m)
            if not any(a[:-1]):
                pure_powers += 1
                assert formulas.r_generic_improved(t, m) == formulas.r_generic_standard(t, m), (t, m)
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0
    print(f"PASS criterion 2: generic formulas match enumeration "
          f"({cases} design points, {pure_powers} pure-power identities, {elapsed:.1f}s)")


def test_criterion_3_product_layer_counts_membership_and_closure():
    checked = 0
    for t, m, a in _case2_grid():
        w = sum(a)
        counts = formulas.product_counts(a, t)
        for deg, predicate, want_count in (
            (2 * w, formulas.is_even_degree_product, counts.even),
            (2 * w + 1, formulas.is_odd_degree_product, counts.odd),
        ):
            flags = []
            for i in range(degree_start(deg, m), degree_start(deg + 1, m)):
                b = index_to_monomial(i, m)
                oracle = has_product_split(i, t, m)
                assert predicate(b, a) == oracle, (t, m, b)
                flags.append(oracle)
                checked += 1
            assert sum(flags) == want_count, (t, m, deg)
            if deg == 2 * w + 1:
                # membership only ever switches on, never off again
                assert flags == sorted(flags), (t, m)
    print(f"PASS criterion 3: product layers verified on {checked} monomials")


def test_criterion_4_table_reproduces_the_m3_curves(capsys):
    code = main(["table", "--m", "3", "--t", "0..31", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,r,r_tilde,r_star,r_tilde_star"
    rows = [tuple(int(x) for x in line.split(",")) for line in lines[1:]]
    assert len(rows) == 32
    for t, r, r_tilde, r_star, r_tilde_star in rows:
        assert r == binom(2 * t + 2, 3)
        assert r_tilde <= r
        assert r_tilde_star <= r_star <= r
    assert rows[31][1] == 41664
    print("PASS criterion 4: 32-row table with the expected column orderings")


def test_criterion_5_divisor_count_formula():
    for m in (2, 3):
        for i, a in enumerate(iter_monomials(m)):
            if i >= 5000:
                break
            assert divisor_count(a) == divisor_count_enumerated(a), (m, a)
    print("PASS criterion 5: divisor counts match box enumeration (2 x 5000 indices)")


def test_criterion_6_rank_saturation_and_deficit_flag():
    saturated = 0
    for field in (GF(3), GF(2, 2), GF(5)):
        for variant in check_sets.VARIANTS:
            for t in range(9):
                summary = code_summary(variant, t, field, 2)
                if summary.max_exponent < field.q:
                    assert summary.redundancy == summary.checks, (field.q, variant, t)
                    assert not summary.rank_deficit
                    saturated += 1
    assert saturated >= 12
    deficit = code_summary("standard", 2, GF(2), 2)
    assert deficit.rank_deficit
    assert deficit.redundancy < deficit.checks
    print(f"PASS criterion 6: rank saturation on {saturated} codes; deficit flagged over GF(2)")


def test_criterion_7_design_distance_over_f3():
    start = time.perf_counter()
    for build in (standard_set, feng_rao_set):
        mat = check_matrix(build(1, 2), GF(3))
        assert min_distance_bruteforce(mat) >= 3
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"PASS criterion 7: brute-forced distance >= 3 for both t=1 codes ({elapsed:.2f}s)")


def test_criterion_8_order_engine_invariants():
    for m in (1, 2, 3, 4, 5):
        for i in range(100_000):
            a = index_to_monomial(i, m)
            assert monomial_to_index(a) == i, (m, i)
            d = sum(a)
            assert degree_start(d, m) <= i < degree_start(d + 1, m), (m, i)
        for s in range(21):
            j = monomial_to_index((s,) + (0,) * (m - 1))
            assert index_to_monomial(j + 1, m) == (0,) * (m - 1) + (s + 1,), (m, s)
    print("PASS criterion 8: bijection, bracketing and successor law (5 x 100000 indices)")


@pytest.mark.parametrize(
    "seam",
    ["r_generic_standard", "even_product_count", "odd_product_count"],
)
def test_criterion_9_seeded_mutations_are_caught(monkeypatch, seam):
    real = getattr(formulas, seam)
    monkeypatch.setattr(formulas, seam, lambda *args: real(*args) + 1)
    results = verify.run_checks(GENERIC_GRID)
    failed = [res for res in results if not res.passed]
    assert failed, seam
    details = " | ".join(res.detail for res in failed)
    assert "t=" in details and "m=" in details
    assert "expected" in details and "got" in details
    print(f"PASS criterion 9 [{seam}]: verify failed with counterexample: "
          f"{failed[0].detail}")
