"""Cross-verification of every closed form against its enumerating oracle.

Each check walks a grid of design points (m -> largest t), compares the
formula side with the brute-force side, and stops at the first mismatch.
The CLI ``verify`` command prints one line per check and exits nonzero if
anything disagrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from . import check_sets, formulas
from .monomials import (
    binom,
    compare,
    degree_start,
    divisor_count,
    divisor_count_enumerated,
    index_to_monomial,
    iter_monomials,
    monomial_to_index,
)

Grid = Mapping[int, int]

# keep the cheap structural checks from dominating large grids
ROUNDTRIP_BOUND = 2000
DIVISOR_BOUND = 1500
GROWTH_T_CAP = 25
BOUND_CHECK_T_CAP = 12


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def _grid_points(grid: Grid, t_start: int = 0):
    for m in sorted(grid):
        for t in range(t_start, grid[m] + 1):
            yield t, m


def _mismatch(t: int, m: int, expected, got) -> str:
    return f"t={t} m={m}: expected {expected}, got {got}"


def _check_standard_size(grid: Grid) -> CheckResult:
    cases = 0
    for t, m in _grid_points(grid):
        want = len(check_sets.standard_set(t, m))
        got = formulas.r_standard(t, m)
        cases += 1
        if got != want:
            return CheckResult("standard_size_formula", False, cases, _mismatch(t, m, want, got))
    return CheckResult("standard_size_formula", True, cases)


def _check_feng_rao_size(grid: Grid) -> CheckResult:
    cases = 0
    for t, m in _grid_points(grid):
        want = len(check_sets.feng_rao_set(t, m))
        got = formulas.r_feng_rao(t, m)
        cases += 1
        if got != want:
            return CheckResult("feng_rao_size_formula", False, cases, _mismatch(t, m, want, got))
    return CheckResult("feng_rao_size_formula", True, cases)


def _check_prefix_max_identities(grid: Grid) -> CheckResult:
    # prefix sizes equal their brute-forced maximal index plus one
    cases = 0
    for t, m in _grid_points(grid, t_start=1):
        for fn, max_fn in (
            (formulas.r_standard, check_sets.max_feng_rao_index),
            (formulas.r_generic_standard, check_sets.max_nonproduct_index),
        ):
            want = max_fn(t, m) + 1
            got = fn(t, m)
            cases += 1
            if got != want:
                return CheckResult("prefix_size_is_max_plus_one", False, cases, _mismatch(t, m, want, got))
    return CheckResult("prefix_size_is_max_plus_one", True, cases)


def _check_generic_standard_size(grid: Grid) -> CheckResult:
    cases = 0
    for t, m in _grid_points(grid):
        want = len(check_sets.generic_standard_set(t, m))
        got = formulas.r_generic_standard(t, m)
        cases += 1
        if got != want:
            return CheckResult("generic_standard_size_formula", False, cases, _mismatch(t, m, want, got))
    return CheckResult("generic_standard_size_formula", True, cases)


def _check_generic_improved_size(grid: Grid) -> CheckResult:
    cases = 0
    for t, m in _grid_points(grid):
        want = len(check_sets.generic_improved_set(t, m))
        got = formulas.r_generic_improved(t, m)
        cases += 1
        if got != want:
            return CheckResult("generic_improved_size_formula", False, cases, _mismatch(t, m, want, got))
    return CheckResult("generic_improved_size_formula", True, cases)


def _check_axis_power_equality(grid: Grid) -> CheckResult:
    # pure powers of the last variable admit no improvement
    cases = 0
    for t, m in _grid_points(grid, t_start=1):
        a = index_to_monomial(t, m)
        if any(a[:-1]):
            continue
        cases += 1
        r_star = formulas.r_generic_standard(t, m)
        r_tilde_star = formulas.r_generic_improved(t, m)
        if r_tilde_star != r_star:
            return CheckResult("axis_power_equality", False, cases, _mismatch(t, m, r_star, r_tilde_star))
    return CheckResult("axis_power_equality", True, cases)


def _layer(t: int, m: int, deg: int, ranks) -> list:
    out = []
    for a, i in ranks.items():
        if sum(a) == deg and check_sets._splits(a, t, ranks.__getitem__):
            out.append((i, a))
    out.sort()
    return out


def _case2_points(grid: Grid):
    for t, m in _grid_points(grid, t_start=1):
        a = index_to_monomial(t, m)
        if any(a[:-1]):
            yield t, m, a


def _check_layer_counts(grid: Grid) -> CheckResult:
    cases = 0
    for t, m, a in _case2_points(grid):
        w = sum(a)
        ranks = check_sets.rank_map(m, 2 * w + 1)
        counts = formulas.product_counts(a, t)
        even = len(_layer(t, m, 2 * w, ranks))
        odd = len(_layer(t, m, 2 * w + 1, ranks))
        cases += 1
        if (counts.even, counts.odd) != (even, odd):
            return CheckResult(
                "product_layer_counts", False, cases,
                _mismatch(t, m, (even, odd), (counts.even, counts.odd)),
            )
    return CheckResult("product_layer_counts", True, cases)


def _check_layer_membership(grid: Grid) -> CheckResult:
    cases = 0
    for t, m, a in _case2_points(grid):
        w = sum(a)
        ranks = check_sets.rank_map(m, 2 * w + 1)
        rank_of = ranks.__getitem__
        for b in ranks:
            d = sum(b)
            if d == 2 * w:
                want = check_sets._splits(b, t, rank_of)
                got = formulas.is_even_degree_product(b, a)
            elif d == 2 * w + 1:
                want = check_sets._splits(b, t, rank_of)
                got = formulas.is_odd_degree_product(b, a)
            else:
                continue
            cases += 1
            if got != want:
                return CheckResult(
                    "product_layer_membership", False, cases,
                    f"t={t} m={m} monomial={b}: expected {want}, got {got}",
                )
    return CheckResult("product_layer_membership", True, cases)


def _check_odd_layer_upward_closed(grid: Grid) -> CheckResult:
    # once a degree-(2w+1) monomial is a product, every later one is too
    cases = 0
    for t, m, a in _case2_points(grid):
        w = sum(a)
        ranks = check_sets.rank_map(m, 2 * w + 1)
        rank_of = ranks.__getitem__
        seen_member = False
        for b, _ in sorted(ranks.items(), key=lambda kv: kv[1]):
            if sum(b) != 2 * w + 1:
                continue
            member = check_sets._splits(b, t, rank_of)
            cases += 1
            if seen_member and not member:
                return CheckResult(
                    "odd_layer_upward_closed", False, cases,
                    f"t={t} m={m}: non-member {b} after a member",
                )
            seen_member = seen_member or member
    return CheckResult("odd_layer_upward_closed", True, cases)


def _check_count_consistency(grid: Grid) -> CheckResult:
    # prefix count minus the odd layer gives the prefix size; minus the
    # even layer again gives the improved size
    cases = 0
    for t, m, a in _case2_points(grid):
        w = sum(a)
        counts = formulas.product_counts(a, t)
        want_star = binom(2 * w + 1 + m, m) - counts.odd
        want_improved = want_star - counts.even
        got_star = formulas.r_generic_standard(t, m)
        got_improved = formulas.r_generic_improved(t, m)
        cases += 1
        if (got_star, got_improved) != (want_star, want_improved):
            return CheckResult(
                "count_consistency", False, cases,
                _mismatch(t, m, (want_star, want_improved), (got_star, got_improved)),
            )
    return CheckResult("count_consistency", True, cases)


def _is_sub(small, big) -> bool:
    it = iter(big)
    for x in small:
        for y in it:
            if y == x:
                break
            if y > x:
                return False
        else:
            return False
    return True


def _check_containment(grid: Grid) -> CheckResult:
    cases = 0
    for t, m in _grid_points(grid):
        fr = check_sets.feng_rao_set(t, m)
        st = check_sets.standard_set(t, m)
        gi = check_sets.generic_improved_set(t, m)
        gs = check_sets.generic_standard_set(t, m)
        ok = _is_sub(fr.indices, st.indices) and _is_sub(gi.indices, gs.indices)
        cases += 1
        if not ok:
            return CheckResult("set_containment", False, cases, f"t={t} m={m}: containment broken")
    return CheckResult("set_containment", True, cases)


def _check_growth_in_t(grid: Grid) -> CheckResult:
    cases = 0
    for m in sorted(grid):
        top = min(grid[m], GROWTH_T_CAP)
        for t in range(top):
            for build in (
                check_sets.feng_rao_set,
                check_sets.standard_set,
                check_sets.generic_improved_set,
                check_sets.generic_standard_set,
            ):
                cases += 1
                if not _is_sub(build(t, m).indices, build(t + 1, m).indices):
                    return CheckResult(
                        "growth_in_t", False, cases,
                        f"t={t} m={m}: {build(t, m).variant} not contained in its successor",
                    )
    return CheckResult("growth_in_t", True, cases)


def _check_prefix_shape(grid: Grid) -> CheckResult:
    cases = 0
    for t, m in _grid_points(grid):
        for build in (check_sets.standard_set, check_sets.generic_standard_set):
            s = build(t, m)
            cases += 1
            if list(s.indices) != list(range(len(s.indices))):
                return CheckResult("prefix_shape", False, cases, f"t={t} m={m}: {s.variant} is not a prefix")
    return CheckResult("prefix_shape", True, cases)


def _check_order_engine(grid: Grid) -> CheckResult:
    cases = 0
    for m in sorted(grid):
        prev = None
        for i, a in enumerate(iter_monomials(m)):
            if i >= ROUNDTRIP_BOUND:
                break
            cases += 1
            if monomial_to_index(a) != i:
                return CheckResult("order_engine", False, cases, f"m={m}: rank of {a} is not {i}")
            if index_to_monomial(i, m) != a:
                return CheckResult("order_engine", False, cases, f"m={m}: unrank of {i} is not {a}")
            d = sum(a)
            if not degree_start(d, m) <= i < degree_start(d + 1, m):
                return CheckResult("order_engine", False, cases, f"m={m}: index {i} outside its degree block")
            if prev is not None and compare(prev, a) != -1:
                return CheckResult("order_engine", False, cases, f"m={m}: order violated at index {i}")
            prev = a
        # successor of each pure power of the first variable
        for s in range(0, 21):
            j = monomial_to_index((s,) + (0,) * (m - 1))
            cases += 1
            if index_to_monomial(j + 1, m) != (0,) * (m - 1) + (s + 1,):
                return CheckResult("order_engine", False, cases, f"m={m}: successor law fails at degree {s}")
    return CheckResult("order_engine", True, cases)


def _check_divisor_count(grid: Grid) -> CheckResult:
    cases = 0
    for m in sorted(grid):
        for i, a in enumerate(iter_monomials(m)):
            if i >= DIVISOR_BOUND:
                break
            cases += 1
            want = divisor_count_enumerated(a)
            got = divisor_count(a)
            if got != want:
                return CheckResult("divisor_count", False, cases, f"m={m} monomial={a}: expected {want}, got {got}")
    return CheckResult("divisor_count", True, cases)


def _check_size_orderings(grid: Grid) -> CheckResult:
    # improving a family never adds checks
    cases = 0
    for t, m in _grid_points(grid):
        report = formulas.redundancy_report(t, m)
        cases += 1
        if report.r_tilde > report.r or report.r_tilde_star > report.r_star:
            return CheckResult(
                "size_orderings", False, cases,
                f"t={t} m={m}: improved size exceeds its prefix size",
            )
    return CheckResult("size_orderings", True, cases)


def _check_scan_bound(grid: Grid) -> CheckResult:
    # re-runs the generic scan one degree past its cutoff on small designs
    cases = 0
    for m in sorted(grid):
        for t in range(1, min(grid[m], BOUND_CHECK_T_CAP) + 1):
            cases += 1
            try:
                check_sets.generic_improved_set(t, m, verify_bound=True)
            except RuntimeError as exc:
                return CheckResult("generic_scan_bound", False, cases, f"t={t} m={m}: {exc}")
    return CheckResult("generic_scan_bound", True, cases)


_CHECKS: tuple[Callable[[Grid], CheckResult], ...] = (
    _check_standard_size,
    _check_feng_rao_size,
    _check_prefix_max_identities,
    _check_generic_standard_size,
    _check_generic_improved_size,
    _check_axis_power_equality,
    _check_layer_counts,
    _check_layer_membership,
    _check_odd_layer_upward_closed,
    _check_count_consistency,
    _check_containment,
    _check_growth_in_t,
    _check_prefix_shape,
    _check_size_orderings,
    _check_divisor_count,
    _check_order_engine,
    _check_scan_bound,
)


def run_checks(grid: Grid) -> list[CheckResult]:
    """Run every equivalence and invariant check over the grid."""
    for m, t_max in grid.items():
        if m < 1 or t_max < 0:
            raise ValueError("grid needs m >= 1 and t_max >= 0")
    return [check(grid) for check in _CHECKS]
