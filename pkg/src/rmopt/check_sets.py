"""Brute-force construction of the four check-monomial set families.

Given a design error weight t, four sets of monomial indices define four
codes over any finite field:

* ``standard``: the contiguous prefix up to the last monomial with fewer
  than 2t+1 divisors; corrects every weight-t error pattern.
* ``feng_rao``: only the monomials with fewer than 2t+1 divisors; same
  correction capability with fewer checks.
* ``generic_standard``: the contiguous prefix up to the last monomial that
  is not a product of two monomials both ranked t or higher; corrects
  weight-t generic (independent) errors.
* ``generic_improved``: only the non-product monomials themselves.

Everything here works by exhaustive enumeration.  These sets double as the
independent oracles for the closed-form size formulas in ``formulas``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .monomials import Exponents, index_to_monomial, iter_monomials, monomial_to_index

VARIANTS = ("standard", "feng_rao", "generic_standard", "generic_improved")


@dataclass(frozen=True)
class CheckSet:
    """A finite set of monomial indices defining an evaluation code.

    ``indices`` is strictly increasing; the standard and generic_standard
    variants are contiguous prefixes starting at 0 and may carry a
    ``range`` to stay cheap for large designs.
    """

    variant: str
    t: int
    m: int
    indices: Sequence[int]

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.t < 0 or self.m < 1:
            raise ValueError("need t >= 0 and m >= 1")
        if isinstance(self.indices, range):
            if self.indices.step != 1 or self.indices.start < 0:
                raise ValueError("prefix sets must be 0-based unit ranges")
        else:
            ind = tuple(self.indices)
            object.__setattr__(self, "indices", ind)
            if ind and ind[0] < 0:
                raise ValueError("indices must be non-negative")
            if any(b <= a for a, b in zip(ind, ind[1:])):
                raise ValueError("indices must be strictly increasing")

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def max_index(self) -> int:
        if not self.indices:
            raise ValueError("empty check set has no maximal index")
        return self.indices[-1]


def _scan(m: int, max_degree: int) -> Iterator[tuple[int, Exponents]]:
    # (index, exponents) for every monomial of degree <= max_degree
    if max_degree < 0:
        return
    for i, a in enumerate(iter_monomials(m)):
        if sum(a) > max_degree:
            return
        yield i, a


def rank_map(m: int, max_degree: int) -> dict[Exponents, int]:
    """Exponents -> index for every monomial of degree <= max_degree."""
    return {a: i for i, a in _scan(m, max_degree)}


@lru_cache(maxsize=512)
def feng_rao_set(t: int, m: int) -> CheckSet:
    """All indices whose monomial has fewer than 2t+1 divisors.

    A degree-d monomial has at least d+1 divisors, so the scan stops at
    degree 2t-1; for t = 0 the set is empty.
    """
    if t < 0 or m < 1:
        raise ValueError("need t >= 0 and m >= 1")
    limit = 2 * t + 1
    picked = []
    for i, a in _scan(m, 2 * t - 1):
        n = 1
        for x in a:
            n *= x + 1
        if n < limit:
            picked.append(i)
    return CheckSet("feng_rao", t, m, tuple(picked))


def max_feng_rao_index(t: int, m: int) -> int:
    """Largest index whose monomial has fewer than 2t+1 divisors."""
    s = feng_rao_set(t, m)
    if not s.indices:
        raise ValueError(f"no monomial has fewer than {2 * t + 1} divisors")
    return s.max_index


def standard_set(t: int, m: int) -> CheckSet:
    """The contiguous prefix 0..max of the divisor-bounded set."""
    s = feng_rao_set(t, m)
    top = s.indices[-1] + 1 if s.indices else 0
    return CheckSet("standard", t, m, range(top))


def _splits(a: Exponents, t: int, rank_of: Callable[[Exponents], int]) -> bool:
    # does a factor as b * c with both ranks >= t?
    for b in itertools.product(*(range(x + 1) for x in a)):
        if rank_of(b) < t:
            continue
        c = tuple(x - y for x, y in zip(a, b))
        if rank_of(c) >= t:
            return True
    return False


def has_product_split(i: int, t: int, m: int) -> bool:
    """True if the i-th monomial is a product of two monomials of index >= t.

    Checks every divisor splitting exhaustively.
    """
    if i < 0 or t < 0:
        raise ValueError("need i >= 0 and t >= 0")
    return _splits(index_to_monomial(i, m), t, monomial_to_index)


@lru_cache(maxsize=512)
def generic_improved_set(t: int, m: int, verify_bound: bool = False) -> CheckSet:
    """All indices whose monomial is not a product of two index->=t factors.

    Any monomial of degree >= 2w+2, where w is the degree of the t-th
    monomial, splits into two factors of degree > w and hence of index > t,
    so the search stops at degree 2w+1.  With ``verify_bound`` the first
    degree past the cutoff is scanned too and asserted to contain products
    only.
    """
    if t < 0 or m < 1:
        raise ValueError("need t >= 0 and m >= 1")
    if t == 0:
        # z_i = z_i * z_0 makes every monomial a product
        return CheckSet("generic_improved", 0, m, ())
    entries: list[tuple[int, Exponents]] = []
    w = -1
    for i, a in enumerate(iter_monomials(m)):
        d = sum(a)
        if w >= 0 and d > 2 * w + 1 + (1 if verify_bound else 0):
            break
        entries.append((i, a))
        if i == t:
            w = d
    ranks = dict((a, i) for i, a in entries)
    rank_of = ranks.__getitem__
    picked = []
    for i, a in entries:
        if sum(a) > 2 * w + 1:
            if not _splits(a, t, rank_of):
                raise RuntimeError(
                    f"degree bound violated: index {i} past the cutoff is not a product"
                )
        elif not _splits(a, t, rank_of):
            picked.append(i)
    return CheckSet("generic_improved", t, m, tuple(picked))


def max_nonproduct_index(t: int, m: int) -> int:
    """Largest index whose monomial is not a product of two index->=t factors."""
    s = generic_improved_set(t, m)
    if not s.indices:
        raise ValueError("every monomial is a product when t = 0")
    return s.max_index


def generic_standard_set(t: int, m: int) -> CheckSet:
    """The contiguous prefix 0..max of the non-product set."""
    s = generic_improved_set(t, m)
    top = s.indices[-1] + 1 if s.indices else 0
    return CheckSet("generic_standard", t, m, range(top))


def check_set(variant: str, t: int, m: int) -> CheckSet:
    """Construct any of the four set families by name."""
    builders = {
        "standard": standard_set,
        "feng_rao": feng_rao_set,
        "generic_standard": generic_standard_set,
        "generic_improved": generic_improved_set,
    }
    if variant not in builders:
        raise ValueError(f"unknown variant {variant!r}; pick one of {VARIANTS}")
    return builders[variant](t, m)


def exponents(s: CheckSet) -> Iterator[Exponents]:
    """Exponent tuples of the set's monomials, in index order."""
    want = iter(s.indices)
    nxt = next(want, None)
    if nxt is None:
        return
    for i, a in enumerate(iter_monomials(s.m)):
        if i == nxt:
            yield a
            nxt = next(want, None)
            if nxt is None:
                return
