"""Graded lexicographic monomial engine.

A monomial in m variables is an exponent tuple (a_1, ..., a_m).  Monomials
are compared by total degree first; ties are broken lexicographically on
the exponents with the first variable most significant, so

    x_m < x_{m-1} < ... < x_1.

The rank of a monomial under this order is its index, starting at 0 for
the constant monomial.  Ranking and unranking are closed-form (prefix sums
of binomial coefficients); the iterator below is an independent successor
walk used by the brute-force set constructions.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Exponents = tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def binom(n: int, k: int) -> int:
    """C(n, k), defined as 0 whenever n < 0, k < 0 or k > n.

    The zero convention makes the degenerate design parameters (t = 0)
    evaluate cleanly without special cases.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_monomial(exponents: Iterable[int]) -> Exponents:
    """Validate and normalize an exponent sequence to a tuple."""
    a = tuple(exponents)
    if not a:
        raise ValueError("a monomial needs at least one variable")
    for x in a:
        if not isinstance(x, int) or x < 0:
            raise ValueError(f"exponents must be non-negative integers, got {a!r}")
    return a


def degree(a: Sequence[int]) -> int:
    """Total degree, the sum of the exponents."""
    return sum(a)


def grlex_key(a: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key realizing the graded lexicographic order."""
    return (sum(a), tuple(a))


def compare(u: Sequence[int], v: Sequence[int]) -> int:
    """Three-way comparison under the graded lexicographic order.

    Returns -1, 0 or 1.  Raises ValueError if the monomials do not live in
    the same number of variables.
    """
    if len(u) != len(v):
        raise ValueError(f"variable count mismatch: {len(u)} vs {len(v)}")
    ku, kv = grlex_key(u), grlex_key(v)
    if ku < kv:
        return LESS
    if ku > kv:
        return GREATER
    return EQUAL


def degree_start(d: int, m: int) -> int:
    """Smallest index of any degree-d monomial in m variables, C(m+d-1, m)."""
    if d < 0 or m < 1:
        raise ValueError("need d >= 0 and m >= 1")
    return binom(m + d - 1, m)


def _count_at_degree(nvars: int, d: int) -> int:
    # monomials in nvars variables of total degree exactly d
    if nvars == 0:
        return 1 if d == 0 else 0
    return binom(d + nvars - 1, nvars - 1)


def index_to_monomial(i: int, m: int) -> Exponents:
    """Unrank: the exponent tuple of the i-th monomial in m variables."""
    if i < 0 or m < 1:
        raise ValueError("need i >= 0 and m >= 1")
    # locate the degree block by doubling then bisecting on degree_start
    lo, hi = 0, 1
    while degree_start(hi, m) <= i:
        lo, hi = hi, 2 * hi
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if degree_start(mid, m) <= i:
            lo = mid
        else:
            hi = mid
    d = lo
    r = i - degree_start(d, m)
    exps = []
    rem = d
    for pos in range(m - 1):
        tail = m - pos - 1
        v = 0
        while True:
            c = _count_at_degree(tail, rem - v)
            if r < c:
                break
            r -= c
            v += 1
        exps.append(v)
        rem -= v
    exps.append(rem)
    return tuple(exps)


@lru_cache(maxsize=1 << 16)
def _rank(a: Exponents) -> int:
    m = len(a)
    d = sum(a)
    idx = binom(m + d - 1, m)
    rem = d
    for pos in range(m - 1):
        tail = m - pos - 1
        for v in range(a[pos]):
            idx += _count_at_degree(tail, rem - v)
        rem -= a[pos]
    return idx


def monomial_to_index(a: Iterable[int]) -> int:
    """Rank: the index of a monomial, by prefix sums of binomials."""
    return _rank(as_monomial(a))


def iter_monomials(m: int) -> Iterator[Exponents]:
    """Yield exponent tuples of all monomials in m variables, in order.

    The generator never terminates; position in the stream equals the
    monomial index.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    a = [0] * m
    while True:
        yield tuple(a)
        _advance(a, m)


def _advance(a: list[int], m: int) -> None:
    # in-place successor under the graded lexicographic order
    if m == 1:
        a[0] += 1
        return
    last = a[m - 1]
    if last > 0:
        a[m - 2] += 1
        a[m - 1] = last - 1
        return
    k = m - 2
    while k >= 0 and a[k] == 0:
        k -= 1
    if k <= 0:
        # (d, 0, ..., 0) ends its degree; restart at x_m^(d+1)
        d = a[0]
        a[0] = 0
        a[m - 1] = d + 1
        return
    rest = a[k] - 1
    a[k] = 0
    a[k - 1] += 1
    a[m - 1] = rest


def divisor_count(a: Iterable[int]) -> int:
    """Number of monomial divisors: the product of (a_l + 1)."""
    n = 1
    for x in as_monomial(a):
        n *= x + 1
    return n


def divisor_count_enumerated(a: Iterable[int]) -> int:
    """Divisor count by exhaustive enumeration of the divisor box.

    Independent of the product formula on purpose; kept as the oracle the
    fast path is tested against.
    """
    a = as_monomial(a)
    return sum(1 for _ in itertools.product(*(range(x + 1) for x in a)))
