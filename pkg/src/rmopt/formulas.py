"""Closed-form sizes of the four check-set families.

With C(n, k) = 0 for n < k or n < 0 and with a = (a_1, ..., a_m) the
exponent tuple of the t-th monomial, w = a_1 + ... + a_m:

* standard:            r(t) = C(2t-1+m, m)
* feng_rao:            count of exponent tuples whose divisor count stays
                       below 2t+1 (no closed binomial form; counted by a
                       pruned recursion over the coordinates)
* generic_standard:    C(2w-1+m, m) when the t-th monomial is a pure power
                       of the last variable, else
                       C(2w+1+m, m) - sum_{k=1..m} C(2w - s_k + m-k, m-k)
* generic_improved:    equal to generic_standard in the pure-power case,
                       else smaller by the degree-2w product-layer count

where s_k is the sum of the first k exponents.  Every formula is checked
against the enumerating constructions in ``check_sets`` by the test suite
and the ``verify`` command.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .monomials import as_monomial, binom, index_to_monomial, monomial_to_index


def r_standard(t: int, m: int) -> int:
    """Size of the standard prefix set: C(2t-1+m, m)."""
    if t < 0 or m < 1:
        raise ValueError("need t >= 0 and m >= 1")
    return binom(2 * t - 1 + m, m)


@lru_cache(maxsize=None)
def _bounded_product_vectors(m: int, cap: int) -> int:
    # tuples of m positive integers with product <= cap
    if cap <= 0:
        return 0
    if m == 0:
        return 1
    return sum(_bounded_product_vectors(m - 1, cap // v) for v in range(1, cap + 1))


def r_feng_rao(t: int, m: int) -> int:
    """Number of monomials with fewer than 2t+1 divisors.

    Counts exponent tuples with prod(a_l + 1) <= 2t by recursing over the
    coordinates and flooring the remaining budget, so each coordinate stays
    within a_l <= 2t - 1.
    """
    if t < 0 or m < 1:
        raise ValueError("need t >= 0 and m >= 1")
    return _bounded_product_vectors(m, 2 * t)


def _last_axis_only(a: Sequence[int]) -> bool:
    # pure power of the last variable (vacuously true for m = 1)
    return all(x == 0 for x in a[:-1])


def odd_product_count(a: Iterable[int]) -> int:
    """Monomials of degree 2w+1 that factor over ranks >= rank(a).

    Closed form: sum_{k=1..m} C(2w - s_k + m - k, m - k) with s_k the sum
    of the first k exponents of a.
    """
    a = as_monomial(a)
    m = len(a)
    w = sum(a)
    total = 0
    acc = 0
    for k in range(1, m + 1):
        acc += a[k - 1]
        total += binom(2 * w - acc + m - k, m - k)
    return total


def even_product_count(a: Iterable[int]) -> int:
    """Monomials of degree 2w that factor over ranks >= rank(a).

    Closed form: 1, plus a double sum of binomials over coordinate pairs,
    plus the number of proper prefixes of a that do not already exhaust
    the degree.  Only meaningful when a is not a pure power of the last
    variable.
    """
    a = as_monomial(a)
    m = len(a)
    w = sum(a)
    prefix = list(itertools.accumulate(a))
    total = 1
    for k in range(1, m):
        for j in range(k, m):
            total += binom(2 * w - 2 - prefix[j - 1] - prefix[k - 1] + m - j, m - j)
    total += sum(1 for k in range(1, m) if w - prefix[k - 1] > 0)
    return total


def r_generic_standard(t: int, m: int) -> int:
    """Size of the generic prefix set (largest non-product index plus one)."""
    if t < 0 or m < 1:
        raise ValueError("need t >= 0 and m >= 1")
    a = index_to_monomial(t, m)
    w = sum(a)
    if _last_axis_only(a):
        return binom(2 * w - 1 + m, m)
    return binom(2 * w + 1 + m, m) - odd_product_count(a)


def r_generic_improved(t: int, m: int) -> int:
    """Size of the non-product set."""
    if t < 0 or m < 1:
        raise ValueError("need t >= 0 and m >= 1")
    a = index_to_monomial(t, m)
    if _last_axis_only(a):
        return r_generic_standard(t, m)
    return r_generic_standard(t, m) - even_product_count(a)


@dataclass(frozen=True)
class ProductCounts:
    """Sizes of the two product layers over ranks >= t.

    ``even`` counts the degree-2w products, ``odd`` the degree-(2w+1)
    products, where w is the degree of the t-th monomial.  Products of
    higher degree exist unconditionally and need no counting.
    """

    even: int
    odd: int


def product_counts(a: Iterable[int], t: int) -> ProductCounts:
    """Closed-form layer counts for the monomial a of index t.

    Only defined away from the pure-power case; there the layers collapse
    into the degree characterization and no counting is needed.
    """
    a = as_monomial(a)
    if monomial_to_index(a) != t:
        raise ValueError(f"monomial {a} does not have index {t}")
    if _last_axis_only(a):
        raise ValueError("layer counts do not apply to pure powers of the last variable")
    return ProductCounts(even=even_product_count(a), odd=odd_product_count(a))


def is_even_degree_product(b: Iterable[int], a: Iterable[int]) -> bool:
    """Membership of a degree-2w monomial b in the even product layer.

    Evaluates the prefix characterization directly: b is a product of two
    monomials ranked at or above rank(a) exactly when one of four exponent
    patterns against a holds.
    """
    a = as_monomial(a)
    b = as_monomial(b)
    m = len(a)
    if len(b) != m:
        raise ValueError("variable count mismatch")
    if sum(b) != 2 * sum(a):
        raise ValueError(f"degree of {b} must be twice the degree of {a}")
    if all(b[l] == 2 * a[l] for l in range(m)):
        return True
    for k in range(m - 1):
        if any(b[l] != 2 * a[l] for l in range(k)):
            continue
        if b[k] >= 2 * a[k] + 2:
            return True
        if b[k] != 2 * a[k] + 1:
            continue
        for j in range(k + 1, m - 1):
            if any(b[l] != a[l] for l in range(k + 1, j)):
                break
            if b[j] >= a[j] + 1:
                return True
        if all(b[l] == a[l] for l in range(k + 1, m - 1)) and b[m - 1] >= a[m - 1]:
            return True
    return False


def is_odd_degree_product(b: Iterable[int], a: Iterable[int]) -> bool:
    """Membership of a degree-(2w+1) monomial b in the odd product layer.

    Holds exactly when some prefix of b matches a and the next exponent
    exceeds a's.
    """
    a = as_monomial(a)
    b = as_monomial(b)
    m = len(a)
    if len(b) != m:
        raise ValueError("variable count mismatch")
    if sum(b) != 2 * sum(a) + 1:
        raise ValueError(f"degree of {b} must be twice the degree of {a} plus one")
    for k in range(m):
        if b[k] >= a[k] + 1:
            return True
        if b[k] != a[k]:
            return False
    return False


@dataclass(frozen=True)
class RedundancyReport:
    """The four redundancies for one design point (t, m)."""

    t: int
    m: int
    r: int
    r_tilde: int
    r_star: int
    r_tilde_star: int


def redundancy_report(t: int, m: int) -> RedundancyReport:
    """Evaluate all four closed forms at (t, m)."""
    return RedundancyReport(
        t=t,
        m=m,
        r=r_standard(t, m),
        r_tilde=r_feng_rao(t, m),
        r_star=r_generic_standard(t, m),
        r_tilde_star=r_generic_improved(t, m),
    )
