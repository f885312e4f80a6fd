"""Materialize check sets as parity-check matrices over a finite field.

The code attached to a check set W is the orthogonal complement of the
span of the rows that evaluate each monomial of W at every point of the
q^m grid.  Rank, dimension and (on tiny instances) exact minimum distance
are computed by plain elimination and exhaustive codeword sweeps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import check_sets
from .check_sets import CheckSet
from .gf import GF, enumerate_points, max_cells
from .monomials import as_monomial, binom


@dataclass(frozen=True)
class EvaluationMatrix:
    """Rows of monomial evaluations over the point grid."""

    field: GF
    m: int
    rows: tuple[tuple[int, ...], ...]
    row_monomials: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.field.q**self.m


@dataclass(frozen=True)
class CodeSummary:
    """What a code designer consumes: size parameters of one code.

    ``checks`` counts the defining monomials, ``redundancy`` the
    independent ones; they diverge (``rank_deficit``) once some exponent
    reaches the field size, because x^q and x evaluate identically.
    """

    variant: str
    t: int
    q: int
    m: int
    n: int
    checks: int
    redundancy: int
    dimension: int
    max_exponent: int
    rank_deficit: bool


def evaluate_monomial(a, field: GF) -> tuple[int, ...]:
    """Evaluate a monomial at every grid point, with 0^0 = 1."""
    a = as_monomial(a)
    points = enumerate_points(field, len(a))
    out = []
    for pt in points:
        v = 1
        for x, exp in zip(pt, a):
            if exp:
                v = field.mul(v, field.pow(x, exp))
        out.append(v)
    return tuple(out)


def check_matrix(s: CheckSet, field: GF) -> EvaluationMatrix:
    """One evaluation row per monomial of the check set, in index order."""
    rows = tuple(evaluate_monomial(a, field) for a in check_sets.exponents(s))
    return EvaluationMatrix(
        field=field, m=s.m, rows=rows, row_monomials=tuple(s.indices)
    )


def _rref(rows: list[list[int]], field: GF) -> tuple[list[list[int]], list[int]]:
    # reduced row echelon form; returns the reduced rows and pivot columns
    a = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = field.inv(a[r][c])
        if inv != 1:
            a[r] = [field.mul(inv, x) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank_gf(mat: EvaluationMatrix) -> int:
    """Rank of the evaluation matrix over its field."""
    _, pivots = _rref([list(r) for r in mat.rows], mat.field)
    return len(pivots)


def null_space(mat: EvaluationMatrix) -> list[tuple[int, ...]]:
    """A basis of the code itself: all vectors orthogonal-by-construction
    to the evaluation rows, one basis vector per free column."""
    field = mat.field
    n = mat.n
    reduced, pivots = _rref([list(r) for r in mat.rows], field)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(reduced[i][fc])
        basis.append(tuple(v))
    return basis


def rm_index_bound(s: int, m: int) -> int:
    """Largest monomial index of total degree <= s: C(s+m, m) - 1.

    The prefix up to this index defines the degree-s Reed-Muller code.
    """
    if s < 0 or m < 1:
        raise ValueError("need s >= 0 and m >= 1")
    return binom(s + m, m) - 1


def min_distance_bruteforce(mat: EvaluationMatrix) -> int:
    """Exact minimum distance by sweeping every nonzero codeword."""
    field = mat.field
    basis = null_space(mat)
    k = len(basis)
    n = mat.n
    if k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    budget = max_cells()
    if field.q**k > budget:
        raise ValueError(f"codeword sweep {field.q}^{k} exceeds the cell budget {budget}")
    best = n + 1
    for coeffs in itertools.product(field.elements(), repeat=k):
        word = [0] * n
        live = False
        for c, vec in zip(coeffs, basis):
            if c:
                live = True
                word = [field.add(x, field.mul(c, y)) for x, y in zip(word, vec)]
        if not live:
            continue
        weight = sum(1 for x in word if x)
        if weight < best:
            best = weight
            if best == 1:
                break
    return best


def code_summary(variant: str, t: int, field: GF, m: int) -> CodeSummary:
    """Build the code for one design point and summarize it."""
    s = check_sets.check_set(variant, t, m)
    mat = check_matrix(s, field)
    redundancy = rank_gf(mat)
    max_exponent = 0
    for a in check_sets.exponents(s):
        max_exponent = max(max_exponent, max(a))
    return CodeSummary(
        variant=variant,
        t=t,
        q=field.q,
        m=m,
        n=mat.n,
        checks=len(s),
        redundancy=redundancy,
        dimension=mat.n - redundancy,
        max_exponent=max_exponent,
        rank_deficit=redundancy < len(s),
    )
