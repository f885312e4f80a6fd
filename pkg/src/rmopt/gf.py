"""Arithmetic in GF(p^e) with integer-encoded elements.

An element is an integer in [0, q) whose base-p digits are the
coefficients of a polynomial over Z_p, lowest degree first.  Extension
fields reduce modulo the first irreducible monic polynomial of degree e,
scanning candidates with the constant term varying fastest, so the
modulus is deterministic.  Desk scale only: q <= 2^16.
"""

from __future__ import annotations

import itertools
import os

MAX_ORDER = 1 << 16
DEFAULT_MAX_CELLS = 1 << 20


def max_cells() -> int:
    """Budget for q^m point grids and q^k codeword sweeps.

    Defaults to 2^20; the RM_OPT_MAX_CELLS environment variable overrides.
    """
    raw = os.environ.get("RM_OPT_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"RM_OPT_MAX_CELLS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("RM_OPT_MAX_CELLS must be positive")
    return value


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    # remainder of num by monic-leading den, coefficients mod p, low first
    out = list(num)
    dd = len(den) - 1
    lead_inv = pow(den[-1], -1, p)
    for i in range(len(out) - 1, dd - 1, -1):
        f = out[i] % p
        if f:
            f = f * lead_inv % p
            for j in range(dd + 1):
                out[i - dd + j] = (out[i - dd + j] - f * den[j]) % p
    return [c % p for c in out[:dd]]


def _is_irreducible(poly: list[int], p: int) -> bool:
    e = len(poly) - 1
    for d in range(1, e // 2 + 1):
        for k in range(p**d):
            div = _digits(k, p, d) + [1]
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


def _digits(x: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(x % p)
        x //= p
    return out


class GF:
    """The finite field with q = p^e elements."""

    def __init__(self, p: int, e: int = 1):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("need e >= 1")
        if p**e > MAX_ORDER:
            raise ValueError(f"field order {p}^{e} exceeds the {MAX_ORDER} guard")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = self._find_modulus()

    def _find_modulus(self) -> tuple[int, ...]:
        # first irreducible monic degree-e polynomial, constant term fastest
        p, e = self.p, self.e
        for k in range(p**e):
            cand = _digits(k, p, e) + [1]
            if e == 1 or _is_irreducible(cand, p):
                return tuple(cand)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def __repr__(self) -> str:
        return f"GF({self.p})" if self.e == 1 else f"GF({self.p}^{self.e})"

    def elements(self) -> range:
        return range(self.q)

    def coefficients(self, x: int) -> tuple[int, ...]:
        """Canonical coefficient vector of an element, lowest degree first."""
        self._check(x)
        return tuple(_digits(x, self.p, self.e))

    def _check(self, x: int) -> None:
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element of {self!r}")

    def _encode(self, coeffs: list[int]) -> int:
        x = 0
        for c in reversed(coeffs):
            x = x * self.p + c % self.p
        return x

    def add(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if self.e == 1:
            return (x + y) % self.p
        cx, cy = _digits(x, self.p, self.e), _digits(y, self.p, self.e)
        return self._encode([a + b for a, b in zip(cx, cy)])

    def neg(self, x: int) -> int:
        self._check(x)
        if self.e == 1:
            return (-x) % self.p
        return self._encode([-c for c in _digits(x, self.p, self.e)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if self.e == 1:
            return x * y % self.p
        cx, cy = _digits(x, self.p, self.e), _digits(y, self.p, self.e)
        prod = [0] * (2 * self.e - 1)
        for i, a in enumerate(cx):
            if a:
                for j, b in enumerate(cy):
                    prod[i + j] += a * b
        return self._encode(_poly_rem(prod, list(self.modulus), self.p))

    def inv(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self.pow(x, self.q - 2)

    def pow(self, x: int, n: int) -> int:
        """Square-and-multiply; negative exponents go through the inverse."""
        self._check(x)
        if n < 0:
            return self.pow(self.inv(x), -n)
        result = 1
        base = x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result


def enumerate_points(field: GF, m: int) -> list[tuple[int, ...]]:
    """All q^m points of the m-fold product space, last coordinate fastest."""
    if m < 1:
        raise ValueError("need m >= 1")
    n = field.q**m
    budget = max_cells()
    if n > budget:
        raise ValueError(f"point count {field.q}^{m} exceeds the cell budget {budget}")
    return list(itertools.product(field.elements(), repeat=m))
