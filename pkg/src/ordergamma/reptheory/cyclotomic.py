"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis ``1, z, ..., z^(phi(N)-1)`` reduced
modulo the N-th cyclotomic polynomial.  Rational results collapse to
``int``/``Fraction`` so that the common integer-valued case stays cheap.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import cache
from numbers import Rational
from typing import Union


@cache
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num), "non-exact polynomial division"
    return q


@cache
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds z^k (0 <= k < n) written in the reduced power basis."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z, then reduce using z^deg = -sum phi_i z^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


Number = Union[int, Fraction, "Cyclotomic"]


class Cyclotomic:
    __slots__ = ("coeffs", "n")

    def __init__(self, n: int, coeffs: Iterable):
        self.n = n
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_powers(cls, n: int, powers: Mapping[int, Rational]) -> Number:
        """``sum_k powers[k] * z_n^k``; exponents are taken mod ``n``."""
        table = _reduction_table(n)
        acc = [0] * (len(table[0]))
        for k, c in powers.items():
            if c:
                for i, v in enumerate(table[k % n]):
                    if v:
                        acc[i] += c * v
        return cls(n, acc)._normalize()

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> Number:
        return cls.from_powers(n, {k: 1})

    def _normalize(self) -> Number:
        if not any(self.coeffs[1:]):
            c = self.coeffs[0] if self.coeffs else 0
            if isinstance(c, Fraction) and c.denominator == 1:
                return c.numerator
            return c
        return self

    def lift(self, m: int) -> Cyclotomic:
        """Re-express in Q(zeta_m) for ``m`` a multiple of ``n`` (unnormalized)."""
        if m == self.n:
            return self
        step = m // self.n
        assert step * self.n == m
        table = _reduction_table(m)
        acc = [0] * len(table[0])
        for k, c in enumerate(self.coeffs):
            if c:
                for i, v in enumerate(table[(k * step) % m]):
                    if v:
                        acc[i] += c * v
        return Cyclotomic(m, acc)

    def _binary(self, other, op):
        if isinstance(other, Cyclotomic):
            m = math.lcm(self.n, other.n)
            a, b = self.lift(m), other.lift(m)
            return Cyclotomic(m, [op(x, y) for x, y in zip(a.coeffs, b.coeffs)])._normalize()
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, (op(self.coeffs[0], other),) + tuple(op(x, 0) for x in self.coeffs[1:]))._normalize()
        return NotImplemented

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, [c * other for c in self.coeffs])._normalize()
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        m = math.lcm(self.n, other.n)
        a, b = self.lift(m).coeffs, other.lift(m).coeffs
        prod: dict[int, Rational] = {}
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = prod.get(i + j, 0) + x * y
        return Cyclotomic.from_powers(m, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, [Fraction(c) / other for c in self.coeffs])._normalize()
        return NotImplemented

    def conjugate(self) -> Number:
        """Image under z -> z^(-1)."""
        return Cyclotomic.from_powers(self.n, {(-k) % self.n: c for k, c in enumerate(self.coeffs) if c})

    def __eq__(self, other) -> bool:
        if isinstance(other, (Cyclotomic, int, Fraction)):
            d = self - other
            return not isinstance(d, Cyclotomic) and d == 0
        return NotImplemented

    # equal values may live in different fields, so no consistent hash exists cheaply
    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.n}^{k}")
        return " + ".join(terms) or "0"

    def to_complex(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.n), math.sin(2 * math.pi / self.n))
        return sum(complex(c) * z**k for k, c in enumerate(self.coeffs))


def conj(x: Number) -> Number:
    return x.conjugate() if isinstance(x, Cyclotomic) else x


def is_rational(x: Number) -> bool:
    return not isinstance(x, Cyclotomic)


def coefficient_vector(x: Number, n: int) -> tuple:
    """Power-basis coefficients of ``x`` inside Q(zeta_n) (``x`` must lie there)."""
    deg = len(cyclotomic_polynomial(n)) - 1
    if isinstance(x, Cyclotomic):
        return tuple(x.lift(n).coeffs)
    return (x,) + (0,) * (deg - 1)


def sort_key(x: Number, n: int) -> tuple:
    return tuple(Fraction(c) for c in coefficient_vector(x, n))


def from_coefficient_vector(n: int, vec: Iterable) -> Number:
    return Cyclotomic(n, [Fraction(c) if not isinstance(c, int) else c for c in vec])._normalize()
