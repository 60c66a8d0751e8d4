"""Exact arithmetic in the 24th cyclotomic field ``Q(zeta)``, ``zeta = exp(2 pi i / 24)``.

Elements are coefficient vectors on ``1, zeta, ..., zeta^7``; products are
reduced with ``Phi_24(x) = x^8 - x^4 + 1``, i.e. ``zeta^8 = zeta^4 - 1``.
Only ring operations are provided, which is all the fixed-point certificates
need (zero tests, Jacobian determinants, cross-multiplied projective equality).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import sympy as sp

ORDER = 24
DEGREE = 8  # phi(24)


def _reduce(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    c = list(coeffs)
    for k in range(len(c) - 1, DEGREE - 1, -1):
        top = c[k]
        if top:
            c[k] = Fraction(0)
            c[k - 4] += top
            c[k - 8] -= top
    c += [Fraction(0)] * (DEGREE - len(c))
    return tuple(c[:DEGREE])


@lru_cache(maxsize=None)
def _power_basis(k: int) -> tuple[Fraction, ...]:
    k %= ORDER
    return _reduce([Fraction(0)] * k + [Fraction(1)])


class Zeta24:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        self.coeffs = _reduce(c) if len(c) > DEGREE else tuple(c + [Fraction(0)] * (DEGREE - len(c)))

    @classmethod
    def root(cls, k: int) -> "Zeta24":
        """``zeta^k``."""
        return cls(_power_basis(k))

    @classmethod
    def rational(cls, q) -> "Zeta24":
        return cls([Fraction(q)])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _lift(self, other) -> "Zeta24":
        if isinstance(other, Zeta24):
            return other
        if isinstance(other, (int, Fraction)):
            return Zeta24.rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Zeta24([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Zeta24([-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        prod = [Fraction(0)] * (2 * DEGREE - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Zeta24(_reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("only non-negative powers are supported")
        out, base = Zeta24.rational(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def root_exponent(self) -> int | None:
        """``k`` if this element is ``zeta^k``, else None."""
        for k in range(ORDER):
            if self.coeffs == _power_basis(k):
                return k
        return None

    def to_sympy(self):
        z = sp.exp(2 * sp.pi * sp.I / ORDER)
        return sum((sp.Rational(c.numerator, c.denominator) * z**k for k, c in enumerate(self.coeffs) if c), sp.Integer(0))

    def __complex__(self):
        return complex(sp.N(self.to_sympy(), 30))

    def __str__(self):
        if self.is_zero():
            return "0"
        k = self.root_exponent()
        if k is not None:
            return {0: "1", 12: "-1"}.get(k, f"zeta24^{k}")
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*zeta24^{k}")
        return " + ".join(terms)

    __repr__ = __str__


def determinant(rows: list[list[Zeta24]]) -> Zeta24:
    """Laplace expansion; ring operations only."""
    n = len(rows)
    if n == 0:
        return Zeta24.rational(1)
    if n == 1:
        return rows[0][0]
    total = Zeta24()
    for j, a in enumerate(rows[0]):
        if a.is_zero():
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def projectively_equal(p: list[Zeta24], q: list[Zeta24]) -> bool:
    """``p ~ q`` in ordinary projective space: all 2x2 cross products vanish."""
    if len(p) != len(q) or all(x.is_zero() for x in p) or all(x.is_zero() for x in q):
        return False
    n = len(p)
    return all((p[i] * q[j] - p[j] * q[i]).is_zero() for i in range(n) for j in range(i + 1, n))
