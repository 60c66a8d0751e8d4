"""Exact scalar parsing and canonical rendering.

Rationals travel as ``Fraction`` internally and as ``"p/q"`` strings on the
wire (``q = 1`` renders as a bare integer). Floats are refused at the
boundary so that nothing inexact leaks into table validation.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Any, Union

Scalar = Union[int, Fraction]


def to_fraction(x: Any) -> Fraction:
    """Coerce ``x`` to a ``Fraction``; floats and bools are rejected."""
    if isinstance(x, bool):
        raise TypeError("bool is not an exact scalar")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(int(x.numerator), int(x.denominator))
    if isinstance(x, float):
        raise TypeError(f"refusing inexact float {x!r}")
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational literal")
        return Fraction(s)
    # sympy.Rational and friends
    p = getattr(x, "p", None)
    q = getattr(x, "q", None)
    if isinstance(p, int) and isinstance(q, int):
        return Fraction(p, q)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def render(x: Scalar) -> str:
    """Canonical ``"p/q"`` rendering (``"7"`` when the denominator is 1)."""
    return str(Fraction(x))


def as_int(x: Scalar) -> int:
    """Return ``x`` as an int, raising if it is not integral."""
    f = Fraction(x)
    if f.denominator != 1:
        raise ValueError(f"{f} is not an integer")
    return f.numerator
