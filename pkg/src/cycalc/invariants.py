"""Invariants of the Calabi-Yau double cover from data on the quotient.

For a Picard-rank-one quotient ``Y`` with class-group generator ``H'``,
``d = |H'^3|``, ``N`` points of type ``1/2(1,1,1)`` and branch surface
``S_Y = s H'`` (so ``-K_Y = (s/2) H'``), the cover ``X`` has ``H = phi^* H'`` and

    H^3     = 2d
    H . c2  = (4/s)(24 - 3N/2) + (s^2/4) H^3
    e(X)    = 2 e(Y) - e(S) - N

The middle line comes from ``c2(X) = phi^* c2(Y) + R^2`` with ``R = (s/2) H``
the ramification class and ``-K_Y . c2(Y) = 24 - 3N/2``.  That lemma is not
proved here; it is used because it reproduces every classified row exactly.
The last line is Euler-characteristic additivity across the blow-up square:
``e(Xt) = 2 e(Yt) - e(B)`` with ``e(Xt) = e(X) + 2k``, ``e(Yt) = e(Y) + 2k`` and
``e(B) = e(S) + 3k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ._exact import Scalar, to_fraction
from .intersection import CoverDiagram, DivisorClass, SpaceModel, triple_product
from .riemann_roch import minus_K_dot_c2

#: Fano indices in the halved convention (``r_Y / 2``) that occur for quotients with
#: only ``1/2(1,1,1)`` points.
SUPPORTED_FANO_INDICES = frozenset(Fraction(x) for x in ("1/2", "1", "2", "3", "4", "5/2"))


@dataclass(frozen=True)
class QuotientData:
    d: Fraction
    s: int
    N: int
    euler_Y: Fraction | None = None
    c2_dot_Hprime: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "d", to_fraction(self.d))
        if self.d <= 0:
            raise ValueError(f"|H'^3| must be positive, got {self.d}")
        if self.s <= 0:
            raise ValueError(f"s must be positive, got {self.s}")
        if self.N < 0:
            raise ValueError(f"N must be non-negative, got {self.N}")
        if self.N == 0 and self.d.denominator != 1:
            raise ValueError("a smooth Fano quotient has integral degree")
        if self.euler_Y is not None:
            object.__setattr__(self, "euler_Y", to_fraction(self.euler_Y))
        if self.c2_dot_Hprime is None:
            object.__setattr__(self, "c2_dot_Hprime", Fraction(2, self.s) * minus_K_dot_c2(self.N))
        else:
            object.__setattr__(self, "c2_dot_Hprime", to_fraction(self.c2_dot_Hprime))

    def model(self) -> SpaceModel:
        """``Y`` as a one-generator :class:`SpaceModel` with ``c1 = (s/2) H'``."""
        return SpaceModel.build(
            "Y",
            ["H'"],
            {("H'", "H'", "H'"): self.d},
            c1={"H'": Fraction(self.s, 2)},
            c2={"H'": self.c2_dot_Hprime},
            half_points=self.N,
            euler=self.euler_Y,
        )

    def diagram(self) -> CoverDiagram:
        return CoverDiagram.build(self.model(), k=self.N, s=self.s)


def h3_of_cover(d: Scalar) -> Fraction:
    """``H^3 = 2 |H'^3|``."""
    d = to_fraction(d)
    if d <= 0:
        raise ValueError(f"|H'^3| must be positive, got {d}")
    return 2 * d


def hc2_of_cover(s: int, N: int, h3: Scalar) -> Fraction:
    if s == 0:
        raise ValueError("s must be non-zero")
    return Fraction(4, s) * minus_K_dot_c2(N) + Fraction(s * s, 4) * to_fraction(h3)


def surface_euler(space: SpaceModel, D: DivisorClass) -> Fraction:
    """Topological Euler number of a smooth surface ``S`` in ``|D|`` on ``space``.

    From ``c(T_S) = c(T)|_S / (1 + D|_S)``::

        e(S) = (c2 - D.c1 + D^2) . D

    The caller asserts that ``S`` is smooth and misses the singular points.
    """
    space.check(D)
    return space.c2_dot(D) - triple_product(space, D, D, space.c1) + triple_product(space, D, D, D)


def euler_of_cover(euler_Y: Scalar, euler_S: Scalar, N: int) -> Fraction:
    return 2 * to_fraction(euler_Y) - to_fraction(euler_S) - N


def s_from_fano_index(r_half: Scalar, cartier_multiple: int | None = None) -> int:
    """Involution index ``s`` from the Fano index ``r_Y / 2``.

    ``-2K_Y = r_Y H_Y`` with ``H_Y`` primitive Cartier; writing
    ``H_Y = m H'`` for the class-group generator gives ``s = r_Y m``.  When ``m``
    is not supplied it is the smallest value making ``s`` even (``s/2`` is the
    coefficient of the Weil divisor ``-K_Y``): 1 for integral indices and 2
    for the half-integral ones.
    """
    r = to_fraction(r_half)
    if r not in SUPPORTED_FANO_INDICES:
        raise ValueError(f"unsupported Fano index {r}")
    r_Y = 2 * r
    if r_Y.denominator != 1:
        raise ValueError(f"Fano index {r} is not a half-integer")
    m = cartier_multiple
    if m is None:
        m = 1 if r_Y.numerator % 2 == 0 else 2
    if m <= 0:
        raise ValueError("cartier_multiple must be positive")
    s = int(r_Y) * m
    if s % 2:
        raise ValueError(f"Fano index {r} with H_Y = {m} H' gives odd s = {s}")
    return s


def compute_invariants(
    s: int,
    N: int,
    d: Scalar,
    euler_Y: Scalar | None = None,
    euler_S: Scalar | None = None,
) -> dict[str, Any]:
    """``{h3, hc2}`` plus ``e`` (and ``euler_S``) when ``e(Y)`` is known.

    ``e(S)`` defaults to :func:`surface_euler` on ``S = s H'``.
    """
    q = QuotientData(to_fraction(d), int(s), int(N), euler_Y)
    h3 = h3_of_cover(q.d)
    out: dict[str, Any] = {"h3": h3, "hc2": hc2_of_cover(q.s, q.N, h3)}
    if euler_Y is not None:
        if euler_S is None:
            Y = q.model()
            euler_S = surface_euler(Y, q.s * Y.cls("H'"))
        out["euler_S"] = to_fraction(euler_S)
        out["e"] = euler_of_cover(q.euler_Y, euler_S, q.N)
    return out
