"""Riemann-Roch bookkeeping on the resolved quotient.

Resolving the quotient ``Y = X / rho`` at its ``1/2(1,1,1)`` points gives a
smooth threefold ``Yt`` with exceptional planes ``F_i`` (normal bundle
``O(-2)``).  With ``c1(Yt) = g^* c1(Y) - 1/2 sum F_i`` the holomorphic Euler
characteristic splits as

    chi(O_Yt) = (-K_Y . c2) / 24  +  sum_i  -(1/48) c2(Yt)|_{F_i}
              = (-K_Y . c2) / 24  +  k / 16.

The second term is where the number 16 comes from.  The first term vanishes
when the fixed locus is zero-dimensional (then ``2 K_Yt = sum F_i``).

:func:`minus_K_dot_c2` is a *derived* formula: it is the unique value of
``-K_Y . c2(Y)`` for which ``chi(O_Y) = 1`` with ``N`` points of type
``1/2(1,1,1)``.  Its correctness for the classified families is established
only by exact agreement with every table row (see ``cycalc.tables``); no
term-by-term comparison with an orbifold Riemann-Roch formula is claimed.

:func:`sixteen_point_derivation` replays the whole argument with the divisor
calculus of :mod:`cycalc.intersection` and returns a line-by-line trace.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from ._exact import Scalar, to_fraction
from .errors import InconsistentDiagramError

#: Normal twists of the exceptional planes: ``E_i|E_i = O(-1)`` upstairs and
#: ``F_i|F_i = O(-2)`` on the resolved quotient.
E_NORMAL_DEGREE = -1
F_NORMAL_DEGREE = -2

#: Contribution of one exceptional plane ``F_i`` to ``chi(O_Yt)``.
PER_POINT_CHI = Fraction(1, 16)


class FixedPointFreeWarning(UserWarning):
    """``chi = 0`` would mean a fixed-point-free involution, which cannot occur."""


class ExtrapolationWarning(UserWarning):
    """A normal twist other than -1 or -2 was requested."""


@dataclass(frozen=True)
class ChernRestriction:
    normal_degree: int
    c2_value: Fraction

    def __post_init__(self):
        if self.c2_value != 3 * self.normal_degree + 3:
            raise ValueError("c2 restriction must equal 3b + 3 on a plane with twist b")


def c2_restriction(normal_degree: int) -> Fraction:
    """Degree of ``c2`` of the ambient threefold restricted to an exceptional plane.

    Adjunction on ``P^2`` with normal bundle ``O(b)``::

        c(T)|_P = (1 + b h)(1 + 3h + 3h^2)  =>  c2|_P = 3b + 3.
    """
    b = int(normal_degree)
    if b not in (E_NORMAL_DEGREE, F_NORMAL_DEGREE):
        warnings.warn(f"normal twist {b} is outside the -1/-2 cases", ExtrapolationWarning, stacklevel=2)
    return ChernRestriction(b, Fraction(3 * b + 3)).c2_value


def chi_of_resolution(minus_K_dot_c2: Scalar, k: int) -> Fraction:
    """``chi(O_Yt)`` for a resolution with ``k`` exceptional ``O(-2)`` planes."""
    if k < 0:
        raise ValueError("k must be non-negative")
    per_plane = Fraction(-1, 48) * c2_restriction(F_NORMAL_DEGREE)
    return to_fraction(minus_K_dot_c2) / 24 + k * per_plane


def solve_isolated_count(chi_Y: Scalar) -> int:
    """Number of isolated fixed points forced by ``chi(O_Y)`` when ``2 K_Yt = sum F_i``.

    Raises :class:`InconsistentDiagramError` unless ``16 * chi`` is a
    non-negative integer.  A zero result is returned but flagged with
    :class:`FixedPointFreeWarning`: ``2 chi(O_Y) = chi(O_X) = 0`` contradicts
    ``chi(O_Y) = 1``.
    """
    chi = to_fraction(chi_Y)
    k = chi / PER_POINT_CHI
    if k.denominator != 1 or k < 0:
        raise InconsistentDiagramError(f"chi = {chi} gives k = {k}, not a non-negative integer")
    if k == 0:
        warnings.warn(
            "k = 0: a fixed-point-free non-Gorenstein involution would force chi(O_Y) = 0",
            FixedPointFreeWarning,
            stacklevel=2,
        )
    return int(k)


def minus_K_dot_c2(N: int) -> Fraction:
    """``-K_Y . c2(Y) = 24 - 3N/2`` for a quotient with ``N`` half-points and ``chi(O_Y) = 1``."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return Fraction(24) - Fraction(3, 2) * N


def sixteen_point_derivation(sample_ks: tuple[int, ...] = (1, 2, 3)) -> tuple[list[str], int]:
    """Derive ``k = 16`` from ``K_X = 0`` and ``chi(O_Y) = 1``.

    Each line of the returned trace records one identity; the numbers in it
    are recomputed from the divisor calculus on diagrams with zero branch
    surface and ``k`` in ``sample_ks`` (``chi`` is affine in ``k``, so three
    samples pin it down).
    """
    from . import intersection as ic

    trace = ["K_X = 0  (X is Calabi-Yau); fixed locus zero-dimensional, so S_Y = 0"]
    chis = {}
    for k in sample_ks:
        Y = ic.SpaceModel.build("Y", ["H'"], {("H'", "H'", "H'"): 1}, c1={}, c2={"H'": 0}, half_points=k)
        diagram = ic.CoverDiagram.build(Y, k=k, s=0)
        chain = ic.canonical_chain(diagram)
        if not chain.holds:
            raise InconsistentDiagramError(f"k = {k}: 2K_Yt + S_Yt != sum F_i")
        chis[k] = diagram.Yt.c2_dot(diagram.Yt.c1) / 24
        if k == sample_ks[-1]:
            Yt = diagram.Yt
            F = diagram.exceptional_F[0]
            trace.append(f"K_Xt = f^*K_X + 2 sum E_i = {chain.K_Xt_blowup}")
            trace.append(f"K_Xt = phi_t^*K_Yt + S_Xt + sum E_i = {chain.K_Xt_hurwitz}  (Hurwitz)")
            trace.append(f"phi_t_* K_Xt = {chain.pushed_blowup} = 2K_Yt + S_Yt + sum F_i")
            trace.append(f"2K_Yt + S_Yt = sum F_i:  {chain.lhs} = {chain.rhs}")
            trace.append(f"c1(Yt) = -K_Yt = {Yt.c1}  i.e. -1/2 sum F_i")
            trace.append(f"F_i|F_i = O(-2):  F_i^3 = {ic.triple_product(Yt, Yt.cls(F), Yt.cls(F), Yt.cls(F))}")
            trace.append(
                f"c2(Yt)|F_i = F_i|F_i . c1(F_i) + c2(F_i) = (-2)(3) + 3 = {c2_restriction(F_NORMAL_DEGREE)}"
            )
    listed = ", ".join(f"k={k}: {chi}" for k, chi in chis.items())
    trace.append(f"chi(O_Yt) = (1/24) c1(Yt).c2(Yt) = -(1/48) sum c2(Yt)|F_i  ->  {listed}")
    for k, chi in chis.items():
        if chi != chi_of_resolution(0, k):
            raise InconsistentDiagramError(f"k = {k}: chi = {chi}, expected {chi_of_resolution(0, k)}")
    trace.append("chi(O_Yt) = k/16")
    chi_Y = Fraction(1)
    trace.append(f"chi(O_Yt) = chi(O_Y) = 1 - 0 + 0 = {chi_Y}  (h^i(O_Y) = 0 for i > 0)")
    k = solve_isolated_count(chi_Y)
    trace.append(f"k = {k}")
    return trace, k
