"""Certified fixed-point counts for sign involutions on Fermat complete intersections.

The variety is ``{sum_i c_{k,i} x_i^{d_k} = 0, k = 1..r}`` in ``P^n`` and the
involution flips the sign of some coordinates.  Its fixed locus is the union
of the two coordinate strata ``P(negated)`` and ``P(kept)``; on each stratum the
system restricts to another Fermat system.

Two independent counts are made per stratum and must agree:

* **Groebner** -- in every affine chart the restricted ideal is checked to be
  zero-dimensional and transversal (the equations together with the maximal
  Jacobian minors generate the unit ideal).  A linear form ``l`` with no zero
  on the stratum's solution set is found, and the number of points is the
  number of standard monomials of ``I + (l - 1)``.
* **Enumeration** -- for unit-coefficient systems of degrees ``(2,)``,
  ``(4,)`` or ``(2, 4)`` every solution has coordinates in ``{0} U mu_24``
  (with ``A_i = x_i^2``, the conic and quartic force ``A`` to be a multiple
  of ``(1, w, w^2)`` with ``w^3 = 1``).  Candidates are tested exactly in
  ``Q(zeta_24)`` and each solution carries a non-zero Jacobian minor.  Other
  systems are solved numerically chart by chart instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Any, Sequence

import sympy as sp

from ._exact import to_fraction
from .cyclotomic import ORDER, Zeta24, determinant, projectively_equal
from .errors import CertificationError, NotZeroDimensionalError, SemiInvarianceError
from .weighted import InvolutionSpec, WeightedSpace, fixed_locus

NUMERIC_RESIDUAL = 1e-9
DEDUPE_DISTANCE = 1e-6
JACOBIAN_FLOOR = 1e-6
CYCLOTOMIC_PATTERNS = {(), (2,), (4,), (2, 4)}


@dataclass(frozen=True)
class FermatEquation:
    degree: int
    coeffs: tuple[Fraction, ...]

    def restrict(self, support: Sequence[int]) -> "FermatEquation":
        return FermatEquation(self.degree, tuple(self.coeffs[i] for i in support))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        return f"{self.degree}:" + ",".join(str(c) for c in self.coeffs)


@dataclass(frozen=True)
class FermatSystem:
    ambient_dim: int
    equations: tuple[FermatEquation, ...]
    signs: InvolutionSpec

    def __post_init__(self):
        n = self.ambient_dim
        if n < 0:
            raise ValueError("ambient dimension must be non-negative")
        if len(self.signs.signs) != n + 1:
            raise ValueError(f"need {n + 1} signs for P^{n}, got {len(self.signs.signs)}")
        for eq in self.equations:
            if eq.degree <= 0:
                raise ValueError(f"degree must be positive, got {eq.degree}")
            if len(eq.coeffs) != n + 1:
                raise ValueError(f"degree-{eq.degree} equation needs {n + 1} coefficients, got {len(eq.coeffs)}")
            if eq.is_zero():
                raise ValueError(f"degree-{eq.degree} equation is identically zero")
            chars = {self.signs.signs[i] ** eq.degree for i, c in enumerate(eq.coeffs) if c}
            if len(chars) > 1:
                bad = next(i for i, c in enumerate(eq.coeffs) if c and self.signs.signs[i] == -1)
                raise SemiInvarianceError(
                    f"x{bad}^{eq.degree} changes sign under the involution but other terms of the "
                    f"degree-{eq.degree} equation do not"
                )

    @classmethod
    def parse(cls, ambient: int, eqs: str, signs: str) -> "FermatSystem":
        """``eqs`` like ``"2:1,1,1,1,1,1;4:1,1,1,1,1,1"``; ``signs`` like ``"-,-,-,+,+,+"``."""
        equations = []
        for chunk in filter(None, (c.strip() for c in eqs.split(";"))):
            deg, _, coeffs = chunk.partition(":")
            if not coeffs:
                raise ValueError(f"equation {chunk!r} should look like degree:c0,c1,...")
            equations.append(FermatEquation(int(deg), tuple(to_fraction(c) for c in coeffs.split(","))))
        return cls(int(ambient), tuple(equations), InvolutionSpec.parse(signs))

    @property
    def is_identity(self) -> bool:
        return len(set(self.signs.signs)) == 1

    def space(self) -> WeightedSpace:
        return WeightedSpace.of([1] * (self.ambient_dim + 1), [f"x{i}" for i in range(self.ambient_dim + 1)])


@dataclass(frozen=True)
class PointCertificate:
    point: tuple[str, ...]
    minor_columns: tuple[int, ...]
    minor_value: str
    mode: str  # "cyclotomic" or "numeric"

    def to_json(self) -> dict[str, Any]:
        return {
            "point": list(self.point),
            "minor_columns": list(self.minor_columns),
            "minor_value": self.minor_value,
            "mode": self.mode,
        }


@dataclass(frozen=True)
class StratumCount:
    support: tuple[int, ...]
    degrees: tuple[int, ...]
    groebner_count: int
    enumeration_count: int
    enumeration_mode: str
    transversal: bool
    linear_form: tuple[int, ...]
    points: tuple[tuple[Any, ...], ...]
    certificates: tuple[PointCertificate, ...]

    @property
    def count(self) -> int:
        return self.groebner_count

    @property
    def bezout_consistent(self) -> bool:
        """Count equals the product of degrees (only meaningful for a complete intersection)."""
        return self.count == prod(self.degrees) and len(self.degrees) == len(self.support) - 1

    def to_json(self) -> dict[str, Any]:
        return {
            "support": [f"x{i}" for i in self.support],
            "degrees": list(self.degrees),
            "count": self.count,
            "groebner_count": self.groebner_count,
            "enumeration_count": self.enumeration_count,
            "enumeration_mode": self.enumeration_mode,
            "transversal": self.transversal,
            "bezout_consistent": self.bezout_consistent,
            "linear_form": list(self.linear_form),
        }


@dataclass(frozen=True)
class FixedPointCount:
    system: FermatSystem
    strata: tuple[StratumCount, ...] = ()
    identity: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def count(self) -> int | None:
        return None if self.identity else sum(s.count for s in self.strata)

    @property
    def points(self) -> list[tuple[Any, ...]]:
        return [p for s in self.strata for p in s.points]

    def to_json(self, with_points: bool = False) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "count": self.count,
            "identity": self.identity,
            "notes": list(self.notes),
            "strata": [s.to_json() for s in self.strata],
            "certificates": [c.to_json() for s in self.strata for c in s.certificates],
        }
        if with_points:
            doc["points"] = [[render(x) for x in p] for p in self.points]
        return doc


def render(x: Any) -> str:
    if isinstance(x, complex):
        return f"{x.real:.12g}{x.imag:+.12g}j"
    return str(x)


# -- path (a): Groebner ------------------------------------------------------


def _restricted(system: FermatSystem, support: Sequence[int]) -> list[FermatEquation]:
    return [r for r in (eq.restrict(support) for eq in system.equations) if not r.is_zero()]


def _polys(eqs: list[FermatEquation], symbols) -> list:
    return [
        sum((sp.Rational(c.numerator, c.denominator) * x**e.degree for c, x in zip(e.coeffs, symbols) if c), sp.Integer(0))
        for e in eqs
    ]


def _is_unit(G) -> bool:
    return len(G.exprs) == 1 and G.exprs[0] == 1


def _chart_checks(polys, symbols, support) -> tuple[bool, bool]:
    """(zero-dimensional, transversal) over all affine charts ``x_j = 1``."""
    m = len(symbols) - 1
    transversal = True
    for j, xj in enumerate(symbols):
        chart = [p.subs(xj, 1) for p in polys]
        rest = [x for x in symbols if x is not xj]
        if any(p.is_number and p != 0 for p in chart):
            continue
        chart = [p for p in chart if p != 0]
        if not rest:
            continue
        if not chart:
            return False, False
        G = sp.groebner(chart, *rest, order="grevlex")
        if _is_unit(G):
            continue
        if not G.is_zero_dimensional:
            return False, False
        jac = sp.Matrix([[sp.diff(p, x) for x in rest] for p in chart])
        minors = [jac.extract(list(rows), list(range(m))).det() for rows in itertools.combinations(range(len(chart)), m)]
        if not minors or not _is_unit(sp.groebner(chart + minors, *rest, order="grevlex")):
            transversal = False
    return True, transversal


def _standard_monomial_count(G, symbols) -> int:
    leads = [sp.Poly(g, *symbols).monoms(order="grevlex")[0] for g in G.exprs]
    seen, frontier, count = set(), [tuple(0 for _ in symbols)], 0
    while frontier:
        mono = frontier.pop()
        if mono in seen:
            continue
        seen.add(mono)
        if any(all(a >= b for a, b in zip(mono, lead)) for lead in leads):
            continue
        count += 1
        for i in range(len(symbols)):
            nxt = list(mono)
            nxt[i] += 1
            frontier.append(tuple(nxt))
    return count


def _avoiding_form(polys, symbols) -> tuple[int, ...]:
    for t in range(8):
        coeffs = tuple((i + 1) ** t if t else 1 for i in range(len(symbols)))
        ell = sum(c * x for c, x in zip(coeffs, symbols))
        ok = True
        for xj in symbols:
            chart = [p.subs(xj, 1) for p in polys + [ell]]
            if any(p.is_number and p != 0 for p in chart):
                continue
            rest = [x for x in symbols if x is not xj]
            chart = [p for p in chart if p != 0]
            if not rest or not chart or not _is_unit(sp.groebner(chart, *rest, order="grevlex")):
                ok = False
                break
        if ok:
            return coeffs
    raise CertificationError("no linear form avoiding the solution set among the candidates tried")


def _groebner_count(eqs: list[FermatEquation], support: Sequence[int]):
    symbols = sp.symbols([f"x{i}" for i in support])
    polys = _polys(eqs, symbols)
    if len(symbols) == 1:
        # P^0: the single point survives iff no restricted equation is left
        return (0 if polys else 1), True, (1,)
    zero_dim, transversal = _chart_checks(polys, symbols, support)
    if not zero_dim:
        return None, False, ()
    coeffs = _avoiding_form(polys, symbols)
    ell = sum(c * x for c, x in zip(coeffs, symbols))
    G = sp.groebner(polys + [ell - 1], *symbols, order="grevlex")
    if _is_unit(G):
        return 0, transversal, coeffs
    return _standard_monomial_count(G, symbols), transversal, coeffs


# -- path (b): cyclotomic enumeration / numeric solving ---------------------


def _jacobian_rows(eqs, values: list[Zeta24]) -> list[list[Zeta24]]:
    """Partial derivatives of each equation, evaluated at ``values``."""
    rows = []
    for e in eqs:
        row = []
        for c, x in zip(e.coeffs, values):
            row.append(x ** (e.degree - 1) * (c * e.degree) if c else Zeta24())
        rows.append(row)
    return rows


def _cyclotomic_points(eqs: list[FermatEquation], support: Sequence[int], n: int):
    m = len(support) - 1
    choices = [None] + list(range(ORDER))
    found = []
    for lead in range(len(support)):
        for tail in itertools.product(choices, repeat=m - lead):
            exps = [None] * lead + [0] + list(tail)
            vals = [Zeta24() if k is None else Zeta24.root(k) for k in exps]
            ok = True
            for e in eqs:
                total = Zeta24()
                for c, k in zip(e.coeffs, exps):
                    if c and k is not None:
                        total = total + Zeta24.root(k * e.degree) * c
                if not total.is_zero():
                    ok = False
                    break
            if not ok:
                continue
            cols = [i for i in range(len(support)) if i != lead]
            rows = [[r[i] for i in cols] for r in _jacobian_rows(eqs, vals)]
            minor = None
            for picked in itertools.combinations(range(len(rows)), m):
                d = determinant([rows[p] for p in picked])
                if not d.is_zero():
                    minor = (tuple(support[i] for i in cols), d)
                    break
            full = [Zeta24()] * (n + 1)
            for i, v in zip(support, vals):
                full[i] = v
            found.append((tuple(full), exps, minor))
    found.sort(key=lambda t: tuple(-1 if k is None else k for k in t[1]))
    points, certs = [], []
    for full, _, minor in found:
        if minor is None:
            raise CertificationError(f"no non-zero Jacobian minor at {[str(x) for x in full]}")
        points.append(full)
        certs.append(PointCertificate(tuple(str(x) for x in full), minor[0], str(minor[1]), "cyclotomic"))
    return points, certs


def _numeric_points(eqs: list[FermatEquation], support: Sequence[int], n: int):
    symbols = sp.symbols([f"x{i}" for i in support])
    polys = _polys(eqs, symbols)
    m = len(support) - 1
    raw: list[list[complex]] = []
    for lead in range(len(support)):
        sub = {symbols[i]: 0 for i in range(lead)}
        sub[symbols[lead]] = 1
        rest = list(symbols[lead + 1 :])
        chart = [p for p in (q.subs(sub) for q in polys) if p != 0]
        if any(p.is_number for p in chart):
            continue
        if not rest:
            sols = [()] if not chart else []
        else:
            sols = sp.solve_poly_system(chart, *rest) or []
        for sol in sols:
            vec = [0j] * len(support)
            vec[lead] = 1 + 0j
            for i, v in enumerate(sol):
                vec[lead + 1 + i] = complex(sp.N(v, 30))
            raw.append(vec)
    points, certs = [], []
    for vec in raw:
        scale = max(abs(v) for v in vec)
        normed = [v / scale for v in vec]
        resid = max((abs(sum(complex(c) * x**e.degree for c, x in zip(e.coeffs, normed))) for e in eqs), default=0.0)
        if resid >= NUMERIC_RESIDUAL:
            raise CertificationError(f"numeric residual {resid:.3g} exceeds {NUMERIC_RESIDUAL}")
        lead = next(i for i, v in enumerate(vec) if abs(v) > DEDUPE_DISTANCE)
        unit = [v / vec[lead] for v in vec]
        if any(max(abs(a - b) for a, b in zip(unit, q)) < DEDUPE_DISTANCE for q, _ in points):
            continue
        cols = [i for i in range(len(support)) if i != lead]
        rows = [[complex(c) * e.degree * unit[i] ** (e.degree - 1) for i, c in enumerate(e.coeffs)] for e in eqs]
        best = None
        for picked in itertools.combinations(range(len(rows)), m):
            mat = sp.Matrix([[rows[p][i] for i in cols] for p in picked])
            d = complex(mat.det()) if m else 1 + 0j
            if abs(d) > JACOBIAN_FLOOR:
                best = (tuple(support[i] for i in cols), d)
                break
        if best is None:
            raise CertificationError("numeric Jacobian is rank deficient at a solution")
        full = [0j] * (n + 1)
        for i, v in zip(support, unit):
            full[i] = v
        points.append((unit, PointCertificate(tuple(render(x) for x in full), best[0], render(best[1]), "numeric")))
    out_pts, out_certs = [], []
    for unit, cert in sorted(points, key=lambda t: [(round(v.real, 9), round(v.imag, 9)) for v in t[0]]):
        full = [0j] * (n + 1)
        for i, v in zip(support, unit):
            full[i] = v
        out_pts.append(tuple(full))
        out_certs.append(cert)
    return out_pts, out_certs


def _cyclotomic_supported(eqs: list[FermatEquation]) -> bool:
    degrees = tuple(sorted(e.degree for e in eqs))
    return degrees in CYCLOTOMIC_PATTERNS and all(c in (0, 1) for e in eqs for c in e.coeffs)


def count_fixed_points(system: FermatSystem) -> FixedPointCount:
    """Exact number of isolated fixed points, with per-stratum certificates.

    Raises :class:`NotZeroDimensionalError` if a stratum meets the variety in
    positive dimension and :class:`CertificationError` if the two counting
    paths disagree or a transversality/Jacobian certificate fails.
    """
    if system.is_identity:
        return FixedPointCount(system, (), True, ("involution is identity on P^n",))
    strata = fixed_locus(system.space(), system.signs)
    out = []
    for s in strata:
        eqs = _restricted(system, s.support)
        g_count, transversal, ell = _groebner_count(eqs, s.support)
        if g_count is None:
            names = ",".join(f"x{i}" for i in s.support)
            raise NotZeroDimensionalError(f"stratum P({names}) meets the variety in positive dimension", s.support)
        if g_count and not transversal:
            raise CertificationError(f"stratum {s.support}: intersection is not transversal")
        if _cyclotomic_supported(eqs):
            pts, certs = _cyclotomic_points(eqs, s.support, system.ambient_dim)
            mode = "cyclotomic"
        else:
            pts, certs = _numeric_points(eqs, s.support, system.ambient_dim)
            mode = "numeric"
        if len(pts) != g_count:
            raise CertificationError(
                f"stratum {s.support}: Groebner count {g_count} disagrees with {mode} enumeration {len(pts)}"
            )
        out.append(
            StratumCount(
                tuple(s.support),
                tuple(e.degree for e in eqs),
                g_count,
                len(pts),
                mode,
                transversal,
                ell,
                tuple(pts),
                tuple(certs),
            )
        )
    return FixedPointCount(system, tuple(out))


def list_fixed_points(system: FermatSystem, counted: FixedPointCount | None = None) -> list[tuple[Any, ...]]:
    """The certified points: :class:`Zeta24` coordinates or complex approximations.

    ``counted`` may carry an earlier :func:`count_fixed_points` result for ``system``.
    """
    result = counted if counted is not None and counted.system == system else count_fixed_points(system)
    if result.identity:
        raise NotZeroDimensionalError("involution is identity on P^n; every point is fixed")
    return result.points


def points_distinct(points: Sequence[Sequence[Any]]) -> bool:
    for p, q in itertools.combinations(points, 2):
        if isinstance(p[0], Zeta24):
            if projectively_equal(list(p), list(q)):
                return False
        elif max(abs(a - b) for a, b in zip(p, q)) < DEDUPE_DISTANCE:
            return False
    return True


def conic_quartic_system() -> FermatSystem:
    """Fermat quadric and quartic in ``P^5`` with the first three signs flipped."""
    return FermatSystem.parse(5, "2:1,1,1,1,1,1;4:1,1,1,1,1,1", "-,-,-,+,+,+")
