"""Weighted projective spaces, diagonal involutions and their fixed loci.

A point ``x`` of ``P(w_0, ..., w_n)`` is fixed by the sign involution
``x_i -> sigma_i x_i`` iff there is a scalar ``lam`` with
``lam^{w_i} x_i = sigma_i x_i`` for every ``i``, i.e. ``lam^{w_i} = sigma_i`` on
the support of ``x``.  Such ``lam`` satisfies ``lam^{2 w_i} = 1`` for each
supported ``i``, so it is a root of unity of order dividing ``2 gcd(w_supp)``,
which divides ``2 lcm(w)``.  Enumerating the ``2 lcm(w)``-th roots of unity
therefore finds every witness.

Each witness ``lam`` cuts out a coordinate subspace ``I(lam)`` (the
coordinates with ``lam^{w_i} = sigma_i``).  Two such subspaces may meet at
points with extra stabiliser, e.g. ``(0,0,0,1,0)`` in ``P(1,1,1,2,5)`` lies on
both ``{t = 0}`` and ``{x = y = z = 0}``.  To get a genuine partition,
:func:`fixed_locus` returns one stratum per member ``J`` of the
intersection-closure of the ``I(lam)``: the points whose support lies in ``J``
but in no smaller member.

Roots of unity are stored as the angle ``a`` in ``lam = exp(2 pi i a)``, a
``Fraction`` in ``[0, 1)``, so witness checks are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Any, Iterable, Sequence

import sympy as sp
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from ._exact import to_fraction
from .errors import NotHypersurfaceError, SemiInvarianceError

DEFAULT_NAMES = ("x", "y", "z", "w", "t")
NUMERIC_RESIDUAL = 1e-9


@dataclass(frozen=True)
class WeightedSpace:
    weights: tuple[int, ...]
    coordinate_names: tuple[str, ...]

    @classmethod
    def of(cls, weights: Iterable[int], names: Iterable[str] | None = None) -> "WeightedSpace":
        w = tuple(int(x) for x in weights)
        if not w or any(x <= 0 for x in w):
            raise ValueError(f"weights must be positive integers, got {w}")
        if names is None:
            names = DEFAULT_NAMES[: len(w)] if len(w) <= len(DEFAULT_NAMES) else [f"x{i}" for i in range(len(w))]
        names = tuple(names)
        if len(names) != len(w) or len(set(names)) != len(names):
            raise ValueError("need one distinct coordinate name per weight")
        return cls(w, names)

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    def is_well_formed(self) -> bool:
        n = len(self.weights)
        if n == 1:
            return True
        return all(reduce(gcd, sub) == 1 for sub in itertools.combinations(self.weights, n - 1))

    def __str__(self):
        return f"P({','.join(map(str, self.weights))})"


@dataclass(frozen=True)
class InvolutionSpec:
    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1/-1, got {self.signs}")

    @classmethod
    def parse(cls, text: str) -> "InvolutionSpec":
        table = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
        try:
            return cls(tuple(table[tok.strip()] for tok in text.split(",")))
        except KeyError as exc:
            raise ValueError(f"bad sign {exc.args[0]!r}; use + or -") from None

    def apply(self, point: Sequence[Any]) -> tuple:
        if len(point) != len(self.signs):
            raise ValueError("point and involution have different lengths")
        return tuple(x if s == 1 else -x for s, x in zip(self.signs, point))

    def __str__(self):
        return ",".join("+" if s == 1 else "-" for s in self.signs)


def _sign_of_power(angle: Fraction, w: int) -> int | None:
    """``lam^w`` as +1/-1 for ``lam = exp(2 pi i angle)``, or None if neither."""
    a = (angle * w) % 1
    if a == 0:
        return 1
    if a == Fraction(1, 2):
        return -1
    return None


def _support(point: Sequence[Any]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(point) if not is_zero(x))


@dataclass(frozen=True)
class FixedStratum:
    """Points whose support lies in ``support`` but in none of ``excluded``.

    ``lam`` is the smallest witness angle; ``witnesses`` lists every angle
    valid on the whole stratum.  ``dimension`` is that of the closure
    ``P(w_support)``; ``kind`` predicts what it cuts on a hypersurface.
    """

    support: tuple[int, ...]
    lam: Fraction
    witnesses: tuple[Fraction, ...]
    dimension: int
    kind: str
    excluded: tuple[tuple[int, ...], ...] = ()

    def contains(self, point: Sequence[Any]) -> bool:
        supp = set(_support(point))
        if not supp or not supp <= set(self.support):
            return False
        return not any(supp <= set(ex) for ex in self.excluded)

    def witness_ok(self, space: WeightedSpace, inv: InvolutionSpec) -> bool:
        return all(
            _sign_of_power(a, space.weights[i]) == inv.signs[i] for a in self.witnesses for i in self.support
        )

    def names(self, space: WeightedSpace) -> list[str]:
        return [space.coordinate_names[i] for i in self.support]

    def to_json(self, space: WeightedSpace) -> dict[str, Any]:
        return {
            "support": self.names(space),
            "lambda": f"exp(2*pi*i*{self.lam})",
            "dimension": self.dimension,
            "kind": self.kind,
            "excluded": [[space.coordinate_names[i] for i in ex] for ex in self.excluded],
        }


def _expected_kind(size: int, total: int) -> str:
    """What the stratum is expected to cut on a hypersurface of ``total - 1`` dimensions."""
    if size == total:
        return "whole-space"
    return {2: "isolated-point-candidate", 4: "surface"}.get(size, "other")


def fixed_locus(space: WeightedSpace, inv: InvolutionSpec) -> list[FixedStratum]:
    """Partition of the fixed locus of ``inv`` into strata.

    A stratum whose support is every coordinate (kind ``whole-space``) means
    the involution acts trivially on the weighted projective space.
    """
    if len(inv.signs) != len(space.weights):
        raise ValueError("involution and space have different numbers of coordinates")
    if not space.is_well_formed():
        raise ValueError(f"{space} is not well-formed")
    order = 2 * lcm(*space.weights)
    by_support: dict[tuple[int, ...], list[Fraction]] = {}
    for j in range(order):
        angle = Fraction(j, order)
        supp = tuple(i for i, w in enumerate(space.weights) if _sign_of_power(angle, w) == inv.signs[i])
        if supp:
            by_support.setdefault(supp, []).append(angle)

    members = set(by_support)
    while True:
        new = {
            tuple(sorted(set(a) & set(b)))
            for a, b in itertools.combinations(members, 2)
        } - members - {()}
        if not new:
            break
        members |= new

    n = len(space.weights)
    strata = []
    for J in members:
        witnesses = sorted(a for supp, angles in by_support.items() if set(J) <= set(supp) for a in angles)
        smaller = [K for K in members if set(K) < set(J)]
        maximal = tuple(sorted(K for K in smaller if not any(set(K) < set(L) for L in smaller)))
        strata.append(
            FixedStratum(J, witnesses[0], tuple(witnesses), len(J) - 1, _expected_kind(len(J), n), maximal)
        )
    strata.sort(key=lambda s: (s.support, s.lam))
    return strata


def is_zero(v: Any) -> bool:
    if isinstance(v, (int, Fraction)):
        return v == 0
    if isinstance(v, complex):
        return v == 0
    e = sp.sympify(v)
    if e.is_zero is not None:
        return bool(e.is_zero)
    simplified = sp.simplify(sp.expand(e))
    if simplified.is_zero is not None:
        return bool(simplified.is_zero)
    return bool(e.equals(0))


def _bezout(ws: Sequence[int]) -> tuple[int, list[int]]:
    """``g = gcd(ws)`` and integers ``c`` with ``sum c_i w_i = g``."""
    g, coeffs = ws[0], [1]
    for w in ws[1:]:
        # extended Euclid on (g, w)
        old_r, r, old_s, s_, old_t, t = g, w, 1, 0, 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s_ = s_, old_s - q * s_
            old_t, t = t, old_t - q * t
        coeffs = [c * old_s for c in coeffs] + [old_t]
        g = old_r
    return g, coeffs


def weighted_equal(space: WeightedSpace, p: Sequence[Any], q: Sequence[Any]) -> bool:
    """Whether ``p`` and ``q`` are the same point of ``space``.

    Seeks ``mu`` with ``mu^{w_i} p_i = q_i``.  With ``r_i = q_i / p_i`` on the
    common support and ``g = gcd(w_supp) = sum c_i w_i``, such ``mu`` exists iff
    ``r_i = (prod_j r_j^{c_j})^{w_i / g}`` for every ``i``.
    """
    sp_, sq = _support(p), _support(q)
    if sp_ != sq or not sp_:
        return False
    exact = all(isinstance(v, (int, Fraction)) for v in itertools.chain(p, q))
    if exact:
        ratios = [Fraction(q[i]) / Fraction(p[i]) for i in sp_]
    else:
        ratios = [sp.sympify(q[i]) / sp.sympify(p[i]) for i in sp_]
    ws = [space.weights[i] for i in sp_]
    g, coeffs = _bezout(ws)
    mu_g = 1
    for r, c in zip(ratios, coeffs):
        mu_g = mu_g * r**c
    return all(is_zero(r - mu_g ** (w // g)) for r, w in zip(ratios, ws))


def is_fixed(space: WeightedSpace, inv: InvolutionSpec, point: Sequence[Any]) -> bool:
    return weighted_equal(space, inv.apply(point), point)


@dataclass(frozen=True)
class CyclicQuotientType:
    """``1/m (a_1, ..., a_n)``; ``m == 1`` means smooth."""

    order: int
    weights: tuple[int, ...]

    @property
    def is_smooth(self) -> bool:
        return self.order == 1

    def __str__(self):
        if self.is_smooth:
            return "smooth"
        return f"1/{self.order}({','.join(map(str, self.weights))})"


def singularity_type(space: WeightedSpace, coordinate_point: int | Sequence[Any]) -> CyclicQuotientType:
    """Cyclic quotient type of ``space`` at the coordinate point ``e_i``.

    Near ``e_i`` the space is ``C^n / mu_{w_i}`` acting with weights ``w_j mod w_i``.
    """
    if isinstance(coordinate_point, int):
        i = coordinate_point
        if not 0 <= i < len(space.weights):
            raise ValueError(f"no coordinate point e_{i} in {space}")
    else:
        supp = _support(coordinate_point)
        if len(supp) != 1 or len(coordinate_point) != len(space.weights):
            raise ValueError(f"{tuple(coordinate_point)} is not a coordinate point")
        i = supp[0]
    m = space.weights[i]
    rest = [w % m for j, w in enumerate(space.weights) if j != i]
    g = reduce(gcd, rest, m)
    m, rest = m // g, [a // g for a in rest]
    if m == 1:
        return CyclicQuotientType(1, tuple(0 for _ in rest))
    return CyclicQuotientType(m, tuple(rest))


@dataclass(frozen=True)
class WeightedPolynomial:
    """A polynomial on ``space`` as exponent-vector -> exact coefficient."""

    space: WeightedSpace
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    @classmethod
    def parse(cls, space: WeightedSpace, text: str) -> "WeightedPolynomial":
        symbols = sp.symbols(space.coordinate_names)
        local = {n: s for n, s in zip(space.coordinate_names, symbols)}
        expr = parse_expr(text, local_dict=local, transformations=standard_transformations + (convert_xor,))
        extra = expr.free_symbols - set(symbols)
        if extra:
            raise ValueError(f"unknown variables {sorted(map(str, extra))} (coordinates are {space.coordinate_names})")
        poly = sp.Poly(expr, *symbols)
        return cls.from_terms(space, {m: to_fraction(c) for m, c in poly.terms()})

    @classmethod
    def from_terms(cls, space: WeightedSpace, terms) -> "WeightedPolynomial":
        items = terms.items() if hasattr(terms, "items") else terms
        acc: dict[tuple[int, ...], Fraction] = {}
        for mono, c in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(space.weights):
                raise ValueError(f"monomial {mono} has the wrong number of exponents")
            acc[mono] = acc.get(mono, Fraction(0)) + to_fraction(c)
        return cls(space, tuple(sorted(((m, c) for m, c in acc.items() if c != 0), reverse=True)))

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degrees(self) -> set[int]:
        return {sum(e * w for e, w in zip(m, self.space.weights)) for m, _ in self.terms}

    def monomial_str(self, mono: tuple[int, ...]) -> str:
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.space.coordinate_names, mono) if e]
        return "*".join(parts) or "1"

    def restrict(self, support: Iterable[int]) -> "WeightedPolynomial":
        keep = set(support)
        return WeightedPolynomial(
            self.space,
            tuple((m, c) for m, c in self.terms if all(e == 0 or i in keep for i, e in enumerate(m))),
        )

    def __call__(self, point: Sequence[Any]):
        total: Any = Fraction(0)
        for mono, c in self.terms:
            term: Any = c
            for x, e in zip(point, mono):
                if e:
                    term = term * x**e
            total = total + term
        return total

    def to_sympy(self):
        symbols = sp.symbols(self.space.coordinate_names)
        return sum(
            (sp.Rational(c.numerator, c.denominator) * sp.Mul(*[s**e for s, e in zip(symbols, m)]) for m, c in self.terms),
            sp.Integer(0),
        )

    def __str__(self):
        return str(self.to_sympy()).replace("**", "^") if self.terms else "0"


def _character(mono: tuple[int, ...], inv: InvolutionSpec) -> int:
    sign = 1
    for s, e in zip(inv.signs, mono):
        if s == -1 and e % 2:
            sign = -sign
    return sign


def check_hypersurface(space: WeightedSpace, inv: InvolutionSpec, degree: int, f: WeightedPolynomial) -> int:
    """Validate ``f`` and return its character (+1 invariant, -1 anti-invariant)."""
    if f.is_zero():
        raise NotHypersurfaceError("zero polynomial does not define a hypersurface")
    for mono, _ in f.terms:
        d = sum(e * w for e, w in zip(mono, space.weights))
        if d != degree:
            raise NotHypersurfaceError(f"monomial {f.monomial_str(mono)} has weighted degree {d}, not {degree}")
    groups: dict[int, list[tuple[int, ...]]] = {}
    for mono, _ in f.terms:
        groups.setdefault(_character(mono, inv), []).append(mono)
    if len(groups) == 1:
        return next(iter(groups))
    # blame the minority; on a tie, the group not containing the leading term
    lead = _character(f.terms[0][0], inv)
    odd = min(groups, key=lambda c: (len(groups[c]), c == lead))
    names = ", ".join(f.monomial_str(m) for m in groups[odd])
    raise SemiInvarianceError(
        f"not semi-invariant under {inv}: monomial(s) {names} transform by {odd:+d}, the rest by {-odd:+d}"
    )


@dataclass(frozen=True)
class HypersurfaceStratum:
    stratum: FixedStratum
    restricted: WeightedPolynomial
    dimension: int  # on the hypersurface; -1 when empty
    kind: str
    points: tuple[tuple[Any, ...], ...] = ()
    exact: bool = True
    residual: float = 0.0

    def to_json(self) -> dict[str, Any]:
        space = self.restricted.space
        return {
            "stratum": self.stratum.to_json(space),
            "equation": str(self.restricted),
            "dimension": self.dimension,
            "kind": self.kind,
            "points": [[render_coordinate(x) for x in p] for p in self.points],
            "exact": self.exact,
        }


@dataclass(frozen=True)
class HypersurfaceFixedLocus:
    space: WeightedSpace
    inv: InvolutionSpec
    polynomial: WeightedPolynomial
    strata: tuple[HypersurfaceStratum, ...]
    fixes_everything: bool = False

    @property
    def surfaces(self) -> list[HypersurfaceStratum]:
        return [s for s in self.strata if s.dimension == 2]

    @property
    def isolated_points(self) -> list[tuple[Any, ...]]:
        return [p for s in self.strata if s.dimension == 0 for p in s.points]

    def to_json(self) -> dict[str, Any]:
        return {
            "space": str(self.space),
            "coordinates": list(self.space.coordinate_names),
            "involution": str(self.inv),
            "polynomial": str(self.polynomial),
            "fixes_everything": self.fixes_everything,
            "strata": [s.to_json() for s in self.strata],
            "surfaces": len(self.surfaces),
            "isolated_points": [[render_coordinate(x) for x in p] for p in self.isolated_points],
        }


def render_coordinate(x: Any) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return f"{x.real:.12g}{x.imag:+.12g}j"
    return str(sp.sympify(x)).replace("**", "^")


_KIND_ON_X = {-1: "empty", 0: "isolated-points", 1: "curve", 2: "surface", 3: "threefold"}


def _points_on_line(f: WeightedPolynomial, a: int, b: int) -> tuple[list[tuple[Any, ...]], bool, float]:
    """Zeros of ``f`` on the weighted line ``P(w_a, w_b)`` (all other coordinates zero).

    On the torus ``x_a x_b != 0`` the function ``tau = x_a^{q'} / x_b^{p'}`` with
    ``(p', q') = (w_a, w_b) / gcd`` identifies points with ``C^*``, and ``f``
    factors as a monomial times a polynomial ``F(tau)``.
    """
    n = len(f.space.weights)
    p, q = f.space.weights[a], f.space.weights[b]
    g = gcd(p, q)
    p1, q1 = p // g, q // g

    def pt(xa, xb):
        v: list[Any] = [Fraction(0)] * n
        v[a], v[b] = xa, xb
        return tuple(v)

    points: list[tuple[Any, ...]] = []
    for corner in (pt(Fraction(1), Fraction(0)), pt(Fraction(0), Fraction(1))):
        if f(corner) == 0:
            points.append(corner)
    i_min = min(m[a] for m, _ in f.terms)
    tau = sp.Symbol("tau")
    F = sp.Integer(0)
    for m, c in f.terms:
        step, rem = divmod(m[a] - i_min, q1)
        if rem:
            raise NotHypersurfaceError("restriction is not quasi-homogeneous on a weighted line")
        F += sp.Rational(c.numerator, c.denominator) * tau**step
    poly = sp.Poly(F, tau)
    # strip zero roots; they are the corner points handled above
    while poly.degree() > 0 and poly.eval(0) == 0:
        poly = sp.Poly(sp.cancel(poly.as_expr() / tau), tau)
    if poly.degree() <= 0:
        return points, True, 0.0
    sqf = sp.Poly(sp.quo(poly, sp.gcd(poly, poly.diff(tau))), tau)
    found = sp.roots(sqf, multiple=False)
    exact = sum(found.values()) == sqf.degree()
    residual = 0.0
    if exact:
        roots = list(found)
    else:
        roots = [complex(r) for r in sp.Poly(sqf, tau).nroots(n=30)]
        residual = max(abs(complex(sqf.eval(sp.nsimplify(r, rational=False)))) for r in roots) if roots else 0.0
    for r in roots:
        xa = sp.root(r, q1) if exact else complex(r) ** (1 / q1)
        points.append(pt(xa, Fraction(1) if exact else 1.0))
    return points, exact, residual


def hypersurface_fixed_locus(
    space: WeightedSpace,
    inv: InvolutionSpec,
    degree: int,
    polynomial: WeightedPolynomial | str,
) -> HypersurfaceFixedLocus:
    """Fixed locus of ``inv`` on the hypersurface ``{polynomial = 0}``.

    Each stratum of :func:`fixed_locus` is intersected with the hypersurface.
    Strata of size two are solved on their weighted line (exact radicals
    where :func:`sympy.roots` finds them, otherwise 30-digit numerics); larger
    strata report only the dimension of the intersection.
    """
    f = WeightedPolynomial.parse(space, polynomial) if isinstance(polynomial, str) else polynomial
    check_hypersurface(space, inv, degree, f)
    strata = fixed_locus(space, inv)
    out = []
    everything = any(s.kind == "whole-space" for s in strata)
    for s in strata:
        r = f.restrict(s.support)
        size = len(s.support)
        points: list[tuple[Any, ...]] = []
        exact, residual = True, 0.0
        if size == 1:
            e = [Fraction(0)] * len(space.weights)
            e[s.support[0]] = Fraction(1)
            dim = 0 if r.is_zero() else -1
            if dim == 0:
                points.append(tuple(e))
        elif size == 2 and not r.is_zero():
            cand, exact, residual = _points_on_line(r, *s.support)
            points = [p for p in cand if s.contains(p)]
            dim = 0 if points else -1
        else:
            dim = size - 1 if r.is_zero() else size - 2
        if residual >= NUMERIC_RESIDUAL:
            raise ArithmeticError(f"numeric residual {residual} exceeds {NUMERIC_RESIDUAL}")
        if dim < 0:
            continue
        out.append(HypersurfaceStratum(s, r, dim, _KIND_ON_X.get(dim, "other"), tuple(points), exact, residual))
    return HypersurfaceFixedLocus(space, inv, f, tuple(out), everything)


@dataclass(frozen=True)
class ProjectionReport:
    invariant: bool
    generic_preimages: dict[tuple, int]
    branch_preimages: dict[tuple, int]
    branch_surface_equation: str
    branch_surface_matches: bool
    singular_branch_points: dict[tuple, str]
    reported_point: tuple | None = None
    reported_point_on_hypersurface: bool | None = None

    @property
    def passed(self) -> bool:
        return (
            self.invariant
            and all(v == 2 for v in self.generic_preimages.values())
            and all(v == 1 for v in self.branch_preimages.values())
            and self.branch_surface_matches
            and bool(self.singular_branch_points)
        )

    def to_json(self) -> dict[str, Any]:
        def key(t):
            return ",".join(render_coordinate(x) for x in t)

        doc = {
            "passed": self.passed,
            "invariant": self.invariant,
            "generic_preimages": {key(k): v for k, v in self.generic_preimages.items()},
            "branch_preimages": {key(k): v for k, v in self.branch_preimages.items()},
            "branch_surface_equation": self.branch_surface_equation,
            "branch_surface_matches": self.branch_surface_matches,
            "singular_branch_points": {key(k): v for k, v in self.singular_branch_points.items()},
        }
        if self.reported_point is not None:
            doc["reported_point"] = key(self.reported_point)
            doc["reported_point_on_hypersurface"] = self.reported_point_on_hypersurface
        return doc


def _double_cover_shape(space: WeightedSpace, inv: InvolutionSpec, f: WeightedPolynomial):
    negated = [i for i, s in enumerate(inv.signs) if s == -1]
    if len(negated) != 1:
        raise ValueError("projection check needs exactly one negated coordinate")
    t = negated[0]
    lead = None
    for mono, c in f.terms:
        if mono[t] not in (0, 2):
            raise ValueError(f"{space.coordinate_names[t]} must appear only squared")
        if mono[t] == 2:
            if any(e for i, e in enumerate(mono) if i != t):
                raise ValueError(f"{space.coordinate_names[t]}^2 must not carry other variables")
            lead = c
    if lead is None:
        raise ValueError(f"no {space.coordinate_names[t]}^2 term")
    return t, lead


def preimages(
    space: WeightedSpace, inv: InvolutionSpec, f: WeightedPolynomial, target: Sequence[Any]
) -> list[tuple[Any, ...]]:
    """Distinct points of ``{f = 0}`` over ``target`` under dropping the negated coordinate."""
    t, lead = _double_cover_shape(space, inv, f)
    rest = WeightedPolynomial(space, tuple((m, c) for m, c in f.terms if m[t] == 0))
    full = list(target)
    full.insert(t, Fraction(0))
    t_sq = -sp.sympify(rest(full)) / sp.Rational(lead.numerator, lead.denominator)
    root = sp.sqrt(t_sq)
    pts: list[tuple[Any, ...]] = []
    for r in (root, -root):
        cand = list(target)
        cand.insert(t, r)
        cand = tuple(sp.nsimplify(x) if not isinstance(x, Fraction) else sp.Rational(x.numerator, x.denominator) for x in cand)
        if not any(weighted_equal(space, cand, p) for p in pts):
            pts.append(cand)
    return pts


def _search_rational_zero(g: WeightedPolynomial, idx: Sequence[int], bound: int = 2):
    n = len(g.space.weights)
    for vals in itertools.product(range(-bound, bound + 1), repeat=len(idx)):
        if not any(vals):
            continue
        v = [Fraction(0)] * n
        for i, x in zip(idx, vals):
            v[i] = Fraction(x)
        if g(v) == 0:
            return tuple(v[i] for i in idx)
    return None


def verify_quotient_projection(
    space: WeightedSpace,
    inv: InvolutionSpec,
    degree: int,
    polynomial: WeightedPolynomial | str,
    generic_targets: Sequence[Sequence[Any]] | None = None,
    reported_point: Sequence[Any] | None = None,
) -> ProjectionReport:
    """Check that dropping the negated coordinate is the quotient map.

    (a) the projection is constant on involution orbits and ``f`` is even in
    the dropped coordinate; (b) generic targets have two preimages; (c) the
    branch image is ``{f|_{t=0} = 0}`` together with the images of the isolated
    fixed points, each of which has one preimage and is a singular point of
    the target space.
    """
    f = WeightedPolynomial.parse(space, polynomial) if isinstance(polynomial, str) else polynomial
    check_hypersurface(space, inv, degree, f)
    t, _ = _double_cover_shape(space, inv, f)
    keep = [i for i in range(len(space.weights)) if i != t]
    target_space = WeightedSpace.of([space.weights[i] for i in keep], [space.coordinate_names[i] for i in keep])

    flipped = WeightedPolynomial.from_terms(space, {m: c * _character(m, inv) for m, c in f.terms})
    invariant = flipped == f and all(inv.signs[i] == 1 for i in keep)

    if generic_targets is None:
        generic_targets = [tuple(Fraction(1) if j == 0 else Fraction(0) for j in range(len(keep)))]
        generic_targets.append(tuple(Fraction(j + 1) for j in range(len(keep))))
    generic = {tuple(tg): len(preimages(space, inv, f, tg)) for tg in generic_targets}

    locus = hypersurface_fixed_locus(space, inv, degree, f)
    branch: dict[tuple, int] = {}
    singular: dict[tuple, str] = {}
    for p in locus.isolated_points:
        img = tuple(p[i] for i in keep)
        branch[img] = len(preimages(space, inv, f, img))
        supp = _support(img)
        if len(supp) == 1:
            kind = singularity_type(target_space, supp[0])
            if not kind.is_smooth:
                singular[img] = str(kind)

    surfaces = locus.surfaces
    matches = False
    equation = ""
    if len(surfaces) == 1:
        s = surfaces[0]
        on_base = WeightedPolynomial(space, tuple((m, c) for m, c in f.terms if m[t] == 0))
        equation = str(s.restricted)
        matches = s.restricted == on_base and tuple(s.stratum.support) == tuple(keep)
        zero = _search_rational_zero(on_base, keep)
        if zero is not None:
            branch[zero] = len(preimages(space, inv, f, zero))

    rep_on = None
    if reported_point is not None:
        reported_point = tuple(to_fraction(x) for x in reported_point)
        rep_on = f(reported_point) == 0
    return ProjectionReport(invariant, generic, branch, equation, matches, singular, reported_point, rep_on)


def decic_double_cover():
    """The degree-10 threefold ``x^10 + y^10 + z^10 + w^5 = t^2`` in ``P(1,1,1,2,5)``
    with ``t -> -t``; returns ``(space, involution, degree, polynomial)``."""
    space = WeightedSpace.of([1, 1, 1, 2, 5], ["x", "y", "z", "w", "t"])
    inv = InvolutionSpec((1, 1, 1, 1, -1))
    return space, inv, 10, WeightedPolynomial.parse(space, "x^10 + y^10 + z^10 + w^5 - t^2")
