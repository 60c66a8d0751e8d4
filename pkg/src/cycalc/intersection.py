"""Numerical divisor calculus on the blow-up / double-cover square.

The four spaces are::

    Xt --phi_t--> Yt
    |f            |g
    X  --phi----> Y

``f`` blows up the ``k`` isolated fixed points (exceptional planes ``E_i``,
normal bundle ``O(-1)``), ``g`` blows up their images, the ``1/2(1,1,1)``
points (exceptional planes ``F_i``, normal bundle ``O(-2)``), and ``phi_t`` is a
double cover branched along ``S_Yt + sum F_i``.

A space is modelled numerically: a list of generator names, a symmetric
triple-intersection tensor, ``c1`` as a divisor class and ``c2`` as the linear
form ``D -> c2 . D``.  All numbers are ``Fraction``.  That is enough for
every computation downstream (``H^3``, ``H.c2``, Euler characteristics of
branch surfaces, the ``chi = k/16`` argument).

:meth:`CoverDiagram.build` constructs the whole square from a model of ``Y``,
the number ``k`` of half-points and the branch class ``S_Y``.  The upstairs
``c2`` pairing uses ``c2(X) = phi^* c2(Y) + R^2`` with ``R = 1/2 phi^* S_Y``
the ramification class; that lemma is justified here only by exact agreement
with the classification tables (:mod:`cycalc.tables`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from types import MappingProxyType
from typing import Any, Iterable, Mapping

from ._exact import Scalar, render, to_fraction
from .errors import ForeignClassError, NotCalabiYauError, NotExpressibleError, UnknownMapError
from .riemann_roch import E_NORMAL_DEGREE, F_NORMAL_DEGREE, c2_restriction

MAP_IDS = ("f", "g", "phi", "phi_t")


def _natural_key(name: str):
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name)]


@dataclass(frozen=True)
class DivisorClass:
    """An exact rational combination of named generators on one space.

    ``terms`` holds the non-zero coefficients only, in natural name order, so
    equality of classes is equality of dataclasses.
    """

    space_id: str
    terms: tuple[tuple[str, Fraction], ...] = ()

    @classmethod
    def of(cls, space_id: str, coeffs: Mapping[str, Any] | Iterable[tuple[str, Any]]) -> "DivisorClass":
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[str, Fraction] = {}
        for name, c in items:
            acc[name] = acc.get(name, Fraction(0)) + to_fraction(c)
        terms = tuple(sorted(((n, c) for n, c in acc.items() if c != 0), key=lambda t: _natural_key(t[0])))
        return cls(space_id, terms)

    @property
    def coeffs(self) -> dict[str, Fraction]:
        return dict(self.terms)

    def __getitem__(self, name: str) -> Fraction:
        for n, c in self.terms:
            if n == name:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def _same_space(self, other: "DivisorClass"):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.space_id != self.space_id:
            raise ForeignClassError(f"foreign class: {other.space_id} vs {self.space_id}")
        return True

    def __add__(self, other):
        if self._same_space(other) is NotImplemented:
            return NotImplemented
        return DivisorClass.of(self.space_id, list(self.terms) + list(other.terms))

    def __sub__(self, other):
        if self._same_space(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return DivisorClass(self.space_id, tuple((n, -c) for n, c in self.terms))

    def __mul__(self, scalar):
        if isinstance(scalar, DivisorClass):
            return NotImplemented
        k = to_fraction(scalar)
        return DivisorClass.of(self.space_id, [(n, k * c) for n, c in self.terms])

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for n, c in self.terms:
            if c == 1:
                parts.append(n)
            elif c == -1:
                parts.append(f"-{n}")
            else:
                parts.append(f"{render(c)}*{n}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict[str, str]:
        return {n: render(c) for n, c in self.terms}


@dataclass(frozen=True)
class SpaceModel:
    """Numerical model of a threefold.

    ``triple`` maps sorted generator-index triples to their (non-zero) value;
    use :meth:`build` rather than the raw constructor.
    """

    id: str
    generators: tuple[str, ...]
    triple: Mapping[tuple[int, int, int], Fraction]
    c1: DivisorClass
    c2_pairing: Mapping[str, Fraction]
    half_points: int = 0
    euler: Fraction | None = None
    _index: Mapping[str, int] = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def build(
        cls,
        id: str,
        generators: Iterable[str],
        triple: Mapping[tuple[str, str, str], Scalar],
        c1: Mapping[str, Scalar] | DivisorClass | None = None,
        c2: Mapping[str, Scalar] | None = None,
        half_points: int = 0,
        euler: Scalar | None = None,
    ) -> "SpaceModel":
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names in {gens}")
        index = {g: i for i, g in enumerate(gens)}
        tensor: dict[tuple[int, int, int], Fraction] = {}
        for key, value in triple.items():
            try:
                idx = tuple(sorted(index[g] for g in key))
            except KeyError as exc:
                raise ForeignClassError(f"unknown generator {exc.args[0]!r} in triple entry {key}") from None
            if len(idx) != 3:
                raise ValueError(f"triple entry {key} must name three generators")
            v = to_fraction(value)
            if idx in tensor and tensor[idx] != v:
                raise ValueError(f"asymmetric triple entries for {key}: {tensor[idx]} vs {v}")
            tensor[idx] = v
        tensor = {k: v for k, v in tensor.items() if v != 0}
        if isinstance(c1, DivisorClass):
            c1_cls = DivisorClass(id, c1.terms)
        else:
            c1_cls = DivisorClass.of(id, c1 or {})
        c2_map = {g: Fraction(0) for g in gens}
        for g, v in (c2 or {}).items():
            if g not in index:
                raise ForeignClassError(f"unknown generator {g!r} in c2 pairing")
            c2_map[g] = to_fraction(v)
        if half_points < 0:
            raise ValueError("half_points must be non-negative")
        space = cls(
            id,
            gens,
            MappingProxyType(tensor),
            c1_cls,
            MappingProxyType(c2_map),
            int(half_points),
            None if euler is None else to_fraction(euler),
            MappingProxyType(index),
        )
        space.check(c1_cls)
        return space

    def check(self, d: DivisorClass) -> DivisorClass:
        if not isinstance(d, DivisorClass) or d.space_id != self.id:
            owner = getattr(d, "space_id", type(d).__name__)
            raise ForeignClassError(f"foreign class: {owner} used on space {self.id}")
        for name, _ in d.terms:
            if name not in self._index:
                raise ForeignClassError(f"foreign class: generator {name!r} not on space {self.id}")
        return d

    def cls(self, name: str) -> DivisorClass:
        if name not in self._index:
            raise ForeignClassError(f"generator {name!r} not on space {self.id}")
        return DivisorClass(self.id, ((name, Fraction(1)),))

    def divisor(self, coeffs: Mapping[str, Scalar]) -> DivisorClass:
        return self.check(DivisorClass.of(self.id, coeffs))

    def zero(self) -> DivisorClass:
        return DivisorClass(self.id)

    def triple_value(self, a: str, b: str, c: str) -> Fraction:
        idx = tuple(sorted((self._index[a], self._index[b], self._index[c])))
        return self.triple.get(idx, Fraction(0))

    def c2_dot(self, d: DivisorClass) -> Fraction:
        self.check(d)
        return sum((c * self.c2_pairing[n] for n, c in d.terms), Fraction(0))

    def to_json(self) -> dict[str, Any]:
        triples = []
        for (i, j, l), v in sorted(self.triple.items()):
            triples.append([self.generators[i], self.generators[j], self.generators[l], render(v)])
        doc: dict[str, Any] = {
            "id": self.id,
            "generators": list(self.generators),
            "triple": triples,
            "c1": self.c1.to_json(),
            "c2": {g: render(v) for g, v in self.c2_pairing.items()},
            "half_points": self.half_points,
        }
        if self.euler is not None:
            doc["euler"] = render(self.euler)
        return doc


def triple_product(space: SpaceModel, a: DivisorClass, b: DivisorClass, c: DivisorClass) -> Fraction:
    """Trilinear extension of the triple tensor to arbitrary classes."""
    for d in (a, b, c):
        space.check(d)
    idx = space._index
    total = Fraction(0)
    for (na, ca), (nb, cb), (nc, cc) in product(a.terms, b.terms, c.terms):
        key = tuple(sorted((idx[na], idx[nb], idx[nc])))
        v = space.triple.get(key)
        if v:
            total += ca * cb * cc * v
    return total


@dataclass(frozen=True)
class Morphism:
    """A map ``source -> target`` acting on divisor classes by pullback."""

    name: str
    source: SpaceModel
    target: SpaceModel
    degree: int
    images: Mapping[str, DivisorClass]

    def pullback(self, d: DivisorClass) -> DivisorClass:
        self.target.check(d)
        out = self.source.zero()
        for n, c in d.terms:
            out = out + c * self.images[n]
        return out


def _pushforward_name(name: str) -> str:
    return name[:-1] if name.endswith("'") else f"phi*{name}"


@dataclass(frozen=True)
class CoverDiagram:
    """The square ``(f, g, phi, phi_t)`` together with its branch data.

    ``s`` is the coefficient of the branch surface on the hyperplane
    generator of ``Y`` (``S_Y = s H'``), ``None`` when the branch class is not
    a multiple of it.  ``r_half = s / 2`` is the coefficient of ``-K_Y`` on
    that same class-group generator.
    """

    X: SpaceModel
    Y: SpaceModel
    Xt: SpaceModel
    Yt: SpaceModel
    k: int
    branch_surface_class: DivisorClass
    exceptional_E: tuple[str, ...]
    exceptional_F: tuple[str, ...]
    s: int | None
    r_half: Fraction | None
    maps: Mapping[str, Morphism]
    push: Mapping[str, DivisorClass]
    hyperplane: str | None = None

    @classmethod
    def build(
        cls,
        Y: SpaceModel,
        k: int,
        s: int | None = None,
        branch: DivisorClass | Mapping[str, Scalar] | None = None,
        hyperplane: str | None = None,
    ) -> "CoverDiagram":
        if k < 0:
            raise ValueError("k must be non-negative")
        if hyperplane is None and Y.generators:
            hyperplane = Y.generators[0]
        if branch is None:
            if s is None:
                raise ValueError("give the branch class or the index s")
            branch_cls = s * Y.cls(hyperplane)
        else:
            branch_cls = branch if isinstance(branch, DivisorClass) else Y.divisor(branch)
            Y.check(branch_cls)
            if s is not None and branch_cls != s * Y.cls(hyperplane):
                raise ValueError(f"branch class {branch_cls} is not {s}*{hyperplane}")
            if s is None and hyperplane is not None:
                multiple = branch_cls[hyperplane]
                if branch_cls == multiple * Y.cls(hyperplane) and multiple.denominator == 1:
                    s = int(multiple)

        # X: one generator phi^*y per generator y of Y, triple doubled.
        xname = {y: _pushforward_name(y) for y in Y.generators}
        x_triple = {
            tuple(xname[Y.generators[i]] for i in key): 2 * v for key, v in Y.triple.items()
        }
        X0 = SpaceModel.build("X", xname.values(), x_triple)
        phi_images = {y: X0.cls(xname[y]) for y in Y.generators}

        def phi_pull(d: DivisorClass) -> DivisorClass:
            out = X0.zero()
            for n, c in d.terms:
                out = out + c * phi_images[n]
            return out

        ram = Fraction(1, 2) * phi_pull(branch_cls)
        c1_X = phi_pull(Y.c1) - ram
        c2_X = {
            xname[y]: 2 * Y.c2_pairing[y] + triple_product(X0, ram, ram, X0.cls(xname[y]))
            for y in Y.generators
        }
        X = SpaceModel.build("X", X0.generators, x_triple, c1_X, c2_X)

        Es = tuple(f"E{i}" for i in range(1, k + 1))
        Fs = tuple(f"F{i}" for i in range(1, k + 1))
        e_cube = Fraction(E_NORMAL_DEGREE**2)
        f_cube = Fraction(F_NORMAL_DEGREE**2)

        fname = {x: f"f*{x}" for x in X.generators}
        xt_triple: dict[tuple[str, str, str], Fraction] = {
            tuple(fname[X.generators[i]] for i in key): v for key, v in X.triple.items()
        }
        xt_triple.update({(e, e, e): e_cube for e in Es})
        sumE = DivisorClass.of("Xt", [(e, 1) for e in Es])
        c1_Xt = DivisorClass.of("Xt", [(fname[n], c) for n, c in X.c1.terms]) - 2 * sumE
        c2_Xt = {fname[x]: X.c2_pairing[x] for x in X.generators}
        c2_Xt.update({e: c2_restriction(E_NORMAL_DEGREE) for e in Es})
        Xt = SpaceModel.build("Xt", list(fname.values()) + list(Es), xt_triple, c1_Xt, c2_Xt)

        gname = {y: f"g*{y}" for y in Y.generators}
        yt_triple: dict[tuple[str, str, str], Fraction] = {
            tuple(gname[Y.generators[i]] for i in key): v for key, v in Y.triple.items()
        }
        yt_triple.update({(fi, fi, fi): f_cube for fi in Fs})
        sumF = DivisorClass.of("Yt", [(fi, 1) for fi in Fs])
        c1_Yt = DivisorClass.of("Yt", [(gname[n], c) for n, c in Y.c1.terms]) - Fraction(1, 2) * sumF
        c2_Yt = {gname[y]: Y.c2_pairing[y] for y in Y.generators}
        c2_Yt.update({fi: c2_restriction(F_NORMAL_DEGREE) for fi in Fs})
        Yt = SpaceModel.build(
            "Yt", list(gname.values()) + list(Fs), yt_triple, c1_Yt, c2_Yt, euler=None
        )

        maps = {
            "f": Morphism("f", Xt, X, 1, {x: Xt.cls(fname[x]) for x in X.generators}),
            "g": Morphism("g", Yt, Y, 1, {y: Yt.cls(gname[y]) for y in Y.generators}),
            "phi": Morphism("phi", X, Y, 2, {y: X.cls(xname[y]) for y in Y.generators}),
            "phi_t": Morphism(
                "phi_t",
                Xt,
                Yt,
                2,
                {
                    **{gname[y]: Xt.cls(fname[xname[y]]) for y in Y.generators},
                    **{fi: 2 * Xt.cls(e) for fi, e in zip(Fs, Es)},
                },
            ),
        }
        push = {fname[xname[y]]: 2 * Yt.cls(gname[y]) for y in Y.generators}
        push.update({e: Yt.cls(fi) for e, fi in zip(Es, Fs)})
        return cls(
            X,
            Y,
            Xt,
            Yt,
            k,
            branch_cls,
            Es,
            Fs,
            s,
            None if s is None else Fraction(s, 2),
            MappingProxyType(maps),
            MappingProxyType(push),
            hyperplane,
        )

    def space(self, space_id: str) -> SpaceModel:
        return {"X": self.X, "Y": self.Y, "Xt": self.Xt, "Yt": self.Yt}[space_id]

    def map(self, map_id: str) -> Morphism:
        try:
            return self.maps[map_id]
        except KeyError:
            raise UnknownMapError(f"unknown map id {map_id!r}; expected one of {', '.join(MAP_IDS)}") from None


def pullback(diagram: CoverDiagram, map_id: str, d: DivisorClass) -> DivisorClass:
    """Pull ``d`` back along one of the four maps ``f``, ``g``, ``phi``, ``phi_t``."""
    return diagram.map(map_id).pullback(d)


def pushforward_cover(diagram: CoverDiagram, d: DivisorClass) -> DivisorClass:
    """Push a class on ``Xt`` down to ``Yt``: ``E_i -> F_i`` and ``phi_t^* a -> 2a``."""
    diagram.Xt.check(d)
    out = diagram.Yt.zero()
    for n, c in d.terms:
        try:
            image = diagram.push[n]
        except KeyError:
            raise NotExpressibleError(f"{n} is neither a phi_t-pullback nor exceptional") from None
        out = out + c * image
    return out


@dataclass(frozen=True)
class CanonicalChain:
    K_Xt_blowup: DivisorClass
    K_Xt_hurwitz: DivisorClass
    K_Yt: DivisorClass
    S_Yt: DivisorClass
    S_Xt: DivisorClass
    pushed_blowup: DivisorClass
    pushed_hurwitz: DivisorClass
    lhs: DivisorClass
    rhs: DivisorClass
    hurwitz_consistent: bool
    holds: bool


def canonical_chain(diagram: CoverDiagram) -> CanonicalChain:
    """Push both expressions of ``K_Xt`` down to ``Yt`` and compare.

    From the blow-up, ``K_Xt = f^*K_X + 2 sum E_i``.  From Hurwitz,
    ``K_Xt = phi_t^*K_Yt + S_Xt + sum E_i``.  Pushing both forward yields
    ``2K_Yt + S_Yt = sum F_i``; ``holds`` reports whether the classes
    computed from the models of ``X`` and ``Y`` satisfy it.
    """
    X, Xt, Yt = diagram.X, diagram.Xt, diagram.Yt
    K_X = -X.c1
    if not K_X.is_zero():
        raise NotCalabiYauError(f"not Calabi-Yau: K_X = {K_X}")
    sumE = DivisorClass.of("Xt", [(e, 1) for e in diagram.exceptional_E])
    sumF = DivisorClass.of("Yt", [(fi, 1) for fi in diagram.exceptional_F])

    K_Xt_blowup = pullback(diagram, "f", K_X) + 2 * sumE
    K_Yt = -Yt.c1
    S_Yt = pullback(diagram, "g", diagram.branch_surface_class)
    S_Xt = Fraction(1, 2) * pullback(diagram, "phi_t", S_Yt)
    K_Xt_hurwitz = pullback(diagram, "phi_t", K_Yt) + S_Xt + sumE

    pushed_blowup = pushforward_cover(diagram, K_Xt_blowup)
    pushed_hurwitz = pushforward_cover(diagram, K_Xt_hurwitz)
    lhs = 2 * K_Yt + S_Yt
    rhs = sumF
    hurwitz_consistent = K_Xt_blowup == K_Xt_hurwitz and pushed_hurwitz == lhs + sumF
    holds = hurwitz_consistent and pushed_blowup - sumF == lhs == rhs
    return CanonicalChain(
        K_Xt_blowup, K_Xt_hurwitz, K_Yt, S_Yt, S_Xt, pushed_blowup, pushed_hurwitz, lhs, rhs,
        hurwitz_consistent, holds,
    )


def load_space(doc: Mapping[str, Any]) -> SpaceModel:
    """Build a :class:`SpaceModel` from its JSON form.

    ``{"id", "generators", "triple": [[a, b, c, "p/q"], ...], "c1": {g: "p/q"},
    "c2": {g: "p/q"}, "half_points", "euler"}``
    """
    triple = {}
    for entry in doc.get("triple", []):
        a, b, c, v = entry
        triple[(a, b, c)] = v
    return SpaceModel.build(
        doc.get("id", "Y"),
        doc["generators"],
        triple,
        doc.get("c1", {}),
        doc.get("c2", {}),
        doc.get("half_points", 0),
        doc.get("euler"),
    )


def load_diagram(doc: Mapping[str, Any]) -> CoverDiagram:
    """``{"Y": <space>, "k": int, "s": int | null, "branch": {g: "p/q"} | null, "hyperplane": str}``"""
    Y = load_space(doc["Y"])
    branch = doc.get("branch")
    return CoverDiagram.build(Y, int(doc.get("k", 0)), doc.get("s"), branch, doc.get("hyperplane"))
