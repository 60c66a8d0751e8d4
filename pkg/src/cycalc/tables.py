"""Classification tables of Picard-rank-one Calabi-Yau threefolds with a
non-Gorenstein involution whose fixed locus contains a surface.

The shipped fixture ``data/tables.tsv`` has one row per family: 17 with a
smooth Fano quotient, 3 with a Fano-Enriques quotient, 29 with a quotient of
Fano index 1/2, and the single quotient ``P(1,1,1,2)``.  ``e`` cells hold
comma-separated values; a trailing ``*`` marks a value realised by some
example but not known to be the only one, and an empty cell means no example
is known.

``data/quotients.tsv`` carries ``e(Y)`` for the quotients whose cover has an
unstarred ``e``.  Those values were obtained by inverting
``e(X) = 2e(Y) - e(S) - N`` against the tables; they are a fixture, not an
independent source.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Sequence

from .errors import ChecksumError, DatasetError
from .invariants import QuotientData, euler_of_cover, hc2_of_cover, surface_euler

FIXTURE_SHA256 = "6bd48e79d8a4bf45c13ffb0a4edc3ec6cee8597a6c0463259a048f4edca8492b"
HEADER = ("family", "N", "s", "h3", "hc2", "e", "refs")
ENV_VAR = "CYCALC_DATASET"

BOUNDS = {"h3": (1, 44), "hc2": (20, 92), "N": (0, 8), "s": (2, 10)}


class Family(str, Enum):
    SMOOTH_FANO = "smooth_fano"
    FANO_ENRIQUES = "fano_enriques"
    INDEX_HALF = "index_half"
    P1112 = "p1112"

    @property
    def order(self) -> int:
        return list(Family).index(self)


@dataclass(frozen=True)
class EValue:
    value: int
    starred: bool = False

    def __str__(self):
        return f"{self.value}*" if self.starred else str(self.value)


@dataclass(frozen=True)
class TableRow:
    family: Family
    N: int
    s: int
    h3: int
    hc2: int
    e_values: tuple[EValue, ...] = ()
    refs: tuple[str, ...] = ()

    @property
    def key(self) -> tuple[str, int, int, int]:
        return (self.family.value, self.N, self.s, self.h3)

    @property
    def sort_key(self):
        return (self.family.order, self.N, self.s, self.h3)

    @property
    def e_cell(self) -> str:
        return ",".join(str(e) for e in self.e_values)

    def to_json(self) -> dict[str, Any]:
        return {
            "family": self.family.value,
            "N": self.N,
            "s": self.s,
            "h3": self.h3,
            "hc2": self.hc2,
            "e": [{"value": e.value, "starred": e.starred} for e in self.e_values],
            "refs": list(self.refs),
        }

    def to_tsv(self) -> str:
        return "\t".join(
            [self.family.value, str(self.N), str(self.s), str(self.h3), str(self.hc2), self.e_cell, ",".join(self.refs)]
        )


def _parse_e(cell: str) -> tuple[EValue, ...]:
    out = []
    for tok in filter(None, (t.strip() for t in cell.split(","))):
        starred = tok.endswith("*")
        out.append(EValue(int(tok.rstrip("*")), starred))
    return tuple(out)


def parse_tsv(text: str) -> list[TableRow]:
    lines = text.splitlines()
    if not lines or tuple(lines[0].split("\t")) != HEADER:
        raise DatasetError(f"expected header {' '.join(HEADER)}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split("\t")
        if len(cells) != len(HEADER):
            raise DatasetError(f"line {lineno}: expected {len(HEADER)} columns, got {len(cells)}")
        try:
            rows.append(
                TableRow(
                    Family(cells[0]),
                    int(cells[1]),
                    int(cells[2]),
                    int(cells[3]),
                    int(cells[4]),
                    _parse_e(cells[5]),
                    tuple(r for r in cells[6].split(",") if r),
                )
            )
        except ValueError as exc:
            raise DatasetError(f"line {lineno}: {exc}") from None
    return rows


def dump_tsv(rows: Iterable[TableRow]) -> str:
    return "\n".join(["\t".join(HEADER)] + [r.to_tsv() for r in rows]) + "\n"


def _shipped_bytes() -> bytes:
    return resources.files("cycalc").joinpath("data/tables.tsv").read_bytes()


def load_dataset(path: str | os.PathLike | None = None) -> list[TableRow]:
    """Rows of the classification tables, in fixture order.

    ``path`` (or ``$CYCALC_DATASET``) overrides the shipped fixture; only the
    shipped fixture is checked against its digest.
    """
    path = path or os.environ.get(ENV_VAR)
    if path:
        data = Path(path).read_bytes()
    else:
        data = _shipped_bytes()
        digest = hashlib.sha256(data).hexdigest()
        if digest != FIXTURE_SHA256:
            raise ChecksumError(f"tables.tsv digest {digest} does not match {FIXTURE_SHA256}")
    return parse_tsv(data.decode("utf-8"))


@dataclass(frozen=True)
class QuotientEntry:
    euler_Y: int
    name: str


def load_quotients() -> dict[tuple[str, int, int, int], QuotientEntry]:
    text = resources.files("cycalc").joinpath("data/quotients.tsv").read_text()
    out = {}
    for line in text.splitlines()[1:]:
        fam, N, s, h3, eY, name = line.split("\t")
        out[(fam, int(N), int(s), int(h3))] = QuotientEntry(int(eY), name)
    return out


def quotient_data(row: TableRow, euler_Y: int | None = None) -> QuotientData:
    return QuotientData(Fraction(row.h3, 2), row.s, row.N, euler_Y)


def branch_surface_euler(row: TableRow) -> Fraction:
    """``e(S)`` for the branch surface ``S = s H'`` on the quotient of ``row``."""
    q = quotient_data(row)
    Y = q.model()
    return surface_euler(Y, q.s * Y.cls("H'"))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    severity: str = "check"  # "anomaly" entries never fail a report

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "severity": self.severity}


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.severity == "check" and not c.passed]

    @property
    def anomalies(self) -> list[Check]:
        return [c for c in self.checks if c.severity == "anomaly" and not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "n_checks": sum(1 for c in self.checks if c.severity == "check"),
            "failures": [c.to_json() for c in self.failures],
            "anomalies": [c.to_json() for c in self.anomalies],
            "checks": [c.to_json() for c in self.checks],
        }


def _label(i: int, row: TableRow) -> str:
    return f"row {i} ({row.family.value} N={row.N} s={row.s} H3={row.h3})"


def _family_problems(row: TableRow) -> list[str]:
    f = row.family
    problems = []
    if f is Family.SMOOTH_FANO and row.N != 0:
        problems.append("smooth Fano quotient needs N = 0")
    if f is Family.FANO_ENRIQUES and row.N != 8:
        problems.append("Fano-Enriques quotient needs N = 8")
    if f is Family.INDEX_HALF:
        if row.s != 2:
            problems.append("index-1/2 quotient needs s = 2")
        if not 1 <= row.N <= 7:
            problems.append("index-1/2 quotient needs 1 <= N <= 7")
    if f is Family.P1112 and (row.N, row.s) != (1, 10):
        problems.append("P(1,1,1,2) quotient needs N = 1, s = 10")
    if row.s <= 0 or row.s % 2:
        problems.append("s must be a positive even integer")
    if row.h3 <= 0:
        problems.append("H^3 must be positive")
    return problems


def validate_all(
    rows: Sequence[TableRow] | None = None,
    quotients: dict[tuple[str, int, int, int], QuotientEntry] | None = None,
) -> Report:
    """Run every dataset check and return a per-check report.

    Checks: the ``H.c2`` identity on each row; the four global bounds and the
    attainment of each of their eight extremes; reproduction of every
    unstarred ``e`` from ``e(Y)``; family constraints; uniqueness of
    ``(family, N, s, H^3)``; ``H^3 = N (mod 4)`` on the index-1/2 rows (an
    observed regularity, not a theorem).  Starred ``e`` values only need one
    candidate with an integral implied ``e(Y)``; otherwise an anomaly is logged.
    """
    rows = load_dataset() if rows is None else list(rows)
    quotients = load_quotients() if quotients is None else quotients
    report = Report()
    add = report.checks.append

    for i, row in enumerate(rows):
        label = _label(i, row)
        try:
            expected = hc2_of_cover(row.s, row.N, row.h3)
        except ValueError as exc:
            add(Check(f"identity:{i}", False, f"{label}: {exc}"))
            continue
        add(Check(f"identity:{i}", expected == row.hc2, f"{label}: H.c2 = {row.hc2}, formula gives {expected}"))

    for name, (lo, hi) in BOUNDS.items():
        values = [getattr(r, name) for r in rows]
        bad = [v for v in values if not lo <= v <= hi]
        add(Check(f"bound:{name}", not bad, f"{lo} <= {name} <= {hi}; out of range: {bad}"))
        for extreme, side in ((lo, "lower"), (hi, "upper")):
            add(Check(f"sharp:{name}={extreme}", extreme in values, f"{side} bound {name} = {extreme} attained"
                      if extreme in values else f"{side} bound {name} = {extreme} not attained"))

    for i, row in enumerate(rows):
        problems = _family_problems(row)
        add(Check(f"family:{i}", not problems, f"{_label(i, row)}: {'; '.join(problems) or 'ok'}"))

    seen: dict[tuple, int] = {}
    dups = []
    for i, row in enumerate(rows):
        if row.key in seen:
            dups.append((seen[row.key], i))
        seen.setdefault(row.key, i)
    add(Check("unique-keys", not dups, f"duplicate (family, N, s, H3) rows: {dups}"))

    half = [(i, r) for i, r in enumerate(rows) if r.family is Family.INDEX_HALF]
    off = [i for i, r in half if (r.h3 - r.N) % 4]
    add(Check("index-half:h3=N(mod 4)", not off, f"rows breaking H3 = N mod 4: {off}"))

    for i, row in enumerate(rows):
        if not row.e_values or _family_problems(row):
            continue
        label = _label(i, row)
        try:
            e_S = branch_surface_euler(row)
        except ValueError as exc:
            add(Check(f"euler:{i}", False, f"{label}: {exc}"))
            continue
        plain = [e for e in row.e_values if not e.starred]
        starred = [e for e in row.e_values if e.starred]
        if plain:
            entry = quotients.get(row.key)
            if entry is None:
                add(Check(f"euler:{i}", False, f"{label}: no e(Y) on file"))
            else:
                e = euler_of_cover(entry.euler_Y, e_S, row.N)
                ok = len(plain) == 1 and plain[0].value == e
                add(Check(f"euler:{i}", ok, f"{label}: e(Y) = {entry.euler_Y} ({entry.name}), e(S) = {e_S}, e = {e}; listed {row.e_cell}"))
        if starred:
            implied = [Fraction(e.value + e_S + row.N, 2) for e in starred]
            ok = any(v.denominator == 1 for v in implied)
            add(Check(
                f"euler-candidate:{i}",
                ok,
                f"{label}: implied e(Y) = {', '.join(map(str, implied))}" + ("" if ok else " (not integral)"),
                severity="anomaly",
            ))
    return report


def _check_range(rng: tuple[int | None, int | None] | None, name: str):
    if rng is None:
        return None
    if len(rng) != 2:
        raise ValueError(f"malformed {name} range {rng!r}")
    lo, hi = rng
    for v in (lo, hi):
        if v is not None and (isinstance(v, bool) or not isinstance(v, int)):
            raise ValueError(f"malformed {name} range {rng!r}")
    if lo is not None and hi is not None and lo > hi:
        raise ValueError(f"malformed {name} range {rng!r}: lower end exceeds upper end")
    return lo, hi


def query(
    rows: Sequence[TableRow] | None = None,
    *,
    N: int | None = None,
    s: int | None = None,
    h3: tuple[int | None, int | None] | None = None,
    hc2: tuple[int | None, int | None] | None = None,
    family: Family | str | None = None,
) -> list[TableRow]:
    """Rows matching every given filter, ordered by ``(family, N, s, H^3)``.

    ``h3`` and ``hc2`` are inclusive ``(lo, hi)`` ranges; either end may be ``None``.
    """
    rows = load_dataset() if rows is None else rows
    h3 = _check_range(h3, "h3")
    hc2 = _check_range(hc2, "hc2")
    fam = Family(family) if family is not None else None

    def inside(v, rng):
        return rng is None or ((rng[0] is None or v >= rng[0]) and (rng[1] is None or v <= rng[1]))

    hits = [
        r
        for r in rows
        if (N is None or r.N == N)
        and (s is None or r.s == s)
        and (fam is None or r.family is fam)
        and inside(r.h3, h3)
        and inside(r.hc2, hc2)
    ]
    return sorted(hits, key=lambda r: r.sort_key)
