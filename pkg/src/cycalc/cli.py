"""``cycalc`` command line.

Subcommands::

    tables validate | tables query
    invariants compute
    fixlocus wps
    fermat count
    theorem sixteen

JSON output always carries ``"schema": "cycalc/1"``, has sorted keys and
renders rationals as ``"p/q"`` strings, so identical invocations print
identical bytes.  Exit codes: 0 success, 1 failed check or module error
(with a JSON error object), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import SCHEMA, __version__
from . import fermat, invariants, riemann_roch, tables, weighted
from ._exact import render, to_fraction
from .errors import CycalcError

#: Owning subcommand of every module operation.
ROUTING: dict[str, str] = {
    "intersection.triple_product": "theorem sixteen",
    "intersection.pullback": "theorem sixteen",
    "intersection.pushforward_cover": "theorem sixteen",
    "intersection.canonical_chain": "theorem sixteen",
    "riemann_roch.c2_restriction": "theorem sixteen",
    "riemann_roch.chi_of_resolution": "theorem sixteen",
    "riemann_roch.solve_isolated_count": "theorem sixteen",
    "riemann_roch.minus_K_dot_c2": "invariants compute",
    "invariants.h3_of_cover": "invariants compute",
    "invariants.hc2_of_cover": "invariants compute",
    "invariants.surface_euler": "invariants compute",
    "invariants.euler_of_cover": "invariants compute",
    "invariants.s_from_fano_index": "invariants compute",
    "weighted.fixed_locus": "fixlocus wps",
    "weighted.singularity_type": "fixlocus wps",
    "weighted.hypersurface_fixed_locus": "fixlocus wps",
    "weighted.verify_quotient_projection": "fixlocus wps",
    "fermat.count_fixed_points": "fermat count",
    "fermat.list_fixed_points": "fermat count",
    "tables.load_dataset": "tables validate",
    "tables.validate_all": "tables validate",
    "tables.query": "tables query",
}


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    payload: dict[str, Any]
    human_text: str | None = None

    def render_json(self) -> str:
        return dumps(self.payload)


def _default(obj: Any):
    if isinstance(obj, Fraction):
        return render(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    return str(obj)


def _canonical(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return render(obj)
    if isinstance(obj, dict):
        return {str(k): _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    return obj


def dumps(payload: dict[str, Any]) -> str:
    return json.dumps(_canonical(payload), sort_keys=True, indent=2, default=_default, ensure_ascii=False)


def _ok(payload: dict[str, Any], text: str | None = None, code: int = 0) -> CommandResult:
    return CommandResult(code, {"schema": SCHEMA, **payload}, text)


# -- handlers ----------------------------------------------------------------


def _tables_validate(args) -> CommandResult:
    rows = tables.load_dataset(args.dataset)
    report = tables.validate_all(rows)
    doc = report.to_json()
    if not args.verbose:
        doc.pop("checks")
    lines = [f"{'PASS' if report.passed else 'FAIL'}: {doc['n_checks']} checks, {len(report.failures)} failed"]
    lines += [f"  failed: {c.name}: {c.detail}" for c in report.failures]
    lines += [f"  anomaly: {c.name}: {c.detail}" for c in report.anomalies]
    return _ok({"command": "tables validate", "report": doc}, "\n".join(lines), 0 if report.passed else 1)


def _range(lo, hi):
    return None if lo is None and hi is None else (lo, hi)


def _tables_query(args) -> CommandResult:
    rows = tables.load_dataset(args.dataset)
    hits = tables.query(
        rows,
        N=args.n,
        s=args.s,
        h3=_range(args.h3_min, args.h3_max),
        hc2=_range(args.hc2_min, args.hc2_max),
        family=args.family,
    )
    return _ok({"command": "tables query", "count": len(hits), "rows": [r.to_json() for r in hits]}, tables.dump_tsv(hits))


def _invariants_compute(args) -> CommandResult:
    s = args.s
    notes = []
    if args.fano_index is not None:
        derived = invariants.s_from_fano_index(to_fraction(args.fano_index), args.cartier_multiple)
        if s is not None and s != derived:
            raise ValueError(f"--s {s} contradicts Fano index {args.fano_index} (gives s = {derived})")
        s = derived
        notes.append(f"s = {derived} from Fano index {args.fano_index}")
    if s is None:
        raise ValueError("give --s or --fano-index")
    euler_Y = to_fraction(args.euler_y) if args.euler_y is not None else None
    euler_S = to_fraction(args.euler_s) if args.euler_s is not None else None
    if euler_S is not None and euler_Y is None:
        raise ValueError("--euler-s needs --euler-y")
    out = invariants.compute_invariants(s, args.n, to_fraction(args.d), euler_Y, euler_S)
    doc = {"command": "invariants compute", "input": {"s": s, "N": args.n, "d": to_fraction(args.d)}, **out}
    doc["minus_K_dot_c2"] = riemann_roch.minus_K_dot_c2(args.n)
    if notes:
        doc["notes"] = notes
    return _ok(doc)


def _fixlocus_wps(args) -> CommandResult:
    names = [c.strip() for c in args.coords.split(",")] if args.coords else None
    space = weighted.WeightedSpace.of([int(w) for w in args.weights.split(",")], names)
    inv = weighted.InvolutionSpec.parse(args.signs)
    strata = weighted.fixed_locus(space, inv)
    locus = weighted.hypersurface_fixed_locus(space, inv, args.degree, args.poly)
    doc: dict[str, Any] = {
        "command": "fixlocus wps",
        "ambient_strata": [s.to_json(space) for s in strata],
        "hypersurface": locus.to_json(),
        "coordinate_point_singularities": {
            space.coordinate_names[i]: str(weighted.singularity_type(space, i)) for i in range(len(space.weights))
        },
    }
    if args.quotient:
        reported = [to_fraction(x) for x in args.reported_point.split(",")] if args.reported_point else None
        report = weighted.verify_quotient_projection(space, inv, args.degree, locus.polynomial, reported_point=reported)
        doc["quotient_projection"] = report.to_json()
        code = 0 if report.passed else 1
    else:
        code = 0
    return _ok(doc, code=code)


def _fermat_count(args) -> CommandResult:
    system = fermat.FermatSystem.parse(args.ambient, args.eqs, args.signs)
    result = fermat.count_fixed_points(system)
    doc = {"command": "fermat count", **result.to_json()}
    if args.list and not result.identity:
        doc["points"] = [[fermat.render(x) for x in p] for p in fermat.list_fixed_points(system, result)]
    return _ok(doc)


def _theorem_sixteen(args) -> CommandResult:
    trace, k = riemann_roch.sixteen_point_derivation()
    return _ok({"command": "theorem sixteen", "trace": trace, "k": k}, "\n".join(trace))


# -- parser --------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cycalc", description="Exact calculus for Calabi-Yau threefolds with non-Gorenstein involutions.")
    p.add_argument("--version", action="version", version=f"cycalc {__version__}")
    top = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    t = top.add_parser("tables", help="classification dataset").add_subparsers(dest="action", required=True, parser_class=_Parser)
    v = t.add_parser("validate", help="run every dataset check")
    v.add_argument("--dataset", help="TSV path (default: shipped fixture or $CYCALC_DATASET)")
    v.add_argument("--verbose", action="store_true", help="include passing checks in the JSON")
    v.add_argument("--format", choices=["json", "text"], default="json")
    v.set_defaults(handler=_tables_validate)
    q = t.add_parser("query", help="filter dataset rows")
    q.add_argument("--dataset")
    q.add_argument("--n", type=int)
    q.add_argument("--s", type=int)
    q.add_argument("--family", choices=[f.value for f in tables.Family])
    q.add_argument("--h3-min", type=int)
    q.add_argument("--h3-max", type=int)
    q.add_argument("--hc2-min", type=int)
    q.add_argument("--hc2-max", type=int)
    q.add_argument("--format", choices=["json", "tsv"], default="json")
    q.set_defaults(handler=_tables_query)

    i = top.add_parser("invariants", help="cover invariants").add_subparsers(dest="action", required=True, parser_class=_Parser)
    c = i.add_parser("compute", help="H^3, H.c2 and e of the double cover")
    c.add_argument("--s", type=int)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", required=True, help="|H'^3| as p/q")
    c.add_argument("--euler-y")
    c.add_argument("--euler-s")
    c.add_argument("--fano-index", help="r_Y/2 as p/q; determines s")
    c.add_argument("--cartier-multiple", type=int)
    c.add_argument("--format", choices=["json"], default="json")
    c.set_defaults(handler=_invariants_compute)

    f = top.add_parser("fixlocus", help="weighted projective fixed loci").add_subparsers(dest="action", required=True, parser_class=_Parser)
    w = f.add_parser("wps", help="fixed locus of a sign involution on a weighted hypersurface")
    w.add_argument("--weights", required=True)
    w.add_argument("--degree", type=int, required=True)
    w.add_argument("--poly", required=True)
    w.add_argument("--signs", required=True)
    w.add_argument("--coords", help="comma-separated coordinate names")
    w.add_argument("--quotient", action="store_true", help="also verify the projection dropping the negated coordinate")
    w.add_argument("--reported-point", help="a point to test for membership, e.g. 0,0,0,0,1")
    w.add_argument("--format", choices=["json"], default="json")
    w.set_defaults(handler=_fixlocus_wps)

    m = top.add_parser("fermat", help="Fermat complete intersections").add_subparsers(dest="action", required=True, parser_class=_Parser)
    fc = m.add_parser("count", help="certified count of isolated fixed points")
    fc.add_argument("--ambient", type=int, required=True)
    fc.add_argument("--eqs", required=True, help='e.g. "2:1,1,1,1,1,1;4:1,1,1,1,1,1"')
    fc.add_argument("--signs", required=True)
    fc.add_argument("--list", action="store_true", help="include the points")
    fc.add_argument("--format", choices=["json"], default="json")
    fc.set_defaults(handler=_fermat_count)

    th = top.add_parser("theorem", help="derivations").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sx = th.add_parser("sixteen", help="derive the number of isolated fixed points")
    sx.add_argument("--format", choices=["text", "json"], default="text")
    sx.set_defaults(handler=_theorem_sixteen)
    return p


def _glue_dash_values(argv: Sequence[str]) -> list[str]:
    """``--signs -,-,+`` would read as an option; rewrite it to ``--signs=-,-,+``."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--signs", "--reported-point", "--euler-y", "--euler-s", "--d"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def dispatch(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_dash_values(argv))
    except _UsageError as exc:
        return CommandResult(2, {"schema": SCHEMA, "error": {"type": "usage", "message": str(exc)}}, parser.format_usage())
    handler: Callable[[argparse.Namespace], CommandResult] = args.handler
    try:
        result = handler(args)
    except (CycalcError, ValueError, KeyError, TypeError, ArithmeticError, OSError) as exc:
        payload = {"schema": SCHEMA, "error": {"type": type(exc).__name__, "message": str(exc)}}
        return CommandResult(1, payload)
    fmt = getattr(args, "format", "json")
    if fmt in ("text", "tsv") and result.human_text is not None:
        return result
    return CommandResult(result.exit_code, result.payload, None)


def main(argv: Sequence[str] | None = None) -> int:
    result = dispatch(sys.argv[1:] if argv is None else argv)
    if result.exit_code == 2:
        sys.stderr.write((result.human_text or "") + result.payload["error"]["message"] + "\n")
        return 2
    if result.human_text is not None:
        text = result.human_text
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(result.render_json() + "\n")
    return result.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
