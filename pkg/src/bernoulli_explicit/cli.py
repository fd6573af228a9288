"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import bench, checks, quadrature
from .bernoulli import Method, bernoulli_oracle, bernoulli_eq1, bernoulli_eq2, bernoulli_eq3, bernoulli_eq4
from .polylog import polylog_eulerian_form, polylog_stirling_form
from .rational_core import format_rational, parse_rational
from .tables import build_eulerian, build_stirling

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_METHOD_ORDER = [m.value for m in Method]


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit_json(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


# -- bern ------------------------------------------------------------------


def _bern_rows(max_r: int, formula: str) -> list[dict]:
    stirling = build_stirling(max_r)
    eulerian = build_eulerian(max_r)
    methods = _METHOD_ORDER if formula == "all" else [formula]
    rows = []
    for m in methods:
        if m == "oracle":
            values = [bernoulli_oracle(i) for i in range(max_r + 2)]
        elif m == "eq1":
            values = [bernoulli_eq1(r, stirling) for r in range(1, max_r + 1)]
        elif m == "eq2":
            values = [bernoulli_eq2(r, eulerian) for r in range(1, max_r + 1)]
        elif m == "eq3":
            values = [bernoulli_eq3(r, stirling) for r in range(1, max_r + 1)]
        else:
            values = [bernoulli_eq4(r, eulerian) for r in range(1, max_r + 1)]
        rows += [{"index": v.index, "value": format_rational(v.value), "method": v.method.value}
                 for v in values]
    rows.sort(key=lambda d: (d["index"], _METHOD_ORDER.index(d["method"])))
    return rows


def cmd_bern(args, out) -> int:
    rows = _bern_rows(args.max, args.formula)
    if args.format == "json":
        _emit_json(rows, out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["index", "value", "method"])
        for d in rows:
            w.writerow([d["index"], d["value"], d["method"]])
    else:
        for d in rows:
            out.write(f"B_{d['index']} = {d['value']}  [{d['method']}]\n")
    return EXIT_OK


# -- tables ----------------------------------------------------------------


def cmd_tables(args, out) -> int:
    table = build_stirling(args.max) if args.kind == "stirling" else build_eulerian(args.max)
    first = 1 if args.kind == "stirling" else 0
    if args.format == "json":
        _emit_json([[str(v) for v in row] for row in table.rows], out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["row", "index", "value"])
        for r, row in enumerate(table.rows, start=1):
            for i, v in enumerate(row, start=first):
                w.writerow([r, i, v])
    else:
        for r, row in enumerate(table.rows, start=1):
            out.write(f"{r}: " + " ".join(map(str, row)) + "\n")
    return EXIT_OK


# -- polylog ---------------------------------------------------------------


def cmd_polylog(args, out) -> int:
    r = args.order
    forms = {}
    if args.form in ("stirling", "both"):
        forms["stirling"] = polylog_stirling_form(r)
    if args.form in ("eulerian", "both"):
        if r < 1:
            raise _Usage("the Eulerian form needs --order >= 1")
        forms["eulerian"] = polylog_eulerian_form(r)
    value = None
    if args.eval is not None:
        if args.eval == -1:
            raise _Usage("x = -1 is a pole")
        value = next(iter(forms.values()))(args.eval)
    if args.format == "json":
        payload = {
            "order": r,
            "forms": {
                name: {
                    "numerator": [format_rational(c) for c in f.numerator],
                    "denominator_exponent": f.denominator_exponent,
                    "text": str(f),
                }
                for name, f in forms.items()
            },
        }
        if value is not None:
            payload["x"] = format_rational(args.eval)
            payload["value"] = format_rational(value)
        _emit_json(payload, out)
    else:
        for name, f in forms.items():
            out.write(f"{name}: {f}\n")
        if value is not None:
            out.write(f"Li_{{-{r}}}(-({format_rational(args.eval)})) = {format_rational(value)}\n")
    return EXIT_OK


# -- verify ----------------------------------------------------------------


def cmd_verify(args, out) -> int:
    results = checks.run_exact_checks(args.max)
    failed = [c for c in results if not c.passed]
    if args.format == "json":
        _emit_json([{"name": c.name, "r": c.r, "pass": c.passed, "detail": c.detail} for c in results], out)
    else:
        for c in results:
            out.write(f"{'PASS' if c.passed else 'FAIL'} {c.name} r={c.r}" + (f"  {c.detail}" if not c.passed else "") + "\n")
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    if failed:
        first = failed[0]
        print(f"first failure: {first.name} at r={first.r} {first.detail}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -- quadcheck -------------------------------------------------------------


def cmd_quadcheck(args, out) -> int:
    tol = args.tol
    reports: list[quadrature.VerificationReport] = []
    eq = args.eq
    try:
        if eq == "all":
            reports = quadrature.run_suite(args.max_r, tol)
            reports.insert(0, quadrature.verify_eq6(tol))
        elif eq == "6":
            reports = [quadrature.verify_eq6(tol)]
        elif eq == "5":
            reports = [quadrature.verify_eq5(r, tol) for r in range(args.max_r + 1)]
        elif eq == "10":
            reports = [quadrature.verify_eq10(r, tol) for r in range(1, args.max_r + 1)]
        else:
            ns = [args.n] if args.n is not None else list(quadrature.EQ11_GRID)
            reports = [quadrature.verify_eq11(r, n, tol) for r in range(min(args.max_r, 6) + 1) for n in ns]
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    if args.format == "json":
        _emit_json([rep.to_dict() for rep in reports], out)
    else:
        for rep in reports:
            n = f" n={format_rational(rep.n)}" if rep.n is not None else ""
            out.write(
                f"{'PASS' if rep.passed else 'FAIL'} {rep.identity.value} r={rep.r}{n} "
                f"estimate={rep.estimate:.17g} target={rep.target:.17g} abs_err={rep.abs_err:.3e} "
                f"tol={rep.tolerance:.1e}\n"
            )
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_FAIL


# -- bench -----------------------------------------------------------------


def cmd_bench(args, out) -> int:
    report = bench.run_bench(args.max, args.reps)
    if args.format == "json":
        _emit_json({"max_r": report.max_r, "repetitions": report.repetitions,
                    "method_seconds": report.method_seconds, "table_seconds": report.table_seconds}, out)
    else:
        out.write(f"max_r={report.max_r} repetitions={report.repetitions} (median wall time)\n")
        for name, sec in report.table_seconds.items():
            out.write(f"  table {name:<9} {sec * 1e3:10.3f} ms\n")
        for name, sec in report.method_seconds.items():
            out.write(f"  {name:<15} {sec * 1e3:10.3f} ms\n")
    return EXIT_OK


# -- parser ----------------------------------------------------------------


class _Usage(Exception):
    pass


def _positive(name: str):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1, got {v}")
        return v
    return parse


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected >= 0, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bernoulli-explicit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bern", help="Bernoulli numbers by formula")
    p.add_argument("--max", type=_positive("--max"), required=True)
    p.add_argument("--formula", choices=_METHOD_ORDER + ["all"], default="all")
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.set_defaults(func=cmd_bern)

    p = sub.add_parser("tables", help="dump Stirling or Eulerian triangles")
    p.add_argument("--kind", choices=["stirling", "eulerian"], required=True)
    p.add_argument("--max", type=_positive("--max"), required=True)
    p.add_argument("--format", choices=["plain", "csv", "json"], default="csv")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("polylog", help="closed form of Li_{-r}(-x)")
    p.add_argument("--order", type=_nonneg, required=True)
    p.add_argument("--form", choices=["stirling", "eulerian", "both"], default="both")
    p.add_argument("--eval", type=_rational_arg, default=None, metavar="NUM/DEN")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_polylog)

    p = sub.add_parser("verify", help="exact cross-checks up to --max")
    p.add_argument("--max", type=_positive("--max"), required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quadcheck", help="quadrature checks of the integral representations")
    p.add_argument("--eq", choices=["5", "6", "10", "11", "all"], default="all")
    p.add_argument("--max-r", type=_nonneg, default=8)
    p.add_argument("--n", type=_rational_arg, default=None, metavar="NUM/DEN")
    p.add_argument("--tol", type=float, default=quadrature.DEFAULT_TOL)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_quadcheck)

    p = sub.add_parser("bench", help="time the formulas (values verified first)")
    p.add_argument("--max", type=_positive("--max"), required=True)
    p.add_argument("--reps", type=_positive("--reps"), default=3)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n", None) is not None and args.eq != "11":
        print("--n applies to --eq 11 only", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except _Usage as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
