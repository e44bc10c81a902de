"""Command-line front end: coefficient extraction, identity sweeps, and
the numeric tables for the logarithmic-series cases.

Exit codes: 0 success (all verdicts true), 1 any failed verdict,
2 usage / lexical / parse / evaluation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import identities
from .lang import EvalError, LexError, ParseError, evaluate, parse_text
from .rationals import format_rational, parse_rational
from .series import coefficient

TABLE_CASES = {
    "c0": 0,
    "c1": 1,
    "c2": 2,
    "cm1": -1,
    "cm2": -2,
    "cm3": -3,
    "cm4": -4,
}

DEFAULT_ORDER_MARGIN = 8


def parse_grid(text: str) -> list[Fraction]:
    """Grid flag syntax: a single rational, an inclusive integer range
    ``a..b``, or a comma-separated list of either."""
    values: list[Fraction] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo_text, _, hi_text = part.partition("..")
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            values.extend(Fraction(v) for v in range(lo, hi + 1))
        else:
            values.append(parse_rational(part))
    return values


def _int_grid(values: list[Fraction], flag: str) -> list[int]:
    out = []
    for v in values:
        if v.denominator != 1:
            raise ValueError(f"{flag} must be integer, got {format_rational(v)}")
        out.append(int(v))
    return out


def _cmd_coeff(args) -> int:
    expr = parse_text(args.expr)
    order = args.order if args.order is not None else args.n + DEFAULT_ORDER_MARGIN
    if order < args.n:
        raise ValueError(f"--order {order} is below --n {args.n}")
    value = coefficient(evaluate(expr, order), args.n)
    if args.json:
        print(json.dumps({
            "expr": args.expr,
            "n": args.n,
            "coefficient": format_rational(value),
        }))
    else:
        print(format_rational(value))
    return 0


def _report_json(report: identities.IdentityReport) -> dict:
    params = {k: (format_rational(v) if isinstance(v, Fraction) else v)
              for k, v in report.params.items()}
    return {
        "identity": report.identity,
        "params": params,
        "routes": {k: format_rational(v) for k, v in report.route_values.items()},
        "verdict": report.verdict,
        "notes": list(report.notes),
    }


def _cmd_verify(args) -> int:
    identity = args.identity.replace("-", "_")
    ns = _int_grid(parse_grid(args.n), "--n")
    cs = _int_grid(parse_grid(args.c), "--c")
    if identity == "vandermonde":
        ms = parse_grid(args.m) if args.m else [Fraction(0)]
        if any(c < 0 for c in cs):
            raise ValueError("vandermonde needs c >= 0")
        reports = identities.verify(identity, ms=ms, ns=ns, cs=cs)
    else:
        if args.m:
            raise ValueError(f"--m does not apply to {args.identity}")
        if identity == "log_closed" and any(c >= 1 for c in cs):
            raise ValueError("log-closed has no closed form for c >= 1")
        reports = identities.verify(identity, ns=ns, cs=cs)
    if args.json:
        print(json.dumps([_report_json(r) for r in reports], indent=2))
    else:
        for r in reports:
            params = " ".join(
                f"{k}={format_rational(v) if isinstance(v, Fraction) else v}"
                for k, v in r.params.items()
            )
            routes = " ".join(
                f"{k}={format_rational(v)}" for k, v in r.route_values.items()
            )
            status = "ok" if r.verdict else "FAIL"
            print(f"{r.identity} {params}: {routes} {status}")
    return 0 if all(r.verdict for r in reports) else 1


def _table_rows(c: int, n_max: int) -> list[dict]:
    rows = []
    for n in range(0, n_max + 1):
        lhs = identities.log_lhs(n, c)
        rhs = identities.log_rhs(n, c)
        closed = identities.log_closed(n, c) if c <= 0 else None
        rows.append({"n": n, "lhs": lhs, "rhs": rhs, "closed": closed})
    return rows


def _cmd_table(args) -> int:
    c = TABLE_CASES[args.case]
    rows = _table_rows(c, args.n_max)

    def fmt(v) -> str:
        return "-" if v is None else format_rational(v)

    if args.json:
        print(json.dumps([
            {"n": row["n"], "lhs": fmt(row["lhs"]), "rhs": fmt(row["rhs"]),
             "closed": fmt(row["closed"])}
            for row in rows
        ], indent=2))
    elif args.csv:
        print("n,lhs,rhs,closed")
        for row in rows:
            print(f"{row['n']},{fmt(row['lhs'])},{fmt(row['rhs'])},{fmt(row['closed'])}")
    else:
        print(f"{'n':>4}  {'lhs':>16}  {'rhs':>16}  {'closed':>16}")
        for row in rows:
            print(f"{row['n']:>4}  {fmt(row['lhs']):>16}  "
                  f"{fmt(row['rhs']):>16}  {fmt(row['closed']):>16}")
    ok = all(row["lhs"] == row["rhs"] for row in rows)
    ok = ok and all(row["closed"] is None or row["closed"] == row["lhs"]
                    for row in rows)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactseries",
        description="Exact binomial-coefficient series identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeff = sub.add_parser("coeff", help="coefficient of z^n in an expression")
    p_coeff.add_argument("expr")
    p_coeff.add_argument("--n", type=int, required=True)
    p_coeff.add_argument("--order", type=int, default=None)
    p_coeff.add_argument("--json", action="store_true")
    p_coeff.set_defaults(func=_cmd_coeff)

    p_verify = sub.add_parser("verify", help="multi-route identity sweep")
    p_verify.add_argument("identity",
                          choices=["vandermonde", "log-dual", "log-closed"])
    p_verify.add_argument("--m", default=None,
                          help="rational or grid (vandermonde only)")
    p_verify.add_argument("--n", required=True, help="integer grid, e.g. 0..12")
    p_verify.add_argument("--c", required=True, help="integer grid, e.g. -5..5")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="numeric tables of worked cases")
    p_table.add_argument("family", choices=["euler"])
    p_table.add_argument("--case", required=True, choices=sorted(TABLE_CASES))
    p_table.add_argument("--n-max", type=int, required=True, dest="n_max")
    fmt = p_table.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p_table.set_defaults(func=_cmd_table)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (LexError, ParseError, EvalError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
