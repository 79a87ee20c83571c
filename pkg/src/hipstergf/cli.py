"""``hipstergf`` command line.

    hipstergf count  --family binary --n 10 --oracle
    hipstergf bounds --family colored --n 1000 --format csv
    hipstergf growth --family all --format json
    hipstergf verify

Exit status: 0 success, 1 a check failed, 2 usage error, 3 computation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .families import Family
from .known_gfs import DomainError
from .recurrences import exact_series, sandwich_report
from .series import DEFAULT_ORDER
from .singularity import DEFAULT_TOL, RootFindingError, closed_form_binary_roots, growth_interval
from .trees import census
from .verify import DEFAULT_ORACLE_LIMITS, run_all

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_COMPUTE = 3


class UsageError(Exception):
    pass


def _fmt_float(v: float) -> float:
    """Round to 12 significant digits for output."""
    return float(f"{v:.12g}")


def _parse_oracle_limit(text: str) -> dict[Family, int]:
    parts = text.split("/")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad oracle limit {text!r}") from None
    if len(values) == 1:
        values *= 3
    if len(values) != 3 or min(values) < 0:
        raise argparse.ArgumentTypeError("oracle limit is N or BINARY/ONE2/COLORED, e.g. 14/14/12")
    return dict(zip(Family, values))


def _render(rows: list[dict], fields: list[str], fmt: str, document: object) -> str:
    if fmt == "json":
        return json.dumps(document, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if row.get(k) is None else row[k]) for k in fields})
        return buf.getvalue()
    table = [[str(f) for f in fields]]
    for row in rows:
        table.append(["-" if row.get(k) is None else str(row[k]) for k in fields])
    widths = [max(len(r[i]) for r in table) for i in range(len(fields))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() for r in table]
    return "\n".join(lines) + "\n"


def cmd_count(args) -> int:
    family = Family.parse(args.family)
    limit = args.oracle_limit[family]
    if args.oracle and args.n > limit:
        raise UsageError(f"--oracle needs --n <= {limit} (the oracle limit for {family.value}); got {args.n}")
    h = exact_series(family, args.n).integers()
    rows = []
    for n in range(args.n + 1):
        row = {"n": n, "h": str(h[n])}
        if args.oracle:
            brute = census(family, n, limit=limit)[1]
            row["oracle"] = str(brute)
            row["ok"] = brute == h[n]
        else:
            row["ok"] = True
        rows.append(row)
    fields = ["n", "h"] + (["oracle"] if args.oracle else []) + ["ok"]
    doc = {"family": family.value, "order": args.n, "rows": rows}
    sys.stdout.write(_render(rows, fields, args.format, doc))
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAILED


def cmd_bounds(args) -> int:
    family = Family.parse(args.family)
    report = sandwich_report(family, args.n)
    rows = [{"n": r.n, "f": str(r.f), "h": str(r.h), "g": str(r.g), "ok": r.ok} for r in report.rows]
    doc = {"family": family.value, "order": args.n, "rows": rows}
    sys.stdout.write(_render(rows, ["n", "f", "h", "g", "ok"], args.format, doc))
    return EXIT_OK if report.ok else EXIT_FAILED


def _growth_record(family: Family, tol: float) -> dict:
    gi = growth_interval(family, tol)
    delta = None
    if family is Family.BINARY:
        upper_radical, _ = closed_form_binary_roots()
        delta = _fmt_float(abs(upper_radical - gi.rho_upper_eq))
    return {
        "family": family.value,
        "lower": _fmt_float(gi.lower),
        "upper": _fmt_float(gi.upper),
        "rho_lower_eq": _fmt_float(gi.rho_lower_eq),
        "rho_upper_eq": _fmt_float(gi.rho_upper_eq),
        "bracket_width": _fmt_float(gi.bracket_width),
        "closed_form_delta": delta,
    }


def cmd_growth(args) -> int:
    families = list(Family) if args.family == "all" else [Family.parse(args.family)]
    rows = [_growth_record(f, args.tol) for f in families]
    doc = rows if args.family == "all" else rows[0]
    fields = ["family", "lower", "upper", "rho_lower_eq", "rho_upper_eq", "bracket_width", "closed_form_delta"]
    sys.stdout.write(_render(rows, fields, args.format, doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_all(oracle_limits=args.oracle_limit, order=args.order, tol=args.tol)
    ok = all(c.ok for c in checks)
    rows = [c.as_dict() for c in checks]
    doc = {"ok": ok, "checks": rows}
    if args.format == "table":
        lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.section:<12} {c.name:<48} {c.detail}".rstrip() for c in checks]
        lines.append(f"{'PASS' if ok else 'FAIL'}  overall ({sum(c.ok for c in checks)}/{len(checks)} checks)")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(_render(rows, ["section", "name", "ok", "detail"], args.format, doc))
    return EXIT_OK if ok else EXIT_FAILED


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=_nonneg_int, default=DEFAULT_ORDER, help="truncation order for series checks")
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, help="root bracket width")
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument(
        "--oracle-limit",
        type=_parse_oracle_limit,
        default=dict(DEFAULT_ORACLE_LIMITS),
        help="largest n for brute-force enumeration: N or BINARY/ONE2/COLORED (default 14/14/12)",
    )
    families = [f.value for f in Family]

    parser = argparse.ArgumentParser(prog="hipstergf", description="Count hipster trees and bound their growth.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="hipster counts from the recurrence")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--oracle", action="store_true", help="compare against brute-force enumeration")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bounds", parents=[common], help="lower/exact/upper coefficients f, h, g")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("growth", parents=[common], help="dominant singularities and growth intervals")
    p.add_argument("--family", choices=families + ["all"], default="all")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("verify", parents=[common], help="run every acceptance check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hipstergf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RootFindingError, DomainError, ArithmeticError) as exc:
        print(f"hipstergf: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
