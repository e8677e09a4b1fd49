"""Command-line front end.

    aqcross generate N [--out FILE]
    aqcross verify [--scope S] [--m-min A --m-max B] [--n-min A --n-max B] [--out FILE]
    aqcross table [--n-min A --n-max B] [--format csv|json] [--out FILE]
    aqcross svg (upsilon M | black N) [--out FILE]

``table`` columns, in order: n, blue, red, black, red_black, blue_red,
blue_black, total, upper_bound, slack, lower_bound.  Exact rationals are
written as "p/q"; JSON values are decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from aqcross import aqcube, arcdiagram, blacklayout, formulas, verify
from aqcross.report import Report, render

TABLE_HEADER = ["n", *formulas.COMPONENTS, "total", "upper_bound", "slack", "lower_bound"]

# scope -> (parameter, default range, hard limit)
SCOPES = {
    "graph": ("n", (1, 10), (1, 14)),
    "partition": ("n", (5, 9), (5, 12)),
    "upsilon": ("m", (0, 8), (0, 12)),
    "black": ("n", (8, 12), (5, 13)),
    "sequences": ("n", (8, 12), (8, 20)),
    "formulas": ("n", (8, 64), (8, 64)),
}


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_generate(args) -> int:
    if not 1 <= args.n <= 20:
        raise SystemExit(f"error: n must be in [1, 20], got {args.n}")
    _emit(aqcube.format_edge_list(aqcube.build(args.n)), args.out)
    return 0


def _range(scope: str, args) -> tuple[int, int]:
    param, (lo, hi), (lim_lo, lim_hi) = SCOPES[scope]
    a = getattr(args, f"{param}_min")
    b = getattr(args, f"{param}_max")
    a = lo if a is None else a
    b = hi if b is None else b
    if a > b or a < lim_lo or b > lim_hi:
        raise SystemExit(f"error: {scope} needs {lim_lo} <= {param}-min <= {param}-max <= {lim_hi}")
    return a, b


def run_verify(scopes: list[str], args, argv: list[str]) -> Report:
    start = time.perf_counter()
    params = {}
    checks = []
    for scope in scopes:
        a, b = _range(scope, args)
        params[scope] = {SCOPES[scope][0]: [a, b]}
        checks += verify.SUITES[scope](a, b)
    return Report(command=argv, params=params, checks=checks, seconds=time.perf_counter() - start)


def cmd_verify(args, argv: list[str]) -> int:
    scopes = list(SCOPES) if args.scope == "all" else [args.scope]
    report = run_verify(scopes, args, argv)
    _emit(json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n", args.out)
    for c in report.failures():
        print(f"FAIL {c.name}: expected {render(c.expected)}, computed {render(c.computed)} {c.detail}", file=sys.stderr)
    return 0 if report.ok else 1


def table_rows(nmin: int, nmax: int) -> list[dict]:
    return [formulas.breakdown(n).row() for n in range(nmin, nmax + 1)]


def format_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{k: render(r[k]) for k in TABLE_HEADER} for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for r in rows:
        w.writerow([render(r[k]) for k in TABLE_HEADER])
    return buf.getvalue()


def cmd_table(args) -> int:
    nmin = 8 if args.n_min is None else args.n_min
    nmax = nmin if args.n_max is None else args.n_max
    if nmin < 8 or nmax < nmin:
        raise SystemExit("error: table needs 8 <= n-min <= n-max")
    _emit(format_table(table_rows(nmin, nmax), args.format), args.out)
    return 0


def cmd_svg(args) -> int:
    if args.target == "upsilon":
        if not 0 <= args.k <= 8:
            raise SystemExit("error: upsilon drawings need 0 <= m <= 8")
        text = arcdiagram.to_svg(arcdiagram.upsilon(args.k))
    else:
        if not 5 <= args.k <= 11:
            raise SystemExit("error: black drawings need 5 <= n <= 11")
        text = blacklayout.to_svg(blacklayout.layout_black(args.k))
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aqcross", description="Exact crossing counts for augmented cube drawings.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write the edge list of AQ_n as 'u v dim' lines")
    g.add_argument("n", type=int)
    g.add_argument("--out", default=None)

    v = sub.add_parser("verify", help="run verification suites and print a JSON report")
    v.add_argument("--scope", choices=[*SCOPES, "all"], default="all")
    v.add_argument("--m-min", type=int, default=None)
    v.add_argument("--m-max", type=int, default=None)
    v.add_argument("--n-min", type=int, default=None)
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--out", default=None)

    t = sub.add_parser("table", help="component counts, total and bounds per n")
    t.add_argument("--n-min", type=int, default=None)
    t.add_argument("--n-max", type=int, default=None)
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--out", default=None)

    s = sub.add_parser("svg", help="draw Upsilon_(m) or the black layout of AQ_n")
    s.add_argument("target", choices=["upsilon", "black"])
    s.add_argument("k", type=int, help="m for upsilon, n for black")
    s.add_argument("--out", default=None)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "verify":
            return cmd_verify(args, argv)
        if args.command == "table":
            return cmd_table(args)
        return cmd_svg(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
