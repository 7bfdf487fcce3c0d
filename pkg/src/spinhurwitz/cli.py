"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 method disagreement,
4 monodromy budget exceeded. The default monodromy budget can be set through
the ``SPINHURWITZ_BUDGET`` environment variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from . import spin
from .characters import HurwitzQuery, burnside_hurwitz
from .checks import run_suite
from .degeneration import forced_chi
from .errors import BudgetExceeded, DomainError
from .monodromy import monodromy_hurwitz
from .partitions import Partition
from .series import connected_from_disconnected, disconnected_from_connected, rational_to_json, to_rational
from .spin import Parity

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_DISAGREE, EXIT_BUDGET = 0, 1, 2, 3, 4

SPIN_METHODS = ("recursion", "closed", "eop", "transfer", "all")
HURWITZ_METHODS = ("burnside", "monodromy", "both")


class Disagreement(Exception):
    def __init__(self, record: dict):
        self.record = record
        super().__init__("methods disagree")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _record(query: dict, results: Sequence[tuple[str, Fraction]]) -> dict:
    values = [v for _, v in results]
    return {
        "query": query,
        "results": [{"method": m, "value": rational_to_json(v)} for m, v in results],
        "agreement": all(v == values[0] for v in values),
    }


def spin3_record(h: int, p: Parity, k: int, method: str = "all") -> dict:
    spin.validate(h, p, k)
    names = spin.applicable_methods(h, p) if method == "all" else [method]
    results = [(name, spin.METHODS[name](h, p, k)) for name in names]
    return _record({"h": h, "parity": p.symbol, "k": k}, results)


def hurwitz_record(q: HurwitzQuery, method: str = "both", budget: int | None = None,
                   workers: int = 1) -> dict:
    chi = forced_chi(q.d, q.h, q.profiles)
    if chi % 2:
        raise DomainError(f"Riemann-Hurwitz forces odd Euler characteristic {chi}; no such cover")
    results = []
    if method in ("burnside", "both"):
        results.append(("burnside", burnside_hurwitz(q)))
    if method in ("monodromy", "both"):
        results.append(("monodromy", monodromy_hurwitz(q, budget=budget, workers=workers)))
    return _record(q.to_json(), results)


def _table_cell(cell: tuple[int, str, int]) -> dict:
    h, symbol, k = cell
    return spin3_record(h, Parity.parse(symbol), k)


def table_records(h_max: int, k_max: int, workers: int = 1) -> list[dict]:
    if h_max < 0 or k_max < 0:
        raise DomainError("table bounds must be nonnegative")
    cells = [(h, p.symbol, k) for h in range(h_max + 1) for p in (spin.EVEN, spin.ODD)
             if not (h == 0 and p is spin.ODD) for k in range(k_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_table_cell, cells, chunksize=8))
    else:
        records = [_table_cell(c) for c in cells]
    for rec in records:
        if not rec["agreement"]:
            raise Disagreement(rec)
    return records


def render_table(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        rows = [{**r["query"], "value": r["results"][0]["value"]} for r in records]
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["h", "parity", "k", "numerator", "denominator"])
    for r in records:
        q, v = r["query"], r["results"][0]["value"]
        writer.writerow([q["h"], q["parity"], q["k"], v["numerator"], v["denominator"]])
    return buf.getvalue()


def render_record(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["method", "numerator", "denominator"])
    for r in record["results"]:
        writer.writerow([r["method"], r["value"]["numerator"], r["value"]["denominator"]])
    return buf.getvalue()


def series_transform(direction: str, coefficients: Sequence[str]) -> list[Fraction]:
    values = [to_rational(c) for c in coefficients]
    if direction == "disconnected":
        return disconnected_from_connected(values)
    return connected_from_disconnected(values)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinhurwitz", description="Degree-3 spin and ordinary Hurwitz numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spin3", help="H^{h,p}_{(3)^k} by one or all routes")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("--parity", type=str, default="+", help="'+' (even) or '-' (odd)")
    p.add_argument("--k", type=int, default=0, help="number of (3) insertions")
    p.add_argument("--method", choices=SPIN_METHODS, default="all")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("hurwitz", help="ordinary disconnected Hurwitz number")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("-g", "--genus", type=int, default=0)
    p.add_argument("--profile", action="append", default=[],
                   help="ramification profile such as '2,1' or '1^3'; repeatable")
    p.add_argument("--method", choices=HURWITZ_METHODS, default="both")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("table", help="all spin values up to the given genus and k")
    p.add_argument("--h-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("check", help="run self-audit suites")
    p.add_argument("--suite", choices=("identities", "oracle", "spin", "all"), default="all")

    p = sub.add_parser("series", help="connected <-> disconnected generating-series transform")
    p.add_argument("--direction", choices=("disconnected", "connected"), required=True)
    p.add_argument("coefficients", nargs="*", help="degree 1, 2, ... coefficients, e.g. 1/2")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "spin3":
            record = spin3_record(args.genus, Parity.parse(args.parity), args.k, args.method)
            out.write(render_record(record, args.format))
            return EXIT_OK if record["agreement"] else EXIT_DISAGREE
        if args.command == "hurwitz":
            profiles = [Partition.parse(s) for s in args.profile]
            q = HurwitzQuery(args.degree, args.genus, profiles)
            record = hurwitz_record(q, args.method, args.budget, args.workers)
            out.write(render_record(record, args.format))
            return EXIT_OK if record["agreement"] else EXIT_DISAGREE
        if args.command == "table":
            out.write(render_table(table_records(args.h_max, args.k_max, args.workers), args.format))
            return EXIT_OK
        if args.command == "check":
            results = run_suite(args.suite)
            passed = all(r.passed for r in results)
            report = {"suite": args.suite, "passed": passed,
                      "checks": [r.to_json() for r in results]}
            out.write(json.dumps(report, indent=2) + "\n")
            return EXIT_OK if passed else EXIT_DISAGREE
        if args.command == "series":
            values = series_transform(args.direction, args.coefficients)
            out.write(json.dumps([rational_to_json(v) for v in values]) + "\n")
            return EXIT_OK
    except Disagreement as exc:
        sys.stderr.write("method disagreement:\n" + json.dumps(exc.record, indent=2) + "\n")
        return EXIT_DISAGREE
    except BudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
