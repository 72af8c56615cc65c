"""Command line entry point: ``g3enum compute --degree D --quantity Q``.

Exit status is 0 on success, 2 when the input is invalid, and 3 when an
internal consistency check (route agreement, integrality) fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from .cr3 import Cr3Route, Report, breakdown, cr3, n3d
from .errors import ConsistencyError, DomainError, QueryError
from .gw_core import CACHE_ENV, MemoStore, using_store
from .rt import load_rt_overrides, rt_standard
from .singular import S12Route, s12, s21
from .taut import tau3

QUANTITIES = ("n3d", "cr3", "s12", "s21", "tau3", "rt", "breakdown")
ROUTES = ("theorem", "corollary", "lemma", "both")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3


def exact_str(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g3enum",
        description="Exact counts of genus-three plane curves with fixed complex structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("compute", help="compute one quantity at one degree")
    p.add_argument("--degree", "-d", type=int, required=True)
    p.add_argument("--quantity", "-q", choices=QUANTITIES, default="n3d")
    p.add_argument("--hyperflexes", type=int, default=0)
    p.add_argument("--route", choices=ROUTES, default="both")
    p.add_argument("--rt-file", help="file of 'g d value' lines overriding computed RT values")
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--cache", help=f"memo cache file (default: ${CACHE_ENV}, else in-memory)")
    return parser


def _route_for_s12(route: str) -> list[S12Route]:
    if route == "both":
        return [S12Route.COROLLARY, S12Route.LEMMA]
    if route == "corollary":
        return [S12Route.COROLLARY]
    if route == "lemma":
        return [S12Route.LEMMA]
    raise QueryError("s12 routes are corollary, lemma or both")


def compute(quantity: str, d: int, hyperflexes: int, route: str, overrides=None) -> list[Report]:
    if quantity == "breakdown":
        b = breakdown(d)
        return [Report(name, d, value, "both") for name, value in b.as_dict().items()]
    if quantity == "n3d":
        return [Report("n3d", d, n3d(d, hyperflexes, overrides), "corollary")]
    if quantity == "cr3":
        if route == "lemma":
            raise QueryError("cr3 routes are theorem, corollary or both")
        return [Report("cr3", d, cr3(d, hyperflexes, Cr3Route(route)), route)]
    if quantity == "s12":
        values = {r: s12(d, r) for r in _route_for_s12(route)}
        if len(set(values.values())) != 1:
            raise ConsistencyError(f"s12 routes disagree at d={d}: {values}")
        return [Report("s12", d, next(iter(values.values())), route)]
    if quantity == "s21":
        return [Report("s21", d, s21(d))]
    if quantity == "tau3":
        return [Report("tau3", d, tau3(d))]
    if quantity == "rt":
        if d < 1:
            raise DomainError(f"degree must be >= 1, got {d}")
        return [Report("rt", d, rt_standard(3, d, overrides))]
    raise QueryError(f"unknown quantity {quantity!r}")


def render(reports: list[Report], fmt: str, quantity: str, cache_hits: int) -> str:
    if fmt == "json":
        if quantity == "breakdown":
            value = {r.quantity: exact_str(r.value) for r in reports}
            route = "both"
            degree = reports[0].degree
        else:
            (r,) = reports
            value, route, degree = exact_str(r.value), r.route, r.degree
        payload = {
            "quantity": quantity,
            "degree": degree,
            "value": value,
            "route": route,
            "cache_hits": cache_hits,
        }
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["quantity", "degree", "value"])
        for r in reports:
            writer.writerow([r.quantity, r.degree, exact_str(r.value)])
        return buf.getvalue().rstrip("\n")
    width = max(len(r.quantity) for r in reports)
    return "\n".join(f"{r.quantity:<{width}}  d={r.degree}  {exact_str(r.value)}" for r in reports)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cache_path = args.cache or os.environ.get(CACHE_ENV) or None
    try:
        if args.hyperflexes < 0:
            raise DomainError("--hyperflexes must be >= 0")
        overrides = load_rt_overrides(args.rt_file) if args.rt_file else None
        store = MemoStore(cache_path)
        with using_store(store):
            reports = compute(args.quantity, args.degree, args.hyperflexes, args.route, overrides)
        if cache_path:
            store.dump(cache_path)
    except (DomainError, QueryError, OSError) as exc:
        print(f"g3enum: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConsistencyError as exc:
        print(f"g3enum: consistency check failed: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    print(render(reports, args.format, args.quantity, store.hits))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
