"""Command-line front end.

Exit codes: 0 success, 1 verification disagreement, 2 usage or input error,
3 work budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import oracle
from .bijection import count_via_bijection, decode_psi_steps, encode_phi, format_tuple, parse_tuple
from .deletion_contraction import chromatic_polynomial_dc
from .errors import BudgetExceededError, ChromakitError
from .formulas import cycle_closed_form
from .graph import (
    Multigraph,
    complete_graph,
    cycle_graph,
    format_edge_list,
    path_graph,
    read_edge_list,
)
from .inclusion_exclusion import chromatic_by_subsets, cycle_inclusion_exclusion
from .polynomial import IntPolynomial, evaluate, pretty, to_json
from .verify import format_table, verify_cycles
from .walks import chromatic_count_via_walks

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

METHODS = ("dc", "ie", "ie-cycle", "walk", "bijection", "closed-form", "oracle")
CYCLE_ONLY = {"walk", "ie-cycle", "bijection", "closed-form"}
COUNT_ONLY = {"walk", "bijection", "oracle"}


class UsageError(Exception):
    pass


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cycle", type=int, metavar="N", help="cycle graph C_N")
    src.add_argument("--path", type=int, metavar="N", help="path graph P_N")
    src.add_argument("--complete", type=int, metavar="K", help="complete graph K_K")
    src.add_argument("--file", metavar="PATH", help="edge-list file")


def _load_graph(args: argparse.Namespace) -> Multigraph:
    if args.cycle is not None:
        return cycle_graph(args.cycle)
    if args.path is not None:
        return path_graph(args.path)
    if args.complete is not None:
        return complete_graph(args.complete)
    try:
        return read_edge_list(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror or exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromakit", description="Exact chromatic polynomials of cycle graphs, four ways.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", help="chromatic polynomial or coloring count of a graph")
    _add_graph_source(p)
    p.add_argument("--method", choices=METHODS, default="dc")
    p.add_argument("--lambda", dest="lam", type=int, metavar="L", help="evaluate at L colors")
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.add_argument("--timings", action="store_true", help="report elapsed time on stderr")

    p = sub.add_parser("verify", help="cross-check every method on C_1..C_N")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--lambda-max", type=int, required=True)
    p.add_argument("--no-oracle", action="store_true", help="skip the brute-force count")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--timings", action="store_true")

    p = sub.add_parser("encode", help="map a proper cycle coloring to its code word")
    p.add_argument("omega", metavar="TUPLE", help="e.g. (1,2,1,3,2,3,1,4,2)")
    p.add_argument("--lambda", dest="lam", type=int, required=True, metavar="L")

    p = sub.add_parser("decode", help="map a non-constant code word back to a coloring")
    p.add_argument("sigma", metavar="TUPLE")
    p.add_argument("--lambda", dest="lam", type=int, required=True, metavar="L")
    p.add_argument("--debug", action="store_true", help="also print the intermediate word on stderr")

    p = sub.add_parser("graph", help="write a standard graph as an edge list")
    _add_graph_source(p)
    return parser


def _cmd_chromatic(args: argparse.Namespace) -> int:
    method = args.method
    if method in CYCLE_ONLY and args.cycle is None:
        raise UsageError(f"method {method} applies only to --cycle inputs")
    if method in COUNT_ONLY and args.lam is None:
        raise UsageError(f"method {method} produces a count; pass --lambda")
    if args.lam is not None and args.lam < 0:
        raise UsageError("--lambda must be non-negative")
    if method == "walk" and args.lam < 1:
        raise UsageError("method walk needs --lambda >= 1")
    g = _load_graph(args)

    t0 = time.perf_counter()
    poly: IntPolynomial | None = None
    count: int | None = None
    if method == "dc":
        poly, stats = chromatic_polynomial_dc(g)
        if args.timings:
            print(f"dc: nodes={stats.nodes} cache_hits={stats.cache_hits} max_depth={stats.max_depth}", file=sys.stderr)
    elif method == "ie":
        poly = chromatic_by_subsets(g)
    elif method == "ie-cycle":
        poly = cycle_inclusion_exclusion(args.cycle)
    elif method == "closed-form":
        poly = cycle_closed_form(args.cycle)
    elif method == "walk":
        count = chromatic_count_via_walks(args.cycle, args.lam)
    elif method == "bijection":
        count = count_via_bijection(args.cycle, args.lam).total
    else:
        count = oracle.count_proper_colorings(g, args.lam)
    elapsed = time.perf_counter() - t0

    if poly is not None and args.lam is not None:
        count = evaluate(poly, args.lam)
    if count is not None:
        print(count)
    elif args.format == "pretty":
        print(pretty(poly))
    else:
        print(to_json(poly))
    if args.timings:
        print(f"{method}: {elapsed:.6f}s", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.n_max < 1 or args.lambda_max < 0:
        raise UsageError("--n-max must be >= 1 and --lambda-max >= 0")
    report = verify_cycles(args.n_max, args.lambda_max, include_oracle=not args.no_oracle)
    if args.format == "json":
        print(json.dumps(report.to_dict(timings=args.timings), indent=2))
    else:
        print(format_table(report))
        if args.timings:
            for m, t in report.timings.items():
                print(f"{m}: {t:.6f}s", file=sys.stderr)
    return EXIT_OK if report.agree else EXIT_DISAGREE


def _parse(text: str) -> tuple[int, ...]:
    try:
        return parse_tuple(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_encode(args: argparse.Namespace) -> int:
    print(format_tuple(encode_phi(_parse(args.omega), args.lam)))
    return EXIT_OK


def _cmd_decode(args: argparse.Namespace) -> int:
    bar, omega = decode_psi_steps(_parse(args.sigma), args.lam)
    if args.debug:
        print(f"sigma_bar: {format_tuple(bar)}", file=sys.stderr)
    print(format_tuple(omega))
    return EXIT_OK


def _cmd_graph(args: argparse.Namespace) -> int:
    sys.stdout.write(format_edge_list(_load_graph(args)))
    return EXIT_OK


COMMANDS = {
    "chromatic": _cmd_chromatic,
    "verify": _cmd_verify,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "graph": _cmd_graph,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        print(f"chromakit: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ChromakitError, ValueError) as exc:
        print(f"chromakit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
