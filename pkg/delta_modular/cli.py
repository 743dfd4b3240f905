"""
Command line interface `gdelta`.
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from delta_modular.boundscalc import BOUND_FIELDS, bounds
from delta_modular.cliquecore import DEFAULT_NODE_LIMIT
from delta_modular.errors import CertificateError, SearchLimitExceeded
from delta_modular.families import FAMILIES, ConstructionSpec, construct
from delta_modular.gdelta import ResultCache, SearchOptions, compute, compute_table, oracle_g
from delta_modular.hnfspace import count_hnf
from delta_modular.matrix_io import format_matrix, read_matrix
from delta_modular.modcert import certify

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_REJECTED, EXIT_INVALID, EXIT_INCOMPLETE, EXIT_CERTIFICATE = 0, 1, 2, 3, 4


def _rank_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma-separated ranks, got '{text}'") from None


def _add_search_options(p: argparse.ArgumentParser):
    p.add_argument("--mode", choices=("generic", "nongeneric"), default="generic")
    p.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True,
                   help="Stable witnesses; without it a shared bound prunes across forms")
    p.add_argument("--cap", type=int, default=DEFAULT_NODE_LIMIT, help="Node limit per clique search")
    p.add_argument("--time-budget", type=float, default=None, help="Wall-clock budget in seconds")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--dedup", action="store_true", help="Remove equivalent Hermite normal forms first")
    p.add_argument("--allow-negations", action="store_true",
                   help="Nongeneric mode: search the universe with zero column and ± pairs")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--cache", default=None, help="JSON result cache")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gdelta", description="Exact column numbers of Δ-modular matrices")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Compute g(Δ, r) or h(Δ, r)")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    _add_search_options(p)

    p = sub.add_parser("table", help="Stream a CSV table of values and bounds")
    p.add_argument("--rank", type=_rank_list, required=True)
    p.add_argument("--delta-max", type=int, required=True)
    p.add_argument("--delta-min", type=int, default=2)
    p.add_argument("--csv", default=None, help="Output file, stdout if omitted")
    _add_search_options(p)

    p = sub.add_parser("verify", help="Certify a matrix file")
    p.add_argument("path")
    p.add_argument("--delta", type=int, required=True)

    p = sub.add_parser("construct", help="Print a matrix of an explicit family")
    p.add_argument("--family", choices=[f for f in FAMILIES if f != "M"], required=True)
    p.add_argument("--delta", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--rank", type=int)

    p = sub.add_parser("bounds", help="Closed-form bounds on g(Δ, r)")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("hnf-count", help="Count Hermite normal forms of determinant Δ")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--mode", choices=("all", "op", "classes"), default="all")

    p = sub.add_parser("oracle", help="Brute-force g(Δ, 2) for Δ ≤ 3")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--rank", type=int, default=2)
    return parser


def _options(args) -> SearchOptions:
    return SearchOptions(node_limit=args.cap, time_budget=args.time_budget, workers=args.workers,
                         deterministic=args.deterministic, deduplicate=args.dedup,
                         allow_negations=args.allow_negations, progress=args.progress)


def _cmd_compute(args) -> int:
    cache = ResultCache(args.cache) if args.cache else None
    result = compute(args.delta, args.rank, args.mode, _options(args), cache)
    print(f"delta={result.delta} rank={result.r} mode={result.mode} value={result.value} "
          f"status={result.status} hnfs={result.hnfs_processed} elapsed_ms={round(result.elapsed * 1000)}")
    print(format_matrix(result.witness), end="")
    return EXIT_OK if result.complete else EXIT_INCOMPLETE


def _cmd_table(args) -> int:
    cache = ResultCache(args.cache) if args.cache else None
    lines = compute_table(args.rank, args.delta_max, args.mode, _options(args), cache, args.delta_min)
    if args.csv is None:
        for line in lines:
            print(line, flush=True)
    else:
        with open(args.csv, "w", encoding="utf-8") as f:
            for line in lines:
                f.write(line + "\n")
                f.flush()
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        matrix = read_matrix(args.path)
    except OSError as exc:
        raise ValueError(f"Cannot read {args.path}: {exc}") from None
    report = certify(matrix, args.delta)
    for key, value in report.as_dict().items():
        print(f"{key}={value}")
    accepted = report.rank == matrix.rows and report.is_generic and report.is_delta_modular
    return EXIT_OK if accepted else EXIT_REJECTED


def _cmd_construct(args) -> int:
    spec = ConstructionSpec(args.family, delta=args.delta, s=args.s, p=args.p, r=args.rank)
    print(format_matrix(construct(spec)), end="")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    print(",".join(BOUND_FIELDS))
    print(bounds(args.delta, args.rank).csv_row())
    return EXIT_OK


def _cmd_hnf_count(args) -> int:
    print(count_hnf(args.delta, args.rank, args.mode))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    result = oracle_g(args.delta, args.rank)
    print(f"delta={result.delta} rank={result.r} value={result.value}")
    print(format_matrix(result.witness), end="")
    return EXIT_OK


COMMANDS = {
    "compute": _cmd_compute,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "construct": _cmd_construct,
    "bounds": _cmd_bounds,
    "hnf-count": _cmd_hnf_count,
    "oracle": _cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OverflowError) as exc:
        print(f"gdelta: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SearchLimitExceeded as exc:
        print(f"gdelta: incomplete: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except CertificateError as exc:
        logger.exception("Internal verification failure")
        print(f"gdelta: verification failure: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATE
