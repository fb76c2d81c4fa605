#!/usr/bin/env python3
"""
uivd command line: recognize, kernelize, solve, gen, verify.

Exit codes: 0 ok / yes, 1 not unit interval, 2 bad input, 3 NO (kernel
or solver), 4 verification mismatch, 5 oracle size guard.
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .config import DEFAULT_WORKERS, ORACLE_VERTEX_LIMIT, configure_logging
from .errors import DomainError, GraphParseError, OversizeError
from .generator import DEFAULT_NOISE_DENSITY, generate_text
from .graph_core import Graph, Instance, load_file
from .kernel import KernelizationPipeline, Verdict, verify_batch, verify_instance
from .oracle import oracle_solve
from .recognition import UnitIntervalCertificate, recognize
from .schemas import SolutionRecord, recognition_record

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_UNIT_INTERVAL = 1
EXIT_BAD_INPUT = 2
EXIT_NO = 3
EXIT_MISMATCH = 4
EXIT_OVERSIZE = 5


def _read_graph(path: str) -> Graph:
    try:
        return load_file(path)
    except UnicodeDecodeError:
        raise GraphParseError(1, f"{path} is not ASCII text")


def _emit(payload: str) -> None:
    sys.stdout.write(payload.rstrip("\n") + "\n")


def cmd_recognize(args: argparse.Namespace) -> int:
    result = recognize(_read_graph(args.path))
    _emit(recognition_record(result).model_dump_json(indent=2, exclude_none=True))
    return EXIT_OK if isinstance(result, UnitIntervalCertificate) else EXIT_NOT_UNIT_INTERVAL


def cmd_kernelize(args: argparse.Namespace) -> int:
    graph = _read_graph(args.path)
    pipeline = KernelizationPipeline(small_instance_shortcut=args.shortcut)
    result = pipeline.run(graph, args.k)
    out = args.out or str(Path(args.path).with_suffix("")) + ".kernel"
    pipeline.write_outputs(result, out, args.stats)
    _emit(result.stats.model_dump_json(indent=2))
    return EXIT_NO if result.verdict is Verdict.NO else EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    solution = oracle_solve(Instance(_read_graph(args.path), args.k))
    record = SolutionRecord(
        feasible=solution is not None,
        k=args.k,
        deleted=sorted(solution.deleted) if solution is not None else [],
    )
    _emit(record.model_dump_json(indent=2))
    return EXIT_OK if solution is not None else EXIT_NO


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise DomainError(f"--n must be at least 1, got {args.n}")
    text = generate_text(
        args.n,
        args.noise,
        args.seed,
        span=Fraction(args.span) if args.span is not None else None,
        noise_density=args.noise_density,
    )
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
        logger.info(f"Wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.batch:
        records = verify_batch(
            args.batch, args.n, args.noise, args.k,
            seed=args.seed, workers=args.workers, force=args.force, limit=args.limit,
        )
    else:
        if not args.path:
            raise DomainError("verify needs a graph file or --batch")
        records = [verify_instance(_read_graph(args.path), args.k, force=args.force, limit=args.limit)]

    for record in records:
        _emit(record.model_dump_json())
    return EXIT_OK if all(r.agree for r in records) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uivd", description="Unit Interval Vertex Deletion kernelization")
    parser.add_argument("--log-level", default=None, help="Overrides UIVD_LOG")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="Certifying unit interval recognition")
    p.add_argument("path")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("kernelize", help="Compute an equivalent small instance")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None, help="Output prefix (default: <path>.kernel)")
    p.add_argument("--stats", default=None, help="Stats JSON path (default: <out>.stats.json)")
    p.add_argument("--shortcut", action="store_true", help="Pass instances with n < k^4 through unchanged")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("solve", help="Exact solver")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="Generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--noise", "--k-noise", dest="noise", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--span", default=None, help="Interval line length, default n/4 (rational allowed)")
    p.add_argument("--noise-density", type=float, default=DEFAULT_NOISE_DENSITY)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="Check oracle(G, k) == oracle(kernel)")
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--force", action="store_true", help="Run the oracle on oversized instances")
    p.add_argument("--limit", type=int, default=ORACLE_VERTEX_LIMIT)
    p.add_argument("--batch", type=int, default=0, help="Verify this many generated instances instead")
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--noise", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the uivd command."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        if getattr(args, "k", None) is not None and args.k < 0:
            raise DomainError(f"--k must be non-negative, got {args.k}")
        return args.func(args)
    except (OSError, ValueError, GraphParseError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OversizeError as e:
        logger.warning(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_OVERSIZE


if __name__ == "__main__":
    sys.exit(main())
