"""Command-line interface for lightsout.

Reports and certificates go to standard output as JSON; diagnostics go to
standard error. Exit codes: 0 success, 1 a valid negative answer
(unsolvable, failed verification, join-table violation), 2 bad usage or
input, 3 an internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .classify import profile
from .config import config
from .errors import CertificateError, InvariantViolation, LightsOutError
from .graph import Graph, format_edge_list, is_tree, random_graph, random_tree, read_graph
from .logging_config import configure_logging, get_logger
from .oracle import activation_stats, enumerate_solutions, pi_partition_oracle
from .solver import null_patterns, nullity, parse_config, rank, solve_config
from .structure import (
    Verdict,
    build_chain,
    certificate_from_dict,
    decompose_tree,
    min_pass_tree,
    table_check,
    verify_certificate,
)

logger = get_logger("cli")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


class UsageError(LightsOutError):
    """Input the command cannot work with (exit code 2)."""


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"probability {value} outside [0, 1]")
    return value


def _emit(data, args: argparse.Namespace) -> None:
    indent = args.indent if args.indent and args.indent > 0 else None
    print(json.dumps(data, indent=indent))


def _require_tree(G: Graph, command: str) -> None:
    if not is_tree(G):
        raise UsageError(f"{command} needs a tree, got n={G.n} with {G.edge_count} edges")


# -- commands ----------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    nu = nullity(G)
    report = {
        "n": G.n,
        "edge_count": G.edge_count,
        "nullity": nu,
        "rank": rank(G),
        "always_solvable": nu == 0,
        "profiles": [p.to_dict() for p in profile(G)],
        "null_patterns": [ell.to_string() for ell in null_patterns(G)],
    }
    _emit(report, args)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    c = parse_config(G, args.config)
    solution = solve_config(G, c)
    if solution is None:
        _emit({"solvable": False}, args)
        return EXIT_NEGATIVE
    _emit(
        {
            "solvable": True,
            "particular": solution.particular.to_string(),
            "kernel_basis": [ell.to_string() for ell in solution.kernel_basis],
            "count": solution.count,
        },
        args,
    )
    return EXIT_OK


def cmd_chain(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    _emit(build_chain(G).to_dict(), args)
    return EXIT_OK


def cmd_partition(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    _require_tree(G, "partition")
    _emit(min_pass_tree(G).to_dict(), args)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    _require_tree(G, "decompose")
    _emit(decompose_tree(G).to_dict(), args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    try:
        data = json.loads(Path(args.certificate).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise CertificateError(f"cannot read certificate {args.certificate}: {e}") from e
    try:
        cert = certificate_from_dict(data)
    except CertificateError as e:
        verdict = Verdict.failed(f"malformed certificate: {e}")
    else:
        verdict = verify_certificate(G, cert, claim_minimal=args.minimal)
    _emit(verdict.to_dict(), args)
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_table_check(args: argparse.Namespace) -> int:
    summary = table_check(args.trials, args.max_size, args.seed, jobs=args.jobs)
    _emit(summary.to_dict(), args)
    return EXIT_OK if summary.ok else EXIT_NEGATIVE


def cmd_oracle_enumerate(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    c = parse_config(G, args.config)
    solutions = enumerate_solutions(G, c)
    _emit({"count": len(solutions), "solutions": [p.to_string() for p in solutions]}, args)
    return EXIT_OK if solutions else EXIT_NEGATIVE


def cmd_oracle_stats(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    if G.n == 0:
        raise UsageError("activation statistics need at least one vertex")
    _emit(activation_stats(G).to_dict(), args)
    return EXIT_OK


def cmd_oracle_pi(args: argparse.Namespace) -> int:
    G = read_graph(args.graph)
    count, witness = pi_partition_oracle(G)
    _emit({"pi": count, **witness.to_dict()}, args)
    return EXIT_OK


def cmd_gen_tree(args: argparse.Namespace) -> int:
    sys.stdout.write(format_edge_list(random_tree(args.n, args.seed)))
    return EXIT_OK


def cmd_gen_graph(args: argparse.Namespace) -> int:
    p = config.gen_edge_probability if args.p is None else args.p
    sys.stdout.write(format_edge_list(random_graph(args.n, p, args.seed)))
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lightsout",
        description="Solve and analyze Lights Out on graphs over GF(2).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level", default=None, help=f"console log level (default {config.log_level})"
    )
    parser.add_argument("--log-file", default=None, help="also log to this rotating file")
    parser.add_argument(
        "--indent",
        type=int,
        default=config.json_indent,
        help="JSON indentation; 0 prints one line",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def graph_command(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="edge-list file ('-' for standard input)")
        p.set_defaults(func=func)
        return p

    graph_command("analyze", cmd_analyze, "nullity, activation numbers and null patterns")
    p = graph_command("solve", cmd_solve, "solve a configuration")
    p.add_argument("config", help="bitstring, first character is vertex 0")
    graph_command("chain", cmd_chain, "vertex-removal chain certificate")
    graph_command("partition", cmd_partition, "minimum always-solvable partition of a tree")
    graph_command("decompose", cmd_decompose, "decompose an always-solvable tree")
    p = graph_command("verify", cmd_verify, "check a certificate against a graph")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument(
        "--minimal", action="store_true", help="also check that a partition is minimum"
    )

    p = sub.add_parser("table-check", help="randomized check of the join table")
    p.add_argument("--trials", type=_positive_int, default=config.table_trials)
    p.add_argument("--max-size", type=_positive_int, default=config.max_join_size)
    p.add_argument("--seed", type=int, default=config.seed)
    p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
    p.set_defaults(func=cmd_table_check)

    oracle = sub.add_parser("oracle", help="brute-force answers for small graphs")
    oracle_sub = oracle.add_subparsers(dest="oracle_command", metavar="QUERY", required=True)
    p = oracle_sub.add_parser("enumerate", help="every solving pattern (n <= 20)")
    p.add_argument("graph")
    p.add_argument("config")
    p.set_defaults(func=cmd_oracle_enumerate)
    p = oracle_sub.add_parser("stats", help="all-ones solution counts per vertex (n <= 20)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_oracle_stats)
    p = oracle_sub.add_parser("pi", help="minimum always-solvable partition (n <= 10)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_oracle_pi)

    gen = sub.add_parser("gen", help="generate a random graph as an edge list")
    gen_sub = gen.add_subparsers(dest="gen_command", metavar="KIND", required=True)
    p = gen_sub.add_parser("tree", help="uniform random labeled tree")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=config.seed)
    p.set_defaults(func=cmd_gen_tree)
    p = gen_sub.add_parser("graph", help="G(n, p) random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_probability, default=None)
    p.add_argument("--seed", type=int, default=config.seed)
    p.set_defaults(func=cmd_gen_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        configure_logging(args.log_level or config.log_level, args.log_file or config.log_file)
    except OSError as e:
        print(f"lightsout: cannot open log file: {e}", file=sys.stderr)
        return EXIT_USAGE
    logger.debug("command %s", args.command)
    try:
        return args.func(args)
    except InvariantViolation as e:
        logger.error("invariant violation: %s", e.args[0] if e.args else e)
        print(f"lightsout: internal error: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except LightsOutError as e:
        print(f"lightsout: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
