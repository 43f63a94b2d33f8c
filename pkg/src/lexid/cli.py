"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 graph not twin-free (the
twin pair is printed), 3 verification rejected the supplied code.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bench import BENCH_FAMILIES, bench
from .exact import DEFAULT_EXACT_CAP, greedy_code, minimalize, minimum_code
from .generate import FAMILIES, gen, nonminimal_grid_fixture
from .graph import Code, Graph, TwinFailure, TwinsError, find_twins, is_identifying_code
from .graphio import ParseError, parse_graph, to_dimacs, to_edge_list
from .orderings import OrderingStrategy, apply_sequence, code_to_original
from .restarts import run_restarts
from .rng import SplitMix64
from .sparse import lex_code_sparse
from .dense import lex_code_dense

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TWINS = 2
EXIT_INVALID = 3

ENV_SEED = "LEXID_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get(ENV_SEED)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_SEED} must be an integer, got {raw!r}") from None


def _add_graph_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("graph", help="graph file path, or '-' for standard input")
    parser.add_argument(
        "--input-format",
        choices=("auto", "edgelist", "dimacs"),
        default="auto",
        help="input format (default: auto-detect)",
    )


def _read_graph(args: argparse.Namespace) -> Graph:
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.graph).read_text(encoding="utf-8")
    return parse_graph(text, args.input_format)


def _parse_code_arg(raw: str) -> tuple[int, ...]:
    tokens = raw.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty code argument")
    try:
        members = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"code must be a list of integers, got {raw!r}") from None
    return tuple(sorted(set(members)))


def _strategy_from_args(args: argparse.Namespace) -> OrderingStrategy:
    if args.ordering == "explicit":
        if args.perm is None:
            raise ValueError("--ordering explicit requires --perm")
        return OrderingStrategy("explicit", _parse_perm_arg(args.perm))
    if args.perm is not None:
        raise ValueError("--perm only applies with --ordering explicit")
    return OrderingStrategy(args.ordering)


def _parse_perm_arg(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in raw.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"permutation must be a list of integers, got {raw!r}") from None


def _print_code(code: Code) -> None:
    print(" ".join(str(v) for v in code))
    print(code.cardinality)


def _twins_exit(pair: tuple[int, int]) -> int:
    print(f"error: graph is not twin-free (twins {pair[0]} {pair[1]})", file=sys.stderr)
    return EXIT_TWINS


def _cmd_code(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    algorithm = "dense" if args.dense else "sparse"
    strategy = _strategy_from_args(args)
    seed = args.seed if args.seed is not None else _default_seed()
    if strategy.kind == "identity":
        sequence = list(range(1, g.n + 1))
        target = g
    else:
        sequence = strategy.sequence_for(g, SplitMix64(seed))
        target = apply_sequence(g, sequence)
    if algorithm == "dense":
        outcome = lex_code_dense(target.neighborhood_matrix)
    else:
        outcome = lex_code_sparse(target.neighborhood_array)
    if isinstance(outcome, TwinFailure):
        pair = tuple(sorted((sequence[outcome.k - 1], sequence[outcome.j - 1])))
        if args.json:
            print(json.dumps({
                "schema": 1,
                "n": g.n,
                "algorithm": algorithm,
                "ordering": strategy.kind,
                "twins": list(pair),
            }))
            return EXIT_TWINS
        return _twins_exit(pair)
    code = code_to_original(outcome, sequence)
    verified = is_identifying_code(g, code)
    if args.json:
        print(json.dumps({
            "schema": 1,
            "n": g.n,
            "algorithm": algorithm,
            "ordering": strategy.kind,
            "code": list(code),
            "cardinality": code.cardinality,
            "verified": verified,
        }))
    else:
        _print_code(code)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    members = _parse_code_arg(args.code)
    for v in members:
        if not 1 <= v <= g.n:
            raise ValueError(f"code member {v} out of range 1..{g.n}")
    if is_identifying_code(g, members):
        print("valid")
        return EXIT_OK
    print("invalid")
    return EXIT_INVALID


def _cmd_twins(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    pair = find_twins(g)
    if pair is None:
        print("twin-free")
        return EXIT_OK
    print(f"{pair[0]} {pair[1]}")
    return EXIT_TWINS


def _cmd_minimum(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    try:
        result = minimum_code(g, max_vertices=args.max_n)
    except TwinsError as exc:
        return _twins_exit(exc.pair)
    _print_code(result.code)
    return EXIT_OK


def _cmd_minimalize(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    members = _parse_code_arg(args.code)
    for v in members:
        if not 1 <= v <= g.n:
            raise ValueError(f"code member {v} out of range 1..{g.n}")
    _print_code(minimalize(g, Code(members)))
    return EXIT_OK


def _cmd_greedy(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    outcome = greedy_code(g)
    if isinstance(outcome, TwinFailure):
        return _twins_exit(outcome.pair)
    _print_code(outcome)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "fixture":
        if args.params:
            raise ValueError("family 'fixture' takes no parameters")
        g = nonminimal_grid_fixture()
    else:
        seed = args.seed if args.seed is not None else _default_seed()
        g = gen(args.family, args.params, seed)
    text = to_dimacs(g) if args.output_format == "dimacs" else to_edge_list(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_restarts(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    strategy = _strategy_from_args(args)
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        report = run_restarts(g, strategy, args.restarts, seed)
    except TwinsError as exc:
        return _twins_exit(exc.pair)
    print(f"strategy: {report.strategy}")
    print(f"restarts: {len(report.cardinalities)}")
    print("best: " + " ".join(str(v) for v in report.best_code))
    print(f"best cardinality: {report.best_cardinality}")
    for i, (card, restart_seed, seconds) in enumerate(
        zip(report.cardinalities, report.seeds, report.elapsed_seconds)
    ):
        print(f"restart {i}: seed={restart_seed} cardinality={card} seconds={seconds:.6f}")
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    sizes = [int(s) for s in args.sizes.replace(",", " ").split()]
    for family in families:
        if family not in BENCH_FAMILIES:
            raise ValueError(f"unknown bench family {family!r}; choose from {', '.join(BENCH_FAMILIES)}")
    seed = args.seed if args.seed is not None else _default_seed()
    report = bench(families, sizes, repetitions=args.reps, seed=seed, gnp_p=args.gnp_p)
    text = report.to_csv()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lexid", description="Lexicographic identifying codes for graphs.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("code", help="construct an identifying code")
    _add_graph_arg(p)
    algo = p.add_mutually_exclusive_group()
    algo.add_argument("--dense", action="store_true", help="use the bit-matrix algorithm")
    algo.add_argument("--sparse", action="store_true", help="use the adjacency-list algorithm (default)")
    p.add_argument("--ordering", choices=("identity", "random", "degree-asc", "degree-desc", "explicit"),
                   default="identity", help="vertex ordering before the run (default: identity)")
    p.add_argument("--perm", help="processing order for --ordering explicit, e.g. '3,1,2'")
    p.add_argument("--seed", type=int, help=f"seed for random ordering (default: ${ENV_SEED} or 0)")
    p.add_argument("--json", action="store_true", help="emit a JSON object instead of text")
    p.set_defaults(func=_cmd_code)

    p = sub.add_parser("verify", help="check whether a code identifies the graph")
    _add_graph_arg(p)
    p.add_argument("--code", required=True, help="code members, e.g. '2,3,4,5,6'")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("twins", help="report the first twin pair, if any")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_twins)

    p = sub.add_parser("minimum", help="exact minimum identifying code (small graphs)")
    _add_graph_arg(p)
    p.add_argument("--max-n", type=int, default=DEFAULT_EXACT_CAP,
                   help=f"refuse graphs larger than this (default: {DEFAULT_EXACT_CAP})")
    p.set_defaults(func=_cmd_minimum)

    p = sub.add_parser("minimalize", help="shrink an identifying code to a minimal one")
    _add_graph_arg(p)
    p.add_argument("--code", required=True, help="identifying code to shrink")
    p.set_defaults(func=_cmd_minimalize)

    p = sub.add_parser("greedy", help="set-cover greedy baseline")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("gen", help="generate a graph and print it")
    p.add_argument("family", choices=FAMILIES + ("fixture",), help="graph family")
    p.add_argument("params", nargs="*", help="family parameters, e.g. 'grid 3 3' or 'gnp 16 0.3'")
    p.add_argument("--seed", type=int, help=f"seed for gnp (default: ${ENV_SEED} or 0)")
    p.add_argument("--output-format", choices=("edgelist", "dimacs"), default="edgelist",
                   help="output format (default: edgelist)")
    p.add_argument("-o", "--output", help="write to a file instead of standard output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("restarts", help="random-restart search for a small code")
    _add_graph_arg(p)
    p.add_argument("--restarts", type=int, default=100, help="number of restarts (default: 100)")
    p.add_argument("--ordering", choices=("identity", "random", "degree-asc", "degree-desc", "explicit"),
                   default="random", help="ordering strategy per restart (default: random)")
    p.add_argument("--perm", help="processing order for --ordering explicit")
    p.add_argument("--seed", type=int, help=f"master seed (default: ${ENV_SEED} or 0)")
    p.set_defaults(func=_cmd_restarts)

    p = sub.add_parser("bench", help="benchmark both constructors; emits CSV")
    p.add_argument("--families", default="grid", help="comma-separated families (default: grid)")
    p.add_argument("--sizes", default="256,512,1024", help="comma-separated sizes (default: 256,512,1024)")
    p.add_argument("--reps", type=int, default=3, help="timing repetitions per instance (default: 3)")
    p.add_argument("--seed", type=int, help=f"seed for gnp instances (default: ${ENV_SEED} or 0)")
    p.add_argument("--gnp-p", type=float, default=0.3, help="edge probability for gnp (default: 0.3)")
    p.add_argument("-o", "--output", help="write CSV to a file instead of standard output")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream consumer closed the pipe (e.g. `lexid ... | head`);
        # point stdout at devnull so interpreter shutdown does not re-raise
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 141  # 128 + SIGPIPE, the shell convention
    except ParseError as exc:
        print(f"lexid: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"lexid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
