"""Command-line surface: solve / min / verify / gen / factors."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .analysis import verify_factor_table
from .generators import GADGETS, cycle_graph, gadget_instance, gnp_graph, path_graph
from .graph import Graph, GraphError
from .graph_io import ParseError, emit_dimacs, emit_edge_list, parse_graph
from .oracles import (
    OracleLimitError,
    brute_force_min_pvc,
    trivial_branching,
    verify_solution,
)
from .solver import SolveStats, min_5pvc, solve_5pvc


def _load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _print_answer(solution) -> None:
    if solution is None:
        print("NO")
    else:
        ids = " ".join(str(v) for v in sorted(solution))
        print(f"YES {len(solution)} {ids}".rstrip())


def _write_stats(path: str, answer, k: int, stats: SolveStats, wall_ms: float) -> None:
    report = {
        "answer": "yes" if answer is not None else "no",
        "k": k,
        "solution": sorted(answer) if answer is not None else None,
        "wall_ms": wall_ms,
        **stats.as_dict(),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _cmd_solve(args) -> int:
    g = _load_graph(args.file)
    stats = SolveStats()
    start = time.perf_counter()
    if args.algo == "ic":
        solution = solve_5pvc(g, args.k, stats)
    elif args.algo == "trivial":
        solution = trivial_branching(g, args.k, stats)
    else:
        result = brute_force_min_pvc(g)
        solution = result.witness if result.min_size <= args.k else None
    wall_ms = (time.perf_counter() - start) * 1000.0
    if solution is not None and not verify_solution(g, solution, args.k):
        raise AssertionError("solver returned an invalid solution")
    _print_answer(solution)
    if args.stats:
        _write_stats(args.stats, solution, args.k, stats, wall_ms)
    return 0


def _cmd_min(args) -> int:
    g = _load_graph(args.file)
    stats = SolveStats()
    start = time.perf_counter()
    if args.algo == "ic":
        size, witness = min_5pvc(g, stats)
    else:
        result = brute_force_min_pvc(g)
        size, witness = result.min_size, result.witness
    wall_ms = (time.perf_counter() - start) * 1000.0
    if not verify_solution(g, witness, size):
        raise AssertionError("minimizer returned an invalid solution")
    _print_answer(witness)
    if args.stats:
        _write_stats(args.stats, witness, size, stats, wall_ms)
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.file)
    ids = frozenset(int(part) for part in args.solution.split(",") if part.strip())
    _print_answer(ids if verify_solution(g, ids, args.k) else None)
    return 0


def _cmd_gen(args) -> int:
    comments = [f"pvc5 gen {args.kind}"]
    if args.kind == "path":
        g = path_graph(args.n)
    elif args.kind == "cycle":
        g = cycle_graph(args.n)
    elif args.kind == "gnp":
        g = gnp_graph(args.n, args.p, args.seed)
        comments.append(f"n={args.n} p={args.p} seed={args.seed}")
    else:
        inst = gadget_instance(args.rule)
        g = inst.graph
        comments.append(f"rule: {args.rule}")
        comments.append("red: " + " ".join(str(v) for v in sorted(inst.red)))
        comments.append(f"k: {inst.budget}")
    text = emit_dimacs(g, comments) if args.format == "dimacs" else emit_edge_list(g, comments)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_factors(args) -> int:
    entries = verify_factor_table()
    width = max(len(e.rule) for e in entries)
    print(f"{'rule':<{width}}  {'vector':<14} {'computed':>10} {'rounded':>8} {'paper':>6}")
    for e in entries:
        vec = "(" + ",".join(str(x) for x in e.vector) + ")"
        print(f"{e.rule:<{width}}  {vec:<14} {e.computed:>10.6f} {e.rounded:>8.3f} {e.paper:>6}")
    mismatches = [e for e in entries if not e.matches]
    worst = max(e.computed for e in entries)
    print(f"max factor: {worst:.6f}")
    if args.check:
        if mismatches:
            for e in mismatches:
                print(f"MISMATCH {e.rule}: computed {e.rounded} vs paper {e.paper}",
                      file=sys.stderr)
            return 1
        print(f"all {len(entries)} branching factors match the published table")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pvc5",
        description="Exact 5-path vertex cover solvers (iterative compression, "
        "trivial branching, brute force).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide 5-PVC for a fixed budget k")
    p_solve.add_argument("--k", type=int, required=True)
    p_solve.add_argument("--algo", choices=("ic", "trivial", "bruteforce"), default="ic")
    p_solve.add_argument("--stats", metavar="PATH", help="write a JSON run report")
    p_solve.add_argument("file")
    p_solve.set_defaults(func=_cmd_solve)

    p_min = sub.add_parser("min", help="smallest feasible k with a witness")
    p_min.add_argument("--algo", choices=("ic", "bruteforce"), default="ic")
    p_min.add_argument("--stats", metavar="PATH")
    p_min.add_argument("file")
    p_min.set_defaults(func=_cmd_min)

    p_verify = sub.add_parser("verify", help="check a claimed solution")
    p_verify.add_argument("--solution", required=True, metavar="i,j,...")
    p_verify.add_argument("--k", type=int, required=True)
    p_verify.add_argument("file")
    p_verify.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("gen", help="emit a generated graph")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    for kind in ("path", "cycle"):
        sp = gen_sub.add_parser(kind)
        sp.add_argument("--n", type=int, required=True)
    sp = gen_sub.add_parser("gnp")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp = gen_sub.add_parser("gadget")
    sp.add_argument("--rule", required=True, choices=sorted(GADGETS))
    for sp in gen_sub.choices.values():
        sp.add_argument("--format", choices=("edge-list", "dimacs"), default="edge-list")
        sp.add_argument("-o", "--output", metavar="PATH")
        sp.set_defaults(func=_cmd_gen)

    p_factors = sub.add_parser("factors", help="print the branching-factor table")
    p_factors.add_argument("--check", action="store_true")
    p_factors.set_defaults(func=_cmd_factors)

    return parser


def run_command(argv) -> int:
    """Run one CLI invocation; exit status reflects execution health only."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphError, ParseError, OracleLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
