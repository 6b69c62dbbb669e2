"""Independent correctness baselines: exhaustive search and trivial branching."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, VertexSet
from .solver import SolveStats
from .structure import find_p5, is_p5_free

BRUTE_FORCE_LIMIT = 16


class OracleLimitError(ValueError):
    """Instance too large for exhaustive search; use the FPT solver instead."""


@dataclass(frozen=True)
class OracleResult:
    min_size: int
    witness: VertexSet
    subsets_examined: int


def verify_solution(g: Graph, f, k: int) -> bool:
    """True iff |f| <= k and removing f leaves the graph P5-free."""
    f = frozenset(f)
    dead = f - g.vertices
    if dead:
        raise GraphError(f"solution contains non-alive vertices: {sorted(dead)}")
    return len(f) <= k and is_p5_free(g.remove_vertices(f))


def brute_force_min_pvc(g: Graph) -> OracleResult:
    """Minimum 5-PVC by ascending-size subset enumeration (n <= 16 only).

    The witness is the lexicographically smallest minimum solution.
    """
    n = len(g)
    if n > BRUTE_FORCE_LIMIT:
        raise OracleLimitError(
            f"{n} vertices exceeds the exhaustive limit {BRUTE_FORCE_LIMIT}; "
            "use solve_5pvc / min_5pvc"
        )
    vs = sorted(g.vertices)
    examined = 0
    for size in range(n + 1):
        for subset in combinations(vs, size):
            examined += 1
            if is_p5_free(g.remove_vertices(subset)):
                return OracleResult(size, frozenset(subset), examined)
    raise AssertionError("unreachable: the full vertex set is always a solution")


def blue_subset_feasible(g: Graph, blue, k: int) -> bool:
    """Exhaustively: does some S within the blue set, |S| <= k, solve the graph?"""
    blue = sorted(set(blue))
    for size in range(max(k, 0) + 1):
        for subset in combinations(blue, size):
            if is_p5_free(g.remove_vertices(subset)):
                return True
    return False


def trivial_branching(g: Graph, k: int, stats: SolveStats | None = None):
    """The d^k baseline: find any P5, branch on its five vertices."""
    if k < 0:
        raise ValueError("the budget k must be non-negative")

    def search(h: Graph, budget: int, depth: int):
        if stats is not None:
            stats.node_entered("trivial", budget, depth)
        path = find_p5(h)
        if path is None:
            if stats is not None:
                stats.leaf_reached("solution")
            return frozenset()
        if budget == 0:
            if stats is not None:
                stats.leaf_reached("infeasible")
            return None
        for v in path:
            sub = search(h.remove_vertices([v]), budget - 1, depth + 1)
            if sub is not None:
                return sub | {v}
        return None

    return search(g, k, 0)
