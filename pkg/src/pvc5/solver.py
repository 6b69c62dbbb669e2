"""The disjoint compression recursion and the outer iterative compression loop."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, VertexSet
from .instance import BipartitionInstance, Branch, Halt, Reduce, make_instance
from .rules import select_rule
from .structure import is_p5_free


@dataclass
class SolveStats:
    """Search-tree instrumentation; merged across recursive solver calls."""

    nodes: int = 0
    leaves: int = 0
    per_rule: dict[str, int] = field(default_factory=dict)
    max_depth: int = 0
    # When not None, (root budget, per-call stats) of every disjoint_r call
    # merged into this object is appended here.
    calls: list[tuple[int, "SolveStats"]] | None = None

    def node_entered(self, rule_id: str, budget: int, depth: int) -> None:
        self.nodes += 1
        self.per_rule[rule_id] = self.per_rule.get(rule_id, 0) + 1
        if depth > self.max_depth:
            self.max_depth = depth

    def leaf_reached(self, outcome: str) -> None:
        self.leaves += 1

    def merge(self, other: "SolveStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        for rule_id, count in other.per_rule.items():
            self.per_rule[rule_id] = self.per_rule.get(rule_id, 0) + count
        self.max_depth = max(self.max_depth, other.max_depth)

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "leaves": self.leaves,
            "per_rule": dict(sorted(self.per_rule.items())),
            "max_depth": self.max_depth,
        }


def _disjoint(inst: BipartitionInstance, stats: SolveStats, depth: int):
    rule_id, decision = select_rule(inst)
    stats.node_entered(rule_id, inst.budget, depth)
    if isinstance(decision, Halt):
        stats.leaf_reached("solution" if decision.answer is not None else "infeasible")
        return decision.answer
    if isinstance(decision, Reduce):
        return _disjoint(inst.apply_reduce(decision), stats, depth + 1)
    assert isinstance(decision, Branch)
    for deleted in decision.branches:
        if len(deleted) > inst.budget:
            # The child would fail immediately at the k < 0 stopping condition.
            continue
        found = _disjoint(inst.apply_branch(deleted), stats, depth + 1)
        if found is not None:
            return found
    return None


def disjoint_r(inst: BipartitionInstance, stats: SolveStats | None = None):
    """Solve a 5-PVCwB instance: a blue set F with |F| <= budget, or None.

    Branches are explored left to right and the first feasible branch wins.
    Every return is soundness-checked; per-call leaves are asserted against
    the 3^max(k,0) bound from the branching analysis.
    """
    local = SolveStats()
    found = _disjoint(inst, local, 0)
    assert local.leaves <= 3 ** max(inst.budget, 0), "leaf bound violated"
    if stats is not None:
        stats.merge(local)
        if stats.calls is not None:
            stats.calls.append((inst.budget, local))
    if found is not None:
        fresh = found - inst.solution
        assert len(fresh) <= max(inst.budget, 0)
        assert fresh <= inst.blue
        assert is_p5_free(inst.graph.remove_vertices(fresh))
    return found


def compress(g_active: Graph, solution: VertexSet, k: int,
             stats: SolveStats | None = None):
    """Shrink a (k+1)-size solution of g_active to size <= k, or return None.

    Tries every split of the old solution into a kept part X and a replaced
    part Y != {} (Y by ascending size, then lexicographic). A split is viable
    only when G[Y] is P5-free; the disjoint routine then looks for a blue
    replacement of size <= |Y| - 1 in the graph without X.
    """
    solution = frozenset(solution)
    if len(solution) != k + 1:
        raise ValueError(f"compress needs |solution| == k+1, got {len(solution)} != {k + 1}")
    if not is_p5_free(g_active.remove_vertices(solution)):
        raise ValueError("the given set is not a solution of the active graph")
    ordered = sorted(solution)
    for size in range(1, len(ordered) + 1):
        for replaced in combinations(ordered, size):
            if not is_p5_free(g_active.induced(replaced)):
                continue
            kept = solution.difference(replaced)
            inst = make_instance(
                g_active.remove_vertices(kept),
                red=frozenset(replaced),
                budget=size - 1,
            )
            found = disjoint_r(inst, stats)
            if found is not None:
                return kept | found
    return None


def solve_5pvc(g: Graph, k: int, stats: SolveStats | None = None):
    """Decide 5-PVC: a vertex set F with |F| <= k and G - F P5-free, or None."""
    if k < 0:
        raise ValueError("the budget k must be non-negative")
    if is_p5_free(g):
        return frozenset()
    if k == 0:
        return None
    active: set[int] = set()
    solution: set[int] = set()
    for v in sorted(g.vertices):
        active.add(v)
        solution.add(v)
        if len(solution) == k + 1:
            compressed = compress(g.induced(active), frozenset(solution), k, stats)
            if compressed is None:
                return None
            solution = set(compressed)
    assert len(solution) <= k
    return frozenset(solution)


def min_5pvc(g: Graph, stats: SolveStats | None = None) -> tuple[int, VertexSet]:
    """Smallest k admitting a solution, with a witness."""
    for k in range(len(g) + 1):
        found = solve_5pvc(g, k, stats)
        if found is not None:
            return k, found
    raise AssertionError("unreachable: deleting every vertex is always a solution")
