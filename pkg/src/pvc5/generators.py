"""Instance generators: standard graph families and per-rule gadgets.

Each gadget realizes the figure configuration of one leaf rule as a concrete
bipartition instance on which select_rule fires exactly that rule. Outside
attachments are wired to components whose own first applicable rule comes
later in the rule order (di-star gadgets attach to P4s or stars, never to
small components that earlier rules would grab first).
"""

from __future__ import annotations

import random

from .graph import Graph, GraphError, build_graph
from .instance import BipartitionInstance, make_instance

Edges = list[tuple[int, int]]

#: rule id -> (vertex count, edges, red vertices, suggested budget)
GADGETS: dict[str, tuple[int, Edges, list[int], int]] = {
    "R0": (3, [(0, 1), (1, 2), (0, 2)], [], 1),
    "R1": (6, [(0, 1), (1, 2), (2, 3), (3, 4)], [2], 1),
    "R2": (5, [(0, 1), (1, 2), (2, 3), (3, 4)], [1, 3], 3),
    "R3": (5, [(0, 1), (1, 2), (2, 3), (3, 4)], [1], 3),
    "R4": (5, [(0, 1), (1, 2), (2, 3), (3, 4)], [2], 3),
    "R5.1": (7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)], [3], 3),
    "R5.2": (7, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 5), (4, 5), (5, 6)], [3], 3),
    "R5.3": (7, [(0, 1), (1, 2), (1, 3), (3, 5), (4, 5), (5, 6)], [3], 3),
    "R5.4": (7, [(0, 1), (1, 2), (0, 3), (2, 3), (3, 4), (3, 6), (4, 5), (5, 6)], [3], 3),
    "R6.1": (7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)], [3], 3),
    "R6.2": (8, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 5), (4, 5), (4, 6), (4, 7)], [3], 3),
    "R6.3": (8, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (3, 5), (4, 5), (4, 6), (4, 7)], [3], 3),
    "R7.1": (6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (0, 5)], [4, 5], 3),
    "R7.2.1": (5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)], [4], 3),
    "R7.2.2": (5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 4)], [4], 3),
    "R7.2.3": (5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)], [4], 3),
    "R7.2.4": (5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (0, 4), (1, 4)], [4], 3),
    "R7.2.5": (9, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (0, 4), (1, 4),
                   (4, 6), (5, 6), (5, 7), (5, 8)], [4], 3),
    "R8.1": (5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4)], [4], 3),
    "R8.2": (9, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 6), (5, 6), (5, 7), (5, 8)], [4], 3),
    "R8.3": (9, [(0, 1), (0, 2), (0, 3), (1, 4), (4, 6), (5, 6), (5, 7), (5, 8)], [4], 3),
    "R9.1": (5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 4)], [4], 3),
    "R9.2": (5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)], [4], 3),
    "R9.3": (5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)], [4], 3),
    "R9.4": (9, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (4, 5),
                 (5, 6), (5, 7), (6, 7), (5, 8)], [4], 3),
    "R10": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 5)], [5], 3),
    "R11.1.1": (5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)], [4], 3),
    "R11.1.2": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4)], [4], 3),
    "R11.1.3": (9, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4),
                    (4, 5), (5, 6), (6, 7), (7, 8)], [4], 3),
    "R11.1.4": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)], [4], 3),
    "R11.2.1": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (0, 5), (1, 5)], [5], 3),
    "R11.2.2": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (0, 5), (1, 5), (2, 5)], [5], 3),
    "R11.2.3": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (0, 5), (1, 5), (4, 5)], [5], 3),
    "R11.2.4": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (0, 5), (1, 5), (2, 5), (4, 5)], [5], 3),
    "R11.3": (7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (0, 6), (1, 6)], [6], 3),
    "R12.1": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4)], [4], 3),
    "R12.2": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (2, 4)], [4], 3),
    "R12.3.1": (9, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (4, 5),
                    (5, 6), (6, 7), (7, 8)], [4], 3),
    "R12.3.2": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4)], [4], 3),
    "R12.3.3": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (4, 5)], [5], 3),
    "R12.3.4": (7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (4, 6)], [6], 3),
    "R13.1": (9, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (3, 4), (4, 5),
                  (5, 6), (6, 7), (7, 8)], [4], 3),
    "R13.2": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (3, 4)], [4], 3),
    "R13.3": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (0, 5), (2, 5), (4, 5)], [5], 3),
    "R13.4": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 5), (4, 5)], [5], 3),
    "R14.1": (5, [(0, 1), (1, 2), (2, 3), (0, 4)], [4], 3),
    "R14.2": (9, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 6), (5, 6), (6, 7), (7, 8)], [4], 3),
    "R15": (6, [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5)], [4, 5], 3),
    "R16": (11, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7),
                 (0, 8), (3, 9), (4, 9), (7, 10)], [8, 9, 10], 3),
    "R17": (11, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (4, 6),
                 (7, 8), (8, 9), (9, 10), (5, 7), (6, 10)], [5, 6], 3),
    "R18": (10, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 5),
                 (6, 7), (7, 8), (8, 9), (4, 6), (5, 9)], [4, 5], 3),
}


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi G(n, p); identical across runs for the same seed.

    Uses Python's Mersenne Twister: pairs (i, j), i < j, are visited in
    lexicographic order and kept when rng.random() < p.
    """
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


def gadget_instance(rule_id: str, budget: int | None = None) -> BipartitionInstance:
    """A validated bipartition instance on which select_rule fires `rule_id`."""
    try:
        n, edges, red, k = GADGETS[rule_id]
    except KeyError:
        raise GraphError(f"unknown gadget rule id: {rule_id!r}") from None
    return make_instance(
        build_graph(n, edges),
        red=frozenset(red),
        budget=k if budget is None else budget,
    )


def generate_instance(kind: str, seed: int = 0, **params):
    """Dispatcher: 'path'/'cycle'/'gnp' return a Graph, 'gadget' an instance."""
    if kind == "path":
        return path_graph(params["n"])
    if kind == "cycle":
        return cycle_graph(params["n"])
    if kind == "gnp":
        return gnp_graph(params["n"], params["p"], seed)
    if kind == "gadget":
        return gadget_instance(params["rule"], params.get("budget"))
    raise GraphError(f"unknown instance kind: {kind!r}")
