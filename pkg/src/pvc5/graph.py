"""Simple undirected graphs with stable vertex identities.

Vertices are dense integer ids assigned at construction. Removing vertices
returns a new graph; survivors keep their ids, so rule traces can name the
same vertex across recursive calls. Graphs are treated as immutable once
built.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

VertexSet = frozenset[int]


class GraphError(ValueError):
    """Malformed construction or a query on a vertex that is not alive."""


class Graph:
    __slots__ = ("_adj",)

    def __init__(self, adjacency: dict[int, set[int]]):
        # Takes ownership of the dict; callers go through build_graph().
        self._adj = adjacency

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph({len(self)} vertices, {self.edge_count()} edges)"

    @property
    def vertices(self):
        """Set-like view of the alive vertex ids."""
        return self._adj.keys()

    def neighbors(self, v: int) -> set[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"vertex {v} is not alive") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in sorted order."""
        for u in sorted(self._adj):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def remove_vertices(self, remove: Iterable[int]) -> Graph:
        """Induced subgraph on the complement of `remove`; ids unchanged."""
        gone = set(remove)
        for v in gone:
            if v not in self._adj:
                raise GraphError(f"cannot remove vertex {v}: not alive")
        adj = {v: nb - gone for v, nb in self._adj.items() if v not in gone}
        return Graph(adj)

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on `keep`; ids unchanged."""
        kept = set(keep)
        for v in kept:
            if v not in self._adj:
                raise GraphError(f"cannot keep vertex {v}: not alive")
        return Graph({v: self._adj[v] & kept for v in kept})

    def connected_components(self) -> list[VertexSet]:
        """Maximal connected vertex sets, ordered by smallest contained id."""
        seen: set[int] = set()
        comps = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                for u in self._adj[stack.pop()]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def are_twins(self, x: int, y: int) -> bool:
        """True iff N(x) \\ {y} == N(y) \\ {x}."""
        if x == y:
            raise GraphError("are_twins needs two distinct vertices")
        return self.neighbors(x) - {y} == self.neighbors(y) - {x}


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on vertex ids 0..n-1 with the given edges, duplicates collapsed.

    Rejects self-loops and out-of-range endpoints.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(adj)
