"""P5 detection and classification of P5-free connected components.

Paths are ordered 5-tuples of distinct vertices with consecutive vertices
adjacent; they need not be induced. All searches run in ascending-id order,
so the first path found is the lexicographically smallest oriented tuple
(which automatically starts at its smaller endpoint).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, VertexSet

Path5 = tuple[int, int, int, int, int]


class ClassificationError(ValueError):
    """The vertex set is not a connected P5-free component."""


def _adj_masks(g: Graph) -> dict[int, int]:
    return {v: sum(1 << u for u in g.neighbors(v)) for v in g.vertices}


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_p5(g: Graph):
    """All simple 5-paths as oriented tuples, in lexicographic order."""
    adj = _adj_masks(g)
    for p1 in sorted(g.vertices):
        m1 = 1 << p1
        for p2 in _bits(adj[p1] & ~m1):
            m2 = m1 | (1 << p2)
            for p3 in _bits(adj[p2] & ~m2):
                m3 = m2 | (1 << p3)
                for p4 in _bits(adj[p3] & ~m3):
                    m4 = m3 | (1 << p4)
                    for p5 in _bits(adj[p4] & ~m4):
                        yield (p1, p2, p3, p4, p5)


def find_p5(g: Graph) -> Path5 | None:
    """Lexicographically smallest P5, or None if the graph is P5-free."""
    return next(iter_p5(g), None)


def is_p5_free(g: Graph) -> bool:
    return find_p5(g) is None


def find_p5_through(g: Graph, v: int) -> Path5 | None:
    """Lexicographically smallest P5 that uses v, or None."""
    if v not in g:
        raise GraphError(f"vertex {v} is not alive")
    for path in iter_p5(g):
        if v in path:
            return path
    return None


def p5_covered_vertices(g: Graph) -> set[int]:
    """Vertices lying on at least one P5.

    Stops early once every alive vertex is covered; a vertex missing from
    the result is on no P5 (the R1 test), and an empty result means the
    graph is P5-free.
    """
    adj = _adj_masks(g)
    all_mask = sum(1 << v for v in g.vertices)
    covered = 0
    for p1 in sorted(g.vertices):
        m1 = 1 << p1
        for p2 in _bits(adj[p1] & ~m1):
            m2 = m1 | (1 << p2)
            for p3 in _bits(adj[p2] & ~m2):
                m3 = m2 | (1 << p3)
                for p4 in _bits(adj[p3] & ~m3):
                    m4 = m3 | (1 << p4)
                    if adj[p4] & ~m4:
                        covered |= m4 | (adj[p4] & ~m4)
                        if covered == all_mask:
                            return set(g.vertices)
    return set(_bits(covered))


def find_p5_with_reds(g: Graph, red: VertexSet, min_reds: int = 2) -> Path5 | None:
    """Lexicographically smallest P5 using at least `min_reds` red vertices.

    Subtrees that cannot reach the red quota are pruned: once the number of
    picks left equals the number of reds still needed, only red candidates
    are extended.
    """
    adj = _adj_masks(g)
    red_mask = sum(1 << v for v in red if v in g)

    def cand(nbs: int, used: int, reds: int, picks_left: int) -> int:
        c = nbs & ~used
        if min_reds - reds >= picks_left:
            c &= red_mask
        return c

    for p1 in sorted(g.vertices):
        m1 = 1 << p1
        r1 = 1 if p1 in red else 0
        for p2 in _bits(cand(adj[p1], m1, r1, 4)):
            m2 = m1 | (1 << p2)
            r2 = r1 + (1 if p2 in red else 0)
            for p3 in _bits(cand(adj[p2], m2, r2, 3)):
                m3 = m2 | (1 << p3)
                r3 = r2 + (1 if p3 in red else 0)
                for p4 in _bits(cand(adj[p3], m3, r3, 2)):
                    m4 = m3 | (1 << p4)
                    r4 = r3 + (1 if p4 in red else 0)
                    for p5 in _bits(cand(adj[p4], m4, r4, 1)):
                        return (p1, p2, p3, p4, p5)
    return None


def find_p5_from(g: Graph, v: int, second: VertexSet) -> Path5 | None:
    """Smallest P5 starting at v whose second vertex is drawn from `second`."""
    if v not in g:
        raise GraphError(f"vertex {v} is not alive")
    adj = _adj_masks(g)
    m1 = 1 << v
    for p2 in sorted(g.neighbors(v) & second):
        m2 = m1 | (1 << p2)
        for p3 in _bits(adj[p2] & ~m2):
            m3 = m2 | (1 << p3)
            for p4 in _bits(adj[p3] & ~m3):
                m4 = m3 | (1 << p4)
                for p5 in _bits(adj[p4] & ~m4):
                    return (v, p2, p3, p4, p5)
    return None


# --- component classification ------------------------------------------------


@dataclass(frozen=True)
class IsolatedVertex:
    vertex: int

    @property
    def vertices(self) -> VertexSet:
        return frozenset([self.vertex])

    def edges(self) -> set[tuple[int, int]]:
        return set()


@dataclass(frozen=True)
class IsolatedEdge:
    u: int  # u < v
    v: int

    @property
    def vertices(self) -> VertexSet:
        return frozenset([self.u, self.v])

    def edges(self) -> set[tuple[int, int]]:
        return {(self.u, self.v)}


@dataclass(frozen=True)
class P3:
    """Path (t, u, v): endpoints t < v, middle u."""

    t: int
    u: int
    v: int

    @property
    def vertices(self) -> VertexSet:
        return frozenset([self.t, self.u, self.v])

    @property
    def endpoints(self) -> VertexSet:
        return frozenset([self.t, self.v])

    def edges(self) -> set[tuple[int, int]]:
        return {tuple(sorted((self.t, self.u))), tuple(sorted((self.u, self.v)))}


@dataclass(frozen=True)
class Triangle:
    members: tuple[int, int, int]  # sorted

    @property
    def vertices(self) -> VertexSet:
        return frozenset(self.members)

    def edges(self) -> set[tuple[int, int]]:
        a, b, c = self.members
        return {(a, b), (a, c), (b, c)}


@dataclass(frozen=True)
class C4Kind:
    """A subgraph of K4 containing the 4-cycle `cycle`.

    diag13/diag24 flag the diagonal edges {v1,v3} and {v2,v4}.
    """

    cycle: tuple[int, int, int, int]
    diag13: bool
    diag24: bool

    @property
    def vertices(self) -> VertexSet:
        return frozenset(self.cycle)

    def diagonal_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        v1, v2, v3, v4 = self.cycle
        return (tuple(sorted((v1, v3))), tuple(sorted((v2, v4))))

    def edges(self) -> set[tuple[int, int]]:
        v1, v2, v3, v4 = self.cycle
        es = {
            tuple(sorted((v1, v2))),
            tuple(sorted((v2, v3))),
            tuple(sorted((v3, v4))),
            tuple(sorted((v4, v1))),
        }
        if self.diag13:
            es.add(tuple(sorted((v1, v3))))
        if self.diag24:
            es.add(tuple(sorted((v2, v4))))
        return es


@dataclass(frozen=True)
class Star:
    center: int
    leaves: VertexSet  # |leaves| >= 3

    @property
    def vertices(self) -> VertexSet:
        return self.leaves | {self.center}

    def edges(self) -> set[tuple[int, int]]:
        return {tuple(sorted((self.center, l))) for l in self.leaves}


@dataclass(frozen=True)
class StarWithTriangle:
    center: int
    triangle: tuple[int, int]  # sorted
    leaves: VertexSet  # |leaves| >= 1

    @property
    def vertices(self) -> VertexSet:
        return self.leaves | {self.center, *self.triangle}

    def edges(self) -> set[tuple[int, int]]:
        t1, t2 = self.triangle
        es = {
            tuple(sorted((self.center, t1))),
            tuple(sorted((self.center, t2))),
            (t1, t2),
        }
        es |= {tuple(sorted((self.center, l))) for l in self.leaves}
        return es


@dataclass(frozen=True)
class DiStar:
    """Two adjacent centers, each with at least one leaf; center_a < center_b."""

    center_a: int
    center_b: int
    leaves_a: VertexSet
    leaves_b: VertexSet

    @property
    def vertices(self) -> VertexSet:
        return self.leaves_a | self.leaves_b | {self.center_a, self.center_b}

    @property
    def centers(self) -> VertexSet:
        return frozenset([self.center_a, self.center_b])

    def center_of(self, leaf: int) -> int:
        return self.center_a if leaf in self.leaves_a else self.center_b

    def other_center(self, center: int) -> int:
        return self.center_b if center == self.center_a else self.center_a

    def leaves_of(self, center: int) -> VertexSet:
        return self.leaves_a if center == self.center_a else self.leaves_b

    def edges(self) -> set[tuple[int, int]]:
        es = {tuple(sorted((self.center_a, self.center_b)))}
        es |= {tuple(sorted((self.center_a, l))) for l in self.leaves_a}
        es |= {tuple(sorted((self.center_b, l))) for l in self.leaves_b}
        return es


ComponentClass = (
    IsolatedVertex
    | IsolatedEdge
    | P3
    | Triangle
    | C4Kind
    | Star
    | StarWithTriangle
    | DiStar
)


def _induced_edges(g: Graph, comp: VertexSet) -> set[tuple[int, int]]:
    return {
        (u, v)
        for u in comp
        for v in g.neighbors(u) & comp
        if u < v
    }


def _find_c4_pair(g: Graph, comp: VertexSet) -> bool:
    # A 4-cycle subgraph exists iff two vertices share >= 2 neighbors in comp.
    vs = sorted(comp)
    for i, u in enumerate(vs):
        for w in vs[i + 1:]:
            if len(g.neighbors(u) & g.neighbors(w) & comp) >= 2:
                return True
    return False


def classify_component(g: Graph, comp: VertexSet) -> ComponentClass:
    """Classify a connected P5-free component and label its roles.

    Raises ClassificationError if the component contains a P5 (equivalently,
    if it fits none of the P5-free shapes) or is not connected.
    """
    comp = frozenset(comp)
    if not comp:
        raise ClassificationError("empty component")
    sub = g.induced(comp)
    if len(sub.connected_components()) != 1:
        raise ClassificationError("vertex set is not connected")
    return _classify_connected(g, comp)


def _classify_connected(g: Graph, comp: VertexSet) -> ComponentClass:
    n = len(comp)
    deg = {v: len(g.neighbors(v) & comp) for v in comp}
    actual = _induced_edges(g, comp)

    if n == 1:
        return IsolatedVertex(next(iter(comp)))
    if n == 2:
        u, v = sorted(comp)
        return IsolatedEdge(u, v)
    if n == 3:
        if len(actual) == 3:
            return Triangle(tuple(sorted(comp)))
        mid = [v for v in comp if deg[v] == 2]
        if len(mid) != 1:
            raise ClassificationError("3 vertices but neither a path nor a triangle")
        ends = sorted(comp - {mid[0]})
        return P3(ends[0], mid[0], ends[1])

    if _find_c4_pair(g, comp):
        if n != 4:
            raise ClassificationError("4-cycle inside a component of size > 4 implies a P5")
        cls = _label_c4(g, comp, len(actual))
        return _checked(cls, actual)

    tri = _find_triangle(g, comp)
    if tri is not None:
        center = [v for v in comp if deg[v] == n - 1]
        if len(center) != 1:
            raise ClassificationError("triangle present but no dominating center")
        s = center[0]
        t = sorted(tri - {s})
        if len(t) != 2:
            raise ClassificationError("triangle does not include the center")
        cls = StarWithTriangle(s, (t[0], t[1]), comp - {s, t[0], t[1]})
        return _checked(cls, actual)

    # Acyclic component on >= 4 vertices: a star or a di-star.
    top = [v for v in comp if deg[v] == n - 1]
    if top and all(deg[v] == 1 for v in comp - {top[0]}):
        return _checked(Star(top[0], comp - {top[0]}), actual)
    centers = sorted(v for v in comp if deg[v] >= 2)
    if len(centers) == 2 and g.has_edge(centers[0], centers[1]):
        a, b = centers
        la = (g.neighbors(a) & comp) - {b}
        lb = (g.neighbors(b) & comp) - {a}
        if la and lb:
            cls = DiStar(a, b, frozenset(la), frozenset(lb))
            return _checked(cls, actual)
    raise ClassificationError("component contains a P5")


def _checked(cls: ComponentClass, actual: set[tuple[int, int]]) -> ComponentClass:
    if cls.edges() != actual:
        raise ClassificationError("component contains a P5")
    return cls


def _label_c4(g: Graph, comp: VertexSet, edge_count: int) -> C4Kind:
    vs = sorted(comp)
    if edge_count == 6:
        return C4Kind(tuple(vs), True, True)
    if edge_count == 5:
        diag = sorted(v for v in comp if len(g.neighbors(v) & comp) == 3)
        rest = sorted(comp - set(diag))
        if len(diag) != 2:
            raise ClassificationError("component contains a P5")
        return C4Kind((diag[0], rest[0], diag[1], rest[1]), True, False)
    if edge_count == 4:
        v1 = vs[0]
        around = sorted(g.neighbors(v1) & comp)
        if len(around) != 2:
            raise ClassificationError("component contains a P5")
        (v3,) = comp - {v1, *around}
        return C4Kind((v1, around[0], v3, around[1]), False, False)
    raise ClassificationError("component contains a P5")


def _find_triangle(g: Graph, comp: VertexSet) -> VertexSet | None:
    for u, v in _induced_edges(g, comp):
        common = g.neighbors(u) & g.neighbors(v) & comp
        if common:
            return frozenset([u, v, min(common)])
    return None
