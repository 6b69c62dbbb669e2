"""Ordered reduction/branching rule system over a 5-PVCwB instance.

Leaf rules are linearized in document order; a rule applies only if every
earlier leaf rule is inapplicable anywhere in the graph. Within a rule the
witness is deterministic: the qualifying component with the smallest vertex
id, then smallest-id vertices for every free choice. Context rules are
dispatch containers and never fire themselves.

States that the accompanying correctness lemmas rule out (for example an
isolated blue edge with two attached reds surviving preprocessing) raise
RuleEngineBug instead of being handled silently: reaching them means the
engine itself is wrong.
"""

from __future__ import annotations

from functools import cached_property

from .graph import VertexSet
from .instance import BipartitionInstance, Branch, Halt, Reduce, RuleDecision
from .structure import (
    C4Kind,
    DiStar,
    IsolatedEdge,
    IsolatedVertex,
    P3,
    Star,
    StarWithTriangle,
    Triangle,
    _classify_connected,
    find_p5_from,
    find_p5_with_reds,
    p5_covered_vertices,
)

LEAF_RULES: tuple[str, ...] = (
    "R0", "R1", "R2",
    "R3", "R4", "R5.1", "R5.2", "R5.3", "R5.4", "R6.1", "R6.2", "R6.3",
    "R7.1", "R7.2.1", "R7.2.2", "R7.2.3", "R7.2.4", "R7.2.5",
    "R8.1", "R8.2", "R8.3", "R9.1", "R9.2", "R9.3", "R9.4",
    "R10",
    "R11.1.1", "R11.1.2", "R11.1.3", "R11.1.4",
    "R11.2.1", "R11.2.2", "R11.2.3", "R11.2.4", "R11.3",
    "R12.1", "R12.2", "R12.3.1", "R12.3.2", "R12.3.3", "R12.3.4",
    "R13.1", "R13.2", "R13.3", "R13.4",
    "R14.1", "R14.2", "R15", "R16", "R17", "R18",
)

CONTEXT_RULES: tuple[str, ...] = (
    "R5", "R6", "R7", "R7.2", "R8", "R9",
    "R11", "R11.1", "R11.2", "R12", "R12.3", "R13", "R14",
)

# Leaf rules that halt or reduce; every other leaf rule branches.
NON_BRANCHING_RULES: frozenset[str] = frozenset(
    {"R0", "R1", "R7.1", "R7.2.1", "R7.2.4", "R11.1.4",
     "R12.3.2", "R13.2", "R14.1", "R15"}
)

_PRE = LEAF_RULES[:3]
_SMALL = LEAF_RULES[3:12]
_FOUR_CYCLE = LEAF_RULES[12:18]
_STAR = LEAF_RULES[18:25]
_DISTAR = LEAF_RULES[25:]


class RuleEngineBug(RuntimeError):
    """A state the rule-order lemmas exclude was reached: engine bug."""


def _s(*vs: int) -> VertexSet:
    return frozenset(vs)


class _Ctx:
    """Per-call view of an instance with lazily computed structure."""

    def __init__(self, inst: BipartitionInstance):
        self.inst = inst
        self.g = inst.graph

    @cached_property
    def covered(self) -> set[int]:
        return p5_covered_vertices(self.g)

    @cached_property
    def blue_graph(self):
        return self.g.remove_vertices(self.inst.red)

    @cached_property
    def comps(self) -> list[VertexSet]:
        return self.blue_graph.connected_components()

    @cached_property
    def classes(self) -> list:
        return [_classify_connected(self.blue_graph, c) for c in self.comps]

    @cached_property
    def comp_reds(self) -> list[list[int]]:
        red = self.inst.red
        out = []
        for comp in self.comps:
            seen: set[int] = set()
            for v in comp:
                seen |= self.g.neighbors(v) & red
            out.append(sorted(seen))
        return out

    def comp_items(self, kind):
        for i, cls in enumerate(self.classes):
            if isinstance(cls, kind):
                yield i, self.comps[i], cls

    def single_red(self, i: int) -> int:
        reds = self.comp_reds[i]
        if len(reds) != 1:
            raise RuleEngineBug(
                f"component {sorted(self.comps[i])} has {len(reds)} attached reds; "
                "an earlier rule should have fired"
            )
        return reds[0]

    def x_outside(self, w: int, comp: VertexSet) -> int:
        outs = self.g.neighbors(w) - comp
        if not outs:
            raise RuleEngineBug(
                f"red {w} is confined to its component; R1 should have fired"
            )
        x = min(outs)
        if x in self.inst.red:
            raise RuleEngineBug("red-red edge survived preprocessing (Lemma on R0-R2)")
        return x

    def xy_outside(self, w: int, comp: VertexSet) -> tuple[int, int]:
        x = self.x_outside(w, comp)
        ynb = self.blue_graph.neighbors(x)
        if not ynb:
            raise RuleEngineBug(
                f"blue vertex {x} is isolated in the blue graph; R3 should have fired"
            )
        return x, min(ynb)


# --- preprocessing (R0-R2) ----------------------------------------------------


def _r0(ctx: _Ctx):
    if ctx.inst.budget < 0:
        return Halt(None)
    if not ctx.covered:  # no vertex on any P5 <=> the graph is P5-free
        return Halt(ctx.inst.solution)
    if ctx.inst.budget == 0:
        return Halt(None)
    return None


def _r1(ctx: _Ctx):
    unused = ctx.g.vertices - ctx.covered
    if unused:
        return Reduce(remove=_s(min(unused)))
    return None


def _r2(ctx: _Ctx):
    path = find_p5_with_reds(ctx.g, ctx.inst.red)
    if path is None:
        return None
    blues = tuple(_s(v) for v in path if v in ctx.inst.blue)
    if not blues:
        raise RuleEngineBug("a P5 with five red vertices contradicts the bipartition")
    return Branch(blues)


# --- isolated vertices, edges, P3s and triangles (R3-R6) ----------------------


def _r3(ctx: _Ctx):
    for _i, _comp, cls in ctx.comp_items(IsolatedVertex):
        path = find_p5_from(ctx.g, cls.vertex, ctx.inst.red)
        if path is None:
            raise RuleEngineBug(
                f"isolated blue {cls.vertex} lies on no red-started P5; "
                "R1/R2 should have fired"
            )
        return Branch((_s(path[2]), _s(path[3]), _s(path[4])))
    return None


def _r4(ctx: _Ctx):
    for i, comp, _cls in ctx.comp_items(IsolatedEdge):
        w = ctx.single_red(i)
        touched = ctx.g.neighbors(w) & comp
        v = min(comp) if len(touched) == 2 else min(touched)
        x, y = ctx.xy_outside(w, comp)
        return Branch((_s(v), _s(x), _s(y)))
    return None


def _p3_touch(ctx: _Ctx, i: int, comp: VertexSet):
    w = ctx.single_red(i)
    return w, frozenset(ctx.g.neighbors(w) & comp)


def _r5_1(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(P3):
        w, touched = _p3_touch(ctx, i, comp)
        if len(touched) == 1 and touched <= cls.endpoints:
            return Branch((touched, _s(ctx.x_outside(w, comp))))
    return None


def _r5_2(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(P3):
        w, touched = _p3_touch(ctx, i, comp)
        ends = touched & cls.endpoints
        if cls.u in touched and len(ends) == 1:
            return Branch((_s(cls.u), ends, _s(ctx.x_outside(w, comp))))
    return None


def _r5_3(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(P3):
        w, touched = _p3_touch(ctx, i, comp)
        if touched == _s(cls.u):
            x, y = ctx.xy_outside(w, comp)
            return Branch((_s(cls.u), _s(x), _s(y)))
    return None


def _r5_4(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(P3):
        w, touched = _p3_touch(ctx, i, comp)
        if cls.endpoints <= touched:
            return Branch((_s(cls.u), _s(min(cls.endpoints)), _s(ctx.x_outside(w, comp))))
    return None


def _r6_1(ctx: _Ctx):
    for i, comp, _cls in ctx.comp_items(Triangle):
        w = ctx.single_red(i)
        touched = ctx.g.neighbors(w) & comp
        if len(touched) == 1:
            return Branch((frozenset(touched), _s(ctx.x_outside(w, comp))))
    return None


def _r6_2(ctx: _Ctx):
    for i, comp, _cls in ctx.comp_items(Triangle):
        w = ctx.single_red(i)
        touched = ctx.g.neighbors(w) & comp
        if len(touched) == 2:
            (t,) = comp - touched
            return Branch((_s(t), _s(min(touched)), _s(ctx.x_outside(w, comp))))
    return None


def _r6_3(ctx: _Ctx):
    for i, comp, _cls in ctx.comp_items(Triangle):
        w = ctx.single_red(i)
        if len(ctx.g.neighbors(w) & comp) == 3:
            return Branch((_s(min(comp)), _s(ctx.x_outside(w, comp))))
    return None


# --- components containing a 4-cycle (R7) -------------------------------------


def _r7_1(ctx: _Ctx):
    for i, comp, _cls in ctx.comp_items(C4Kind):
        if len(ctx.comp_reds[i]) >= 2:
            return Reduce(delete=_s(min(comp)))
    return None


def _diag_pair_in(cls: C4Kind, attach: VertexSet):
    """A diagonal pair of the 4-cycle contained in `attach`, if any.

    In a K4 every labeling is a valid 4-cycle, so 2-vertex attachments count
    as non-diagonal and larger ones take the two smallest attached vertices.
    """
    if cls.diag13 and cls.diag24:
        if len(attach) >= 3:
            lo = sorted(attach)
            return (lo[0], lo[1])
        return None
    for pair in cls.diagonal_pairs():
        if set(pair) <= attach:
            return pair
    return None


def _r7_2_1(ctx: _Ctx):
    for i, comp, _cls in ctx.comp_items(C4Kind):
        if len(ctx.comp_reds[i]) != 1:
            continue
        w = ctx.comp_reds[i][0]
        attach = ctx.g.neighbors(w) & comp
        if len(attach) == 1:
            return Reduce(delete=frozenset(attach))
    return None


def _r7_2_2(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(C4Kind):
        if len(ctx.comp_reds[i]) != 1:
            continue
        w = ctx.comp_reds[i][0]
        attach = ctx.g.neighbors(w) & comp
        pair = _diag_pair_in(cls, attach)
        if pair is not None:
            a, b = sorted(comp - set(pair))
            return Branch((_s(pair[0]), _s(a), _s(b)))
    return None


def _one_nondiag_pair(ctx: _Ctx, i: int, comp: VertexSet, cls: C4Kind):
    if len(ctx.comp_reds[i]) != 1:
        return None
    w = ctx.comp_reds[i][0]
    attach = frozenset(ctx.g.neighbors(w) & comp)
    if len(attach) != 2 or _diag_pair_in(cls, attach) is not None:
        return None
    return w, attach


def _r7_2_3(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(C4Kind):
        got = _one_nondiag_pair(ctx, i, comp, cls)
        if got is not None and cls.diag13 == cls.diag24:  # no or both diagonals
            _w, attach = got
            a, b = sorted(comp - attach)
            return Branch((_s(min(attach)), _s(a), _s(b)))
    return None


def _r7_2_4(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(C4Kind):
        got = _one_nondiag_pair(ctx, i, comp, cls)
        if got is not None and cls.diag13 != cls.diag24:
            w, _attach = got
            if not (ctx.g.neighbors(w) - comp):
                return Reduce(delete=_s(min(comp)))
    return None


def _r7_2_5(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(C4Kind):
        got = _one_nondiag_pair(ctx, i, comp, cls)
        if got is not None and cls.diag13 != cls.diag24:
            w, attach = got
            if ctx.g.neighbors(w) - comp:
                x, y = ctx.xy_outside(w, comp)
                return Branch((attach, _s(x), _s(y)))
    return None


# --- stars and stars with a triangle (R8-R9) ----------------------------------


def _r8_1(ctx: _Ctx):
    for i, _comp, cls in ctx.comp_items(Star):
        w = ctx.single_red(i)
        hit = sorted(ctx.g.neighbors(w) & cls.leaves)
        if len(hit) >= 2:
            rest = cls.leaves - {hit[0], hit[1]}
            return Branch((_s(hit[0]), _s(cls.center), frozenset(rest)))
    return None


def _r8_2(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(Star):
        w = ctx.single_red(i)
        if ctx.g.neighbors(w) & comp == {cls.center}:
            x, y = ctx.xy_outside(w, comp)
            return Branch((_s(cls.center), _s(x), _s(y)))
    return None


def _r8_3(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(Star):
        w = ctx.single_red(i)
        hit = ctx.g.neighbors(w) & cls.leaves
        if len(hit) == 1:
            return Branch((_s(cls.center), frozenset(hit), _s(ctx.x_outside(w, comp))))
    return None


def _r9_1(ctx: _Ctx):
    for i, _comp, cls in ctx.comp_items(StarWithTriangle):
        for w in ctx.comp_reds[i]:
            if set(cls.triangle) <= ctx.g.neighbors(w):
                return Branch((_s(cls.triangle[0]), _s(cls.center), cls.leaves))
    return None


def _r9_2(ctx: _Ctx):
    for i, _comp, cls in ctx.comp_items(StarWithTriangle):
        for w in ctx.comp_reds[i]:
            hit = ctx.g.neighbors(w) & set(cls.triangle)
            if len(hit) == 1:
                return Branch((frozenset(hit), _s(cls.center), cls.leaves))
    return None


def _r9_3(ctx: _Ctx):
    for i, _comp, cls in ctx.comp_items(StarWithTriangle):
        hit: set[int] = set()
        for w in ctx.comp_reds[i]:
            hit |= ctx.g.neighbors(w) & cls.leaves
        if hit:
            return Branch((_s(min(hit)), _s(cls.center)))
    return None


def _r9_4(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(StarWithTriangle):
        w = ctx.single_red(i)
        if ctx.g.neighbors(w) & comp != {cls.center}:
            raise RuleEngineBug(
                "red attached beyond the center after R9.1-R9.3 were inapplicable"
            )
        return Branch((_s(cls.center), _s(ctx.x_outside(w, comp))))
    return None


# --- di-stars (R10-R18) -------------------------------------------------------


def _r10(ctx: _Ctx):
    for i, _comp, cls in ctx.comp_items(DiStar):
        for w in ctx.comp_reds[i]:
            for center, leaves in (
                (cls.center_a, cls.leaves_a),
                (cls.center_b, cls.leaves_b),
            ):
                hit = ctx.g.neighbors(w) & leaves
                if len(hit) >= 2:
                    return Branch(
                        (_s(min(hit)), _s(center), _s(cls.other_center(center)))
                    )
    return None


def _distar_single_red(ctx: _Ctx, i: int):
    """Table dispatch for a di-star with exactly one attached red (R11-R14)."""
    comp, cls = ctx.comps[i], ctx.classes[i]
    reds = ctx.comp_reds[i]
    if len(reds) != 1:
        return None
    w = reds[0]
    touched = frozenset(ctx.g.neighbors(w) & comp)
    hit_a = touched & cls.leaves_a
    hit_b = touched & cls.leaves_b
    if len(hit_a) > 1 or len(hit_b) > 1:
        raise RuleEngineBug("two same-side leaves touched: R10 should have fired")
    confined = not (ctx.g.neighbors(w) - comp)
    ka, kb = len(cls.leaves_a), len(cls.leaves_b)
    sa, sb = cls.center_a, cls.center_b

    if {sa, sb} <= touched:
        extra = touched - {sa, sb}
        if ka >= 2 and kb >= 2:
            return "R11.3", Branch((cls.leaves_a, _s(sa), _s(sb), cls.leaves_b))
        if ka == 1 and kb == 1:
            if not extra:
                return "R11.1.1", Branch((_s(sa), _s(sb)))
            if len(extra) == 1:
                leaf = min(extra)
                c = cls.center_of(leaf)
                return "R11.1.2", Branch((_s(leaf), _s(c), _s(cls.other_center(c))))
            la, lb = min(cls.leaves_a), min(cls.leaves_b)
            if confined:
                return "R11.1.4", Reduce(delete=_s(min(comp)))
            x, y = ctx.xy_outside(w, comp)
            return "R11.1.3", Branch(
                (_s(x), _s(y), _s(la, sb), _s(sa, lb), _s(sa, sb))
            )
        # exactly one center of degree >= 3
        big, small = (sa, sb) if ka >= 2 else (sb, sa)
        t_big = touched & cls.leaves_of(big)
        t_small = touched & cls.leaves_of(small)
        if not t_big and not t_small:
            return "R11.2.1", Branch((_s(big), _s(small)))
        if t_big and not t_small:
            return "R11.2.2", Branch((_s(min(t_big)), _s(big), _s(small)))
        if t_small and not t_big:
            return "R11.2.3", Branch((_s(min(t_small)), _s(big), _s(small)))
        return "R11.2.4", Branch((_s(min(t_big)), _s(big), _s(small)))

    if len(touched) == 2:
        center_hit = touched & {sa, sb}
        if len(center_hit) == 1:
            c = min(center_hit)
            leaf = min(touched - center_hit)
            if leaf in cls.leaves_of(c):
                return "R12.1", Branch((_s(leaf), _s(c)))
            return "R12.2", Branch((_s(leaf), _s(cls.center_of(leaf)), _s(c)))
        la, lb = min(hit_a), min(hit_b)
        if ka == 1 and kb == 1:
            if confined:
                return "R12.3.2", Reduce(delete=_s(min(comp)))
            x, y = ctx.xy_outside(w, comp)
            return "R12.3.1", Branch((_s(x), _s(y), _s(la, lb)))
        if ka >= 2 and kb >= 2:
            return "R12.3.4", Branch((_s(sa), _s(sb), _s(la, lb)))
        big_leaf, other_leaf = (la, lb) if ka >= 2 else (lb, la)
        return "R12.3.3", Branch(
            (_s(big_leaf), _s(cls.center_of(big_leaf)), _s(other_leaf))
        )

    if len(touched) == 3:
        center_hit = touched & {sa, sb}
        if len(center_hit) != 1 or not hit_a or not hit_b:
            raise RuleEngineBug("unexpected 3-edge red attachment on a di-star")
        c = min(center_hit)
        other = cls.other_center(c)
        l_own = min(touched & cls.leaves_of(c))
        l_other = min(touched & cls.leaves_of(other))
        if len(cls.leaves_of(c)) >= 2:
            return "R13.3", Branch((_s(l_own), _s(c), _s(l_other)))
        if len(cls.leaves_of(other)) >= 2:
            return "R13.4", Branch((_s(l_own), _s(other), _s(l_other)))
        if confined:
            return "R13.2", Reduce(delete=_s(min(comp)))
        x, y = ctx.xy_outside(w, comp)
        return "R13.1", Branch((_s(x), _s(y), _s(l_own, other), _s(c, l_other)))

    if len(touched) == 1:
        t = min(touched)
        if t in (sa, sb):
            if confined:
                raise RuleEngineBug("red confined to a center: R1 should have fired")
            return "R14.2", Branch((_s(t), _s(ctx.x_outside(w, comp))))
        return "R14.1", Reduce(delete=_s(t))

    raise RuleEngineBug("unhandled single-red di-star attachment")


def _make_single_red_rule(rule_id: str):
    def evaluate(ctx: _Ctx):
        for i, _comp, _cls in ctx.comp_items(DiStar):
            got = ctx.distar_profile(i)
            if got is not None and got[0] == rule_id:
                return got[1]
        return None

    return evaluate


def _opposite_leaf_reds(ctx: _Ctx, i: int):
    """Reds attached by single edges to exactly two opposite leaves, or None."""
    comp, cls = ctx.comps[i], ctx.classes[i]
    reds = ctx.comp_reds[i]
    if len(reds) < 2:
        return None
    points = set()
    for w in reds:
        hit = ctx.g.neighbors(w) & comp
        if len(hit) != 1:
            return None
        points |= hit
    if len(points) != 2:
        return None
    pa = points & cls.leaves_a
    pb = points & cls.leaves_b
    if len(pa) != 1 or len(pb) != 1:
        return None
    la, lb = min(pa), min(pb)
    w_a = [w for w in reds if la in ctx.g.neighbors(w)]
    w_b = [w for w in reds if lb in ctx.g.neighbors(w)]
    return la, lb, w_a, w_b


def _r15(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(DiStar):
        reds = ctx.comp_reds[i]
        if len(reds) < 2:
            continue
        points: set[int] = set()
        single = True
        for w in reds:
            hit = ctx.g.neighbors(w) & comp
            if len(hit) != 1:
                single = False
                break
            points |= hit
        if not single or len(points) != 1:
            continue
        v = min(points)
        if v in cls.centers:
            raise RuleEngineBug("reds pinned to one center: R1 should have fired")
        return Reduce(delete=_s(v))
    return None


def _r16(ctx: _Ctx):
    for i, comp, cls in ctx.comp_items(DiStar):
        got = _opposite_leaf_reds(ctx, i)
        if got is None:
            continue
        la, lb, w_a, w_b = got
        if all(ctx.g.neighbors(w) <= comp for w in w_a):
            return Branch((_s(cls.center_of(lb)), _s(lb)))
        if all(ctx.g.neighbors(w) <= comp for w in w_b):
            return Branch((_s(cls.center_of(la)), _s(la)))
    return None


def _r17(ctx: _Ctx):
    for i, _comp, cls in ctx.comp_items(DiStar):
        got = _opposite_leaf_reds(ctx, i)
        if got is None:
            continue
        la, lb, w_a, w_b = got
        if len(w_a) != 1 or len(w_b) != 1:
            raise RuleEngineBug("a doubly-attached leaf must be confined: R16 missed")
        if len(cls.leaves_a) == 1 and len(cls.leaves_b) == 1:
            continue
        big = cls.center_a if len(cls.leaves_a) >= 2 else cls.center_b
        other = cls.other_center(big)
        leaf_other = lb if other == cls.center_b else la
        return Branch((_s(big), _s(other), _s(leaf_other)))
    return None


def _r18(ctx: _Ctx):
    for i, _comp, cls in ctx.comp_items(DiStar):
        got = _opposite_leaf_reds(ctx, i)
        if got is None:
            continue
        la, lb, _w_a, _w_b = got
        if len(cls.leaves_a) == 1 and len(cls.leaves_b) == 1:
            return Branch((_s(la), _s(lb)))
    return None


def _distar_profile(self: _Ctx, i: int):
    cache = self.__dict__.setdefault("_profiles", {})
    if i not in cache:
        cache[i] = _distar_single_red(self, i)
    return cache[i]


_Ctx.distar_profile = _distar_profile

_EVALUATORS = {
    "R0": _r0, "R1": _r1, "R2": _r2,
    "R3": _r3, "R4": _r4,
    "R5.1": _r5_1, "R5.2": _r5_2, "R5.3": _r5_3, "R5.4": _r5_4,
    "R6.1": _r6_1, "R6.2": _r6_2, "R6.3": _r6_3,
    "R7.1": _r7_1, "R7.2.1": _r7_2_1, "R7.2.2": _r7_2_2,
    "R7.2.3": _r7_2_3, "R7.2.4": _r7_2_4, "R7.2.5": _r7_2_5,
    "R8.1": _r8_1, "R8.2": _r8_2, "R8.3": _r8_3,
    "R9.1": _r9_1, "R9.2": _r9_2, "R9.3": _r9_3, "R9.4": _r9_4,
    "R10": _r10,
    "R15": _r15, "R16": _r16, "R17": _r17, "R18": _r18,
}
for _rid in _DISTAR:
    if _rid not in _EVALUATORS:
        _EVALUATORS[_rid] = _make_single_red_rule(_rid)
assert set(_EVALUATORS) == set(LEAF_RULES)


def _first_applicable(inst: BipartitionInstance, rules):
    ctx = _Ctx(inst)
    for rid in rules:
        decision = _EVALUATORS[rid](ctx)
        if decision is not None:
            return rid, decision
    return None


def preprocessing_rules(inst):
    """R0 (stopping), R1 (vertex on no P5), R2 (P5 with at most 3 blues)."""
    return _first_applicable(inst, _PRE)


def small_component_rules(inst):
    """R3-R6: isolated blue vertices, edges, P3 paths and triangles."""
    return _first_applicable(inst, _SMALL)


def four_cycle_rules(inst):
    """R7: blue components that are subgraphs of K4 containing a 4-cycle."""
    return _first_applicable(inst, _FOUR_CYCLE)


def star_rules(inst):
    """R8-R9: star and star-with-triangle blue components."""
    return _first_applicable(inst, _STAR)


def distar_rules(inst):
    """R10-R18: di-star blue components."""
    return _first_applicable(inst, _DISTAR)


def select_rule(inst: BipartitionInstance) -> tuple[str, RuleDecision]:
    """First applicable rule in document order; never absent on valid instances."""
    got = _first_applicable(inst, LEAF_RULES)
    if got is None:
        raise RuleEngineBug("no rule applicable: contradicts the completeness lemma")
    return got


def evaluate_rule(inst: BipartitionInstance, rule_id: str):
    """Evaluate one leaf rule's own predicate, ignoring rule order."""
    return _EVALUATORS[rule_id](_Ctx(inst))


def lemma7_prunable(inst: BipartitionInstance, x_set) -> bool:
    """True iff x_set has no red neighbor and exactly one blue neighbor outside itself.

    This is the exchange justification shared by R5.1, R6.1, R8.2 and friends:
    any solution vertex inside such a set can be swapped for its unique blue
    neighbor.
    """
    x_set = frozenset(x_set)
    nb: set[int] = set()
    for v in x_set:
        nb |= inst.graph.neighbors(v)
    nb -= x_set
    return not (nb & inst.red) and len(nb & inst.blue) == 1
