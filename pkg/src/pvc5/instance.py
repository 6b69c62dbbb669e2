"""Bipartition instances and rule decisions for the disjoint compression routine.

An instance carries the graph, the red side (undeletable), the blue side
(deletable), the solution accumulated so far (already-deleted blue vertices)
and the remaining budget. Red and blue partition the alive vertices and both
induce P5-free subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, VertexSet
from .structure import is_p5_free


class InvalidInstanceError(ValueError):
    """The fields do not form a valid 5-PVCwB instance."""


@dataclass(frozen=True)
class Halt:
    """Stop the recursion: answer is the solution found, or None for 'no'."""

    answer: VertexSet | None


@dataclass(frozen=True)
class Reduce:
    """Remove vertices (free) and/or delete blue vertices (into F, costs budget)."""

    remove: VertexSet = frozenset()
    delete: VertexSet = frozenset()


@dataclass(frozen=True)
class Branch:
    """Try deleting each vertex set in turn, in the written order."""

    branches: tuple[VertexSet, ...]


RuleDecision = Halt | Reduce | Branch


@dataclass(frozen=True)
class BipartitionInstance:
    graph: Graph
    red: VertexSet
    blue: VertexSet
    solution: VertexSet = frozenset()
    budget: int = 0

    def validate(self) -> None:
        alive = frozenset(self.graph.vertices)
        if self.red | self.blue != alive or self.red & self.blue:
            raise InvalidInstanceError("red and blue must partition the alive vertices")
        if self.solution & alive:
            raise InvalidInstanceError("solution vertices must already be removed")
        if not is_p5_free(self.graph.induced(self.red)):
            raise InvalidInstanceError("red side induces a P5")
        if not is_p5_free(self.graph.induced(self.blue)):
            raise InvalidInstanceError("blue side induces a P5")

    def apply_reduce(self, decision: Reduce) -> BipartitionInstance:
        remove, delete = decision.remove, decision.delete
        if not (remove or delete):
            raise InvalidInstanceError("empty reduction")
        if not delete <= self.blue:
            raise InvalidInstanceError("can only delete blue vertices")
        gone = remove | delete
        return BipartitionInstance(
            graph=self.graph.remove_vertices(gone),
            red=self.red - gone,
            blue=self.blue - gone,
            solution=self.solution | delete,
            budget=self.budget - len(delete),
        )

    def apply_branch(self, deleted: VertexSet) -> BipartitionInstance:
        if not deleted or not deleted <= self.blue:
            raise InvalidInstanceError("branch must delete a nonempty blue set")
        return BipartitionInstance(
            graph=self.graph.remove_vertices(deleted),
            red=self.red,
            blue=self.blue - deleted,
            solution=self.solution | deleted,
            budget=self.budget - len(deleted),
        )


def make_instance(
    graph: Graph,
    red,
    budget: int,
    solution=frozenset(),
) -> BipartitionInstance:
    """Build and validate an instance; blue is the alive complement of red."""
    red = frozenset(red)
    inst = BipartitionInstance(
        graph=graph,
        red=red,
        blue=frozenset(graph.vertices) - red,
        solution=frozenset(solution),
        budget=budget,
    )
    inst.validate()
    return inst
