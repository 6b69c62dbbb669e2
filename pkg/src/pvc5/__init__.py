"""Exact solvers for 5-Path Vertex Cover.

The core is an iterative compression algorithm whose disjoint compression
routine applies an ordered system of reduction and branching rules over a
red/blue P5-free bipartition. Brute-force oracles, gadget generators, a
branching-factor analyzer and a CLI round out the suite.
"""

from .analysis import (
    FactorTableEntry,
    PAPER_FACTORS,
    RULE_BRANCH_VECTORS,
    branching_factor,
    rule_branch_vectors,
    verify_factor_table,
)
from .generators import (
    GADGETS,
    cycle_graph,
    gadget_instance,
    generate_instance,
    gnp_graph,
    path_graph,
)
from .graph import Graph, GraphError, VertexSet, build_graph
from .graph_io import (
    ParseError,
    emit_dimacs,
    emit_edge_list,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
)
from .instance import (
    BipartitionInstance,
    Branch,
    Halt,
    InvalidInstanceError,
    Reduce,
    make_instance,
)
from .oracles import (
    OracleLimitError,
    OracleResult,
    blue_subset_feasible,
    brute_force_min_pvc,
    trivial_branching,
    verify_solution,
)
from .rules import (
    CONTEXT_RULES,
    LEAF_RULES,
    RuleEngineBug,
    distar_rules,
    evaluate_rule,
    four_cycle_rules,
    lemma7_prunable,
    preprocessing_rules,
    select_rule,
    small_component_rules,
    star_rules,
)
from .solver import SolveStats, compress, disjoint_r, min_5pvc, solve_5pvc
from .structure import (
    C4Kind,
    ClassificationError,
    ComponentClass,
    DiStar,
    IsolatedEdge,
    IsolatedVertex,
    P3,
    Star,
    StarWithTriangle,
    Triangle,
    classify_component,
    find_p5,
    find_p5_through,
    is_p5_free,
    iter_p5,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
