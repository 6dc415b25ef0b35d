"""Decide inheritance of F-convexity for P_min-restricted games on weighted graphs."""

from .checkers import (
    INHERITS,
    VIOLATES,
    DecisionReport,
    check_adjacent_part1,
    check_adjacent_part2_weak,
    check_pan,
    check_path,
    check_star,
    decide_inheritance,
)
from .conditions import enumerate_condition
from .graph import (
    GraphFormatError,
    Partition,
    WeightedGraph,
    connected_components,
    fundamental_cycle,
    min_weight_edges,
    parse_graph,
    prim_mst,
    shortest_path,
)
from .oracle import (
    inheritance_oracle,
    is_f_convex_restricted,
    superadditivity_check,
    partition_criterion,
)
from .pmin import Game, pmin_partition, restrict_partition, restricted_value
from .verify import reverify
from .violations import Violation

__all__ = [
    "INHERITS",
    "VIOLATES",
    "DecisionReport",
    "Game",
    "GraphFormatError",
    "Partition",
    "Violation",
    "WeightedGraph",
    "check_adjacent_part1",
    "check_adjacent_part2_weak",
    "check_pan",
    "check_path",
    "check_star",
    "connected_components",
    "decide_inheritance",
    "enumerate_condition",
    "fundamental_cycle",
    "inheritance_oracle",
    "is_f_convex_restricted",
    "min_weight_edges",
    "parse_graph",
    "pmin_partition",
    "prim_mst",
    "restrict_partition",
    "restricted_value",
    "reverify",
    "shortest_path",
    "superadditivity_check",
    "partition_criterion",
]
