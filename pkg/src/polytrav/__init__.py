"""Gray-code traversal of 0/1-polytope skeletons via optimization oracles.

The traversal engine turns any linear-optimization-with-prescription
oracle into a genlex Hamilton path on the skeleton of the convex hull
of the oracle's feasible 0/1-vectors.  Oracles ship for explicit sets,
spanning trees and forests, matroid bases and independent sets,
matchings, poset ideals and antichains, and inequality-description
polytopes (exact rational LP).
"""

from .bitstring import (
    BitString,
    Interval,
    all_bitstrings,
    dot,
    genlex_cost,
    hamming,
    is_genlex,
    listing_cost,
    max_diff,
)
from .engine import (
    StartVertexError,
    TraversalResult,
    default_start,
    greedy_path,
    traverse,
    traverse_reference,
)
from .instances import Graph, Poset
from .lop import LopOracle, Prescription, amplified
from .lp import (
    LinearSystem,
    NotZeroOnePolytopeError,
    lp_oracle,
    skeleton_edge_test,
)
from .oracles import (
    InstanceTooLargeError,
    explicit_oracle,
    forest_oracle,
    matching_oracle,
    matroid_oracle,
    poset_antichain_oracle,
    poset_ideal_oracle,
    spanning_tree_oracle,
)
from .verify import (
    AuditReport,
    audit_stack_discipline,
    audit_traversal,
    build_suffix_tree,
    call_budget,
    count_oracle_calls,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BitString",
    "Graph",
    "InstanceTooLargeError",
    "Interval",
    "LinearSystem",
    "LopOracle",
    "NotZeroOnePolytopeError",
    "Poset",
    "Prescription",
    "StartVertexError",
    "TraversalResult",
    "all_bitstrings",
    "amplified",
    "audit_stack_discipline",
    "audit_traversal",
    "build_suffix_tree",
    "call_budget",
    "count_oracle_calls",
    "default_start",
    "dot",
    "explicit_oracle",
    "forest_oracle",
    "genlex_cost",
    "greedy_path",
    "hamming",
    "is_genlex",
    "listing_cost",
    "lp_oracle",
    "matching_oracle",
    "matroid_oracle",
    "max_diff",
    "poset_antichain_oracle",
    "poset_ideal_oracle",
    "skeleton_edge_test",
    "spanning_tree_oracle",
    "traverse",
    "traverse_reference",
]
