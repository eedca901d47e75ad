"""Ready-made linear-optimization oracles for common vertex classes."""

from __future__ import annotations

from typing import Iterable, Optional

from ..bitstring import BitString
from ..instances import Graph, Poset
from ..lop import LopOracle
from .explicit import ExplicitOracle
from .matching import (
    BRANCH_AND_BOUND_LIMIT,
    InstanceTooLargeError,
    MatchingOracle,
    max_cardinality_matching,
)
from .matroids import (
    GraphicMatroid,
    MatroidBasisOracle,
    MatroidIndependentOracle,
    MatroidOracle,
    UniformMatroid,
    matroid_oracle,
)
from .posets import (
    AntichainOracle,
    IdealOracle,
    poset_antichain_oracle,
    poset_ideal_oracle,
)
from .spanning import ForestOracle, SpanningTreeOracle


def explicit_oracle(members: Iterable[BitString], n: Optional[int] = None) -> LopOracle:
    return ExplicitOracle(members, n)


def spanning_tree_oracle(graph: Graph) -> LopOracle:
    return SpanningTreeOracle(graph)


def forest_oracle(graph: Graph) -> LopOracle:
    return ForestOracle(graph)


def matching_oracle(graph: Graph) -> LopOracle:
    return MatchingOracle(graph)


__all__ = [
    "BRANCH_AND_BOUND_LIMIT",
    "AntichainOracle",
    "ExplicitOracle",
    "ForestOracle",
    "GraphicMatroid",
    "IdealOracle",
    "InstanceTooLargeError",
    "MatchingOracle",
    "MatroidBasisOracle",
    "MatroidIndependentOracle",
    "MatroidOracle",
    "SpanningTreeOracle",
    "UniformMatroid",
    "explicit_oracle",
    "forest_oracle",
    "matching_oracle",
    "matroid_oracle",
    "max_cardinality_matching",
    "poset_antichain_oracle",
    "poset_ideal_oracle",
    "spanning_tree_oracle",
]
