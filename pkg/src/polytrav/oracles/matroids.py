"""Matroid basis / independent-set oracles over an independence test.

A matroid is anything exposing a ground-set size and a hereditary
``independent`` predicate with the exchange property; the greedy
algorithm is then exact for weighted bases and weighted independent
sets, which is all the traversal needs.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Iterable, Optional

from ..bitstring import BitString
from ..instances import Graph, UnionFind
from ..lop import EMPTY_PRESCRIPTION, LopOracle, Prescription


class MatroidOracle(ABC):
    """Independence-oracle contract; elements are 1..n."""

    n: int

    @abstractmethod
    def independent(self, elements: Iterable[int]) -> bool:
        """Whether the element set is independent.  Must be hereditary."""


class UniformMatroid(MatroidOracle):
    """Independent iff at most k elements."""

    def __init__(self, n: int, k: int):
        if not 0 <= k <= n:
            raise ValueError("rank must lie between 0 and the ground-set size")
        self.n = n
        self.k = k

    def independent(self, elements: Iterable[int]) -> bool:
        return len(set(elements)) <= self.k


class GraphicMatroid(MatroidOracle):
    """Independent iff the edge set is a forest."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n_edges

    def independent(self, elements: Iterable[int]) -> bool:
        uf = UnionFind(self.graph.n_vertices)
        return all(uf.union(*self.graph.edge(i)) for i in set(elements))


def _rank(matroid: MatroidOracle) -> int:
    chosen: list[int] = []
    for i in range(1, matroid.n + 1):
        chosen.append(i)
        if not matroid.independent(chosen):
            chosen.pop()
    return len(chosen)


class MatroidBasisOracle(LopOracle):
    """Minimum-weight basis with prescription, by greedy extension.

    Forced elements go in first (infeasible when dependent); the rest,
    minus forbidden ones, are tried in increasing (weight, index)
    order.  If the greedy result is smaller than the matroid's rank, no
    basis fits the prescription.
    """

    def __init__(self, matroid: MatroidOracle):
        self.matroid = matroid
        self.n = matroid.n
        self.rank = _rank(matroid)

    def solve(self, weights, fix: Prescription = EMPTY_PRESCRIPTION) -> Optional[BitString]:
        if len(weights) != self.n:
            raise ValueError("weight vector length mismatch")
        chosen = sorted(fix.ones)
        if not self.matroid.independent(chosen):
            return None
        order = sorted(
            (
                i
                for i in range(1, self.n + 1)
                if i not in fix.zeros and i not in fix.ones
            ),
            key=lambda i: (weights[i - 1], i),
        )
        for i in order:
            chosen.append(i)
            if not self.matroid.independent(chosen):
                chosen.pop()
        if len(chosen) < self.rank:
            return None
        return BitString.from_support(self.n, chosen)


class MatroidIndependentOracle(LopOracle):
    """Minimum-weight independent set with prescription.

    Same greedy as the basis oracle, but only negative-weight elements
    are worth adding on top of the forced ones.
    """

    def __init__(self, matroid: MatroidOracle):
        self.matroid = matroid
        self.n = matroid.n

    def solve(self, weights, fix: Prescription = EMPTY_PRESCRIPTION) -> Optional[BitString]:
        if len(weights) != self.n:
            raise ValueError("weight vector length mismatch")
        chosen = sorted(fix.ones)
        if not self.matroid.independent(chosen):
            return None
        order = sorted(
            (
                i
                for i in range(1, self.n + 1)
                if weights[i - 1] < 0 and i not in fix.zeros and i not in fix.ones
            ),
            key=lambda i: (weights[i - 1], i),
        )
        for i in order:
            chosen.append(i)
            if not self.matroid.independent(chosen):
                chosen.pop()
        return BitString.from_support(self.n, chosen)


def matroid_oracle(matroid: MatroidOracle, bases_mode: bool) -> LopOracle:
    """Oracle over the bases (or all independent sets) of a matroid."""
    return MatroidBasisOracle(matroid) if bases_mode else MatroidIndependentOracle(matroid)
