"""Spanning tree and forest oracles over a graph's edge ground set.

Both answer minimization queries with prescription exactly, for
arbitrary integer weights, so they serve the plain and the cost-optimal
traversal modes alike.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ..bitstring import BitString
from ..instances import Graph, UnionFind
from ..lop import EMPTY_PRESCRIPTION, LopOracle, Prescription


def _indicator(m: int, chosen) -> BitString:
    return BitString.from_support(m, chosen)


class SpanningTreeOracle(LopOracle):
    """Minimum spanning tree with prescription by weight shifting.

    Forbidden edges get weight +M and forced edges -M with M exceeding
    every |w_i|, and Kruskal runs on the unmodified graph; ties break
    by edge index.  The prescription is infeasible exactly when the
    returned tree still uses a forbidden edge or skips a forced one.
    """

    def __init__(self, graph: Graph):
        if graph.n_vertices == 0:
            raise ValueError("spanning trees need at least one vertex")
        if not graph.is_connected():
            raise ValueError("graph must be connected")
        self.graph = graph
        self.n = graph.n_edges

    def solve(self, weights, fix: Prescription = EMPTY_PRESCRIPTION) -> Optional[BitString]:
        if len(weights) != self.n:
            raise ValueError("weight vector length mismatch")
        shift = max((abs(w) for w in weights), default=0) + 1
        shifted = list(weights)
        for i in fix.zeros:
            shifted[i - 1] = shift
        for i in fix.ones:
            shifted[i - 1] = -shift
        order = sorted(range(1, self.n + 1), key=lambda i: (shifted[i - 1], i))
        uf = UnionFind(self.graph.n_vertices)
        tree = [i for i in order if uf.union(*self.graph.edge(i))]
        if any(i in fix.zeros for i in tree):
            return None
        if not fix.ones.issubset(tree):
            return None
        return _indicator(self.n, tree)


class ForestOracle(LopOracle):
    """Minimum-weight forest (graphic-matroid independent set).

    Forced edges go in first (infeasible on a cycle); then edges with
    negative weight are added greedily in increasing (weight, index)
    order while they keep the selection acyclic.  Nonnegative edges
    never help a minimizer.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n_edges

    def solve(self, weights, fix: Prescription = EMPTY_PRESCRIPTION) -> Optional[BitString]:
        if len(weights) != self.n:
            raise ValueError("weight vector length mismatch")
        uf = UnionFind(self.graph.n_vertices)
        chosen = []
        for i in sorted(fix.ones):
            if not uf.union(*self.graph.edge(i)):
                return None
            chosen.append(i)
        candidates = sorted(
            (
                i
                for i in range(1, self.n + 1)
                if weights[i - 1] < 0 and i not in fix.zeros and i not in fix.ones
            ),
            key=lambda i: (weights[i - 1], i),
        )
        for i in candidates:
            if uf.union(*self.graph.edge(i)):
                chosen.append(i)
        return _indicator(self.n, chosen)
