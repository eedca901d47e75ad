"""Matching oracle: min-weight matchings of a graph with prescription.

Two regimes, picked per call from the weight magnitudes:

* plain weights in {-1, 0, +1}: forbidden edges and the endpoints of
  forced edges are deleted, nonnegative edges are dropped (they never
  help a minimizer), and a maximum-cardinality matching on the
  remaining weight -1 edges is found with blossom contraction;
* anything larger (the amplified weights of cost-optimal traversal):
  exact branch and bound over the negative-weight candidate edges with
  an admissible take-everything-left bound, gated to desk scale.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from ..bitstring import BitString
from ..instances import Graph
from ..lop import EMPTY_PRESCRIPTION, LopOracle, Prescription

#: Cost-mode search space gate: candidate edges beyond this raise.
BRANCH_AND_BOUND_LIMIT = 24


class InstanceTooLargeError(RuntimeError):
    """Cost-mode matching instance exceeds the exact-search gate."""


def max_cardinality_matching(n_vertices: int, adjacency: list[list[int]]) -> list[int]:
    """Blossom-contraction maximum matching; mate[v] = 0 when exposed.

    ``adjacency`` is 1-based; neighbor order fixes the tiebreak, so
    identical inputs yield identical matchings.
    """
    mate = [0] * (n_vertices + 1)
    parent = [0] * (n_vertices + 1)
    base = list(range(n_vertices + 1))
    used = [False] * (n_vertices + 1)
    blossom = [False] * (n_vertices + 1)

    def lowest_common_base(a: int, b: int) -> int:
        marked = [False] * (n_vertices + 1)
        while True:
            a = base[a]
            marked[a] = True
            if mate[a] == 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if marked[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, stem: int, child: int) -> None:
        while base[v] != stem:
            blossom[base[v]] = True
            blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def augment_from(root: int) -> None:
        nonlocal used, parent, base
        used = [False] * (n_vertices + 1)
        parent = [0] * (n_vertices + 1)
        base = list(range(n_vertices + 1))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adjacency[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != 0 and parent[mate[to]] != 0):
                    # Odd cycle through the root: contract the blossom.
                    stem = lowest_common_base(v, to)
                    for i in range(n_vertices + 1):
                        blossom[i] = False
                    mark_path(v, stem, to)
                    mark_path(to, stem, v)
                    for i in range(1, n_vertices + 1):
                        if blossom[base[i]]:
                            base[i] = stem
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == 0:
                    parent[to] = v
                    if mate[to] == 0:
                        # Exposed vertex: flip the alternating path.
                        u = to
                        while u != 0:
                            pv = parent[u]
                            nxt = mate[pv]
                            mate[u] = pv
                            mate[pv] = u
                            u = nxt
                        return
                    used[mate[to]] = True
                    queue.append(mate[to])

    # Greedy seed keeps the search short and the outcome stable.
    for v in range(1, n_vertices + 1):
        if mate[v] == 0:
            for to in adjacency[v]:
                if mate[to] == 0:
                    mate[v] = to
                    mate[to] = v
                    break
    for v in range(1, n_vertices + 1):
        if mate[v] == 0:
            augment_from(v)
    return mate


class MatchingOracle(LopOracle):
    """Minimum-weight matching of a graph, edges as positions."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n_edges

    def solve(self, weights, fix: Prescription = EMPTY_PRESCRIPTION) -> Optional[BitString]:
        if len(weights) != self.n:
            raise ValueError("weight vector length mismatch")
        if not self.graph.is_matching(fix.ones):
            return None
        blocked: set[int] = set()
        for i in fix.ones:
            blocked.update(self.graph.edge(i))
        candidates = [
            i
            for i in range(1, self.n + 1)
            if weights[i - 1] < 0
            and i not in fix.zeros
            and i not in fix.ones
            and not (set(self.graph.edge(i)) & blocked)
        ]
        if all(-1 <= w <= 1 for w in weights):
            chosen = self._max_cardinality(candidates)
        else:
            chosen = self._branch_and_bound(candidates, weights)
        return BitString.from_support(self.n, sorted(fix.ones) + chosen)

    def _max_cardinality(self, candidates: list[int]) -> list[int]:
        nv = self.graph.n_vertices
        adjacency: list[list[int]] = [[] for _ in range(nv + 1)]
        # Lowest edge index wins between parallel candidates.
        edge_of: dict[tuple[int, int], int] = {}
        for i in candidates:
            u, v = self.graph.edge(i)
            if (u, v) not in edge_of and (v, u) not in edge_of:
                edge_of[(u, v)] = i
                adjacency[u].append(v)
                adjacency[v].append(u)
        mate = max_cardinality_matching(nv, adjacency)
        chosen = []
        for (u, v), i in edge_of.items():
            if mate[u] == v:
                chosen.append(i)
        return sorted(chosen)

    def _branch_and_bound(self, candidates: list[int], weights) -> list[int]:
        order = sorted(candidates, key=lambda i: (weights[i - 1], i))
        if len(order) > BRANCH_AND_BOUND_LIMIT:
            raise InstanceTooLargeError(
                f"cost-mode matching searches at most {BRANCH_AND_BOUND_LIMIT} "
                f"negative-weight edges, got {len(order)}"
            )
        suffix = [0] * (len(order) + 1)
        for k in range(len(order) - 1, -1, -1):
            suffix[k] = suffix[k + 1] + weights[order[k] - 1]
        best_value = 0
        best: list[int] = []
        chosen: list[int] = []
        occupied: set[int] = set()

        def search(k: int, value: int) -> None:
            nonlocal best_value, best
            if value < best_value:
                best_value = value
                best = chosen.copy()
            for j in range(k, len(order)):
                # Even taking every remaining edge cannot reach best.
                if value + suffix[j] >= best_value:
                    break
                u, v = self.graph.edge(order[j])
                if u in occupied or v in occupied:
                    continue
                occupied.update((u, v))
                chosen.append(order[j])
                search(j + 1, value + weights[order[j] - 1])
                chosen.pop()
                occupied.difference_update((u, v))

        search(0, 0)
        return sorted(best)
