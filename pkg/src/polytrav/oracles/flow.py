"""Deterministic integer max-flow used by the poset oracles.

Edmonds-Karp with adjacency in insertion order, so identical networks
produce identical flows and identical residual reachability.  All
capacities are exact Python ints; callers model "infinite" arcs with a
finite sentinel larger than any possible flow.
"""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    """Directed network on nodes 0..n-1 with integer capacities."""

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self._head: list[list[int]] = [[] for _ in range(n_nodes)]
        self._to: list[int] = []
        self._cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        """Add u -> v; returns an id usable with flow_on/disable."""
        if capacity < 0:
            raise ValueError("capacity must be nonnegative")
        e = len(self._to)
        self._to.append(v)
        self._cap.append(capacity)
        self._head[u].append(e)
        self._to.append(u)
        self._cap.append(0)
        self._head[v].append(e + 1)
        return e

    def flow_on(self, edge_id: int) -> int:
        # Flow pushed along an edge accumulates as reverse capacity.
        return self._cap[edge_id ^ 1]

    def disable(self, edge_id: int) -> None:
        """Freeze an edge: no further forward residual."""
        self._cap[edge_id] = 0

    def max_flow(self, source: int, sink: int) -> int:
        total = 0
        while True:
            parent_edge = self._bfs(source, sink)
            if parent_edge is None:
                return total
            bottleneck = None
            v = sink
            while v != source:
                e = parent_edge[v]
                c = self._cap[e]
                bottleneck = c if bottleneck is None else min(bottleneck, c)
                v = self._to[e ^ 1]
            v = sink
            while v != source:
                e = parent_edge[v]
                self._cap[e] -= bottleneck
                self._cap[e ^ 1] += bottleneck
                v = self._to[e ^ 1]
            total += bottleneck

    def _bfs(self, source: int, sink: int):
        parent_edge: list[int | None] = [None] * self.n
        seen = [False] * self.n
        seen[source] = True
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for e in self._head[u]:
                v = self._to[e]
                if not seen[v] and self._cap[e] > 0:
                    seen[v] = True
                    parent_edge[v] = e
                    if v == sink:
                        return parent_edge
                    queue.append(v)
        return None

    def residual_reachable(self, source: int) -> set[int]:
        """Nodes reachable from source along positive residual arcs."""
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for e in self._head[u]:
                v = self._to[e]
                if v not in seen and self._cap[e] > 0:
                    seen.add(v)
                    queue.append(v)
        return seen
