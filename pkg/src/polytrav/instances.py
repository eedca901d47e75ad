"""Combinatorial instance descriptions consumed by the oracles.

Ground-set elements are 1-based throughout so that they line up with
bitstring positions: edge i of a graph (or element i of a poset) is
position i of every vertex indicator the oracles exchange with the
traversal engine.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class UnionFind:
    """Disjoint sets over 1..n with path halving and union by size."""

    def __init__(self, n: int):
        self._parent = list(range(n + 1))
        self._size = [1] * (n + 1)

    def find(self, a: int) -> int:
        p = self._parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; False when already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return True


class Graph:
    """Undirected multigraph; edge index = ground-set position.

    Vertices are 1..n_vertices.  Self-loops are rejected, parallel
    edges are allowed, and edge order (hence indexing) is preserved.
    """

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int]]):
        if n_vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n_vertices = n_vertices
        pairs = []
        for u, v in edges:
            if not (1 <= u <= n_vertices and 1 <= v <= n_vertices):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            pairs.append((u, v))
        self.edges: tuple[tuple[int, int], ...] = tuple(pairs)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge(self, i: int) -> tuple[int, int]:
        """The endpoints of edge i (1-based)."""
        return self.edges[i - 1]

    def is_connected(self) -> bool:
        if self.n_vertices <= 1:
            return True
        uf = UnionFind(self.n_vertices)
        parts = self.n_vertices
        for u, v in self.edges:
            if uf.union(u, v):
                parts -= 1
        return parts == 1

    def is_matching(self, edge_ids: Iterable[int]) -> bool:
        seen: set[int] = set()
        for i in edge_ids:
            u, v = self.edge(i)
            if u in seen or v in seen:
                return False
            seen.add(u)
            seen.add(v)
        return True

    def is_forest(self, edge_ids: Iterable[int]) -> bool:
        uf = UnionFind(self.n_vertices)
        return all(uf.union(*self.edge(i)) for i in edge_ids)

    def is_spanning_tree(self, edge_ids: Iterable[int]) -> bool:
        ids = list(edge_ids)
        return len(ids) == self.n_vertices - 1 and self.is_forest(ids)


class Poset:
    """Finite strict partial order on elements 1..n.

    Built from a generating relation; the transitive closure is taken
    and any cycle in the input is rejected.  ``less`` is the strict
    order as a reachability matrix.
    """

    def __init__(self, n: int, relations: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("element count must be nonnegative")
        self.n = n
        less = [[False] * (n + 1) for _ in range(n + 1)]
        for a, b in relations:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"relation ({a}, {b}) leaves the element range")
            if a == b:
                raise ValueError(f"reflexive relation at element {a}")
            less[a][b] = True
        # Floyd-Warshall closure; a cycle shows up as a < a.
        for k in range(1, n + 1):
            lk = less[k]
            for i in range(1, n + 1):
                if less[i][k]:
                    li = less[i]
                    for j in range(1, n + 1):
                        if lk[j]:
                            li[j] = True
        for a in range(1, n + 1):
            if less[a][a]:
                raise ValueError("relation contains a cycle")
        self._less = less

    def less(self, a: int, b: int) -> bool:
        """Strictly below: a < b."""
        return self._less[a][b]

    def comparable(self, a: int, b: int) -> bool:
        return a != b and (self._less[a][b] or self._less[b][a])

    def down_set(self, elements: Iterable[int]) -> set[int]:
        """Elements of the argument together with everything below them."""
        out = set(elements)
        for b in tuple(out):
            out.update(a for a in range(1, self.n + 1) if self._less[a][b])
        return out

    def up_set(self, elements: Iterable[int]) -> set[int]:
        out = set(elements)
        for a in tuple(out):
            out.update(b for b in range(1, self.n + 1) if self._less[a][b])
        return out

    def is_ideal(self, elements: Iterable[int]) -> bool:
        chosen = set(elements)
        return all(
            a in chosen
            for b in chosen
            for a in range(1, self.n + 1)
            if self._less[a][b]
        )

    def is_antichain(self, elements: Iterable[int]) -> bool:
        chosen = sorted(set(elements))
        return not any(
            self.comparable(a, b) for i, a in enumerate(chosen) for b in chosen[i + 1 :]
        )
