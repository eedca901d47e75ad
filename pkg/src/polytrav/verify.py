"""Post-hoc certification of traversal outputs.

Everything here re-derives properties of a finished listing from first
principles: suffix trees and branching sets from the listing alone,
flip distances from the instance, skeleton edges from exact LP.  The
audit functions return line-oriented reports instead of raising, so a
caller (CLI or test) can surface every violation at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from statistics import mean
from typing import Callable, Iterable, Optional, Sequence

from .bitstring import (
    BitString,
    genlex_cost,
    hamming,
    is_genlex,
    listing_cost,
    max_diff,
)
from .engine import TraversalResult
from .instances import Graph, Poset
from .lp import skeleton_edge_test

FlipChecker = Callable[[BitString, BitString], bool]


# ------------------------------------------------------------- suffix tree


class SuffixNode:
    __slots__ = ("suffix", "children")

    def __init__(self, suffix: str):
        self.suffix = suffix
        self.children: list[SuffixNode] = []

    @property
    def is_leaf(self) -> bool:
        return not self.children


class SuffixTree:
    """Ordered tree of the suffixes of a genlex listing.

    The root is the empty suffix; the children of a length-k suffix are
    the length-(k+1) suffixes extending it, ordered by first appearance
    in the listing; the leaves, left to right, are the listing itself.
    """

    def __init__(self, root: SuffixNode, n: int):
        self.root = root
        self.n = n

    def leaves(self) -> list[BitString]:
        out: list[BitString] = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                out.append(BitString.from_text(node.suffix))
            else:
                stack.extend(reversed(node.children))
        return out

    def two_child_depths(self, member: BitString) -> set[int]:
        """Positions i such that the node at distance i from the given
        leaf has two children; equals the branching set of the leaf."""
        text = member.text()
        node = self.root
        out: set[int] = set()
        for depth in range(self.n):
            if len(node.children) == 2:
                out.add(self.n - depth)
            suffix = text[self.n - depth - 1 :]
            node = next((c for c in node.children if c.suffix == suffix), None)
            if node is None:
                raise ValueError(f"{text} is not a leaf of this tree")
        return out


def build_suffix_tree(listing: Sequence[BitString]) -> SuffixTree:
    if not listing:
        raise ValueError("cannot build a suffix tree of an empty listing")
    if not is_genlex(listing):
        raise ValueError("suffix trees are defined for genlex listings only")
    n = len(listing[0])
    root = SuffixNode("")
    for member in listing:
        text = member.text()
        node = root
        for k in range(1, n + 1):
            suffix = text[n - k :]
            child = next((c for c in node.children if c.suffix == suffix), None)
            if child is None:
                child = SuffixNode(suffix)
                node.children.append(child)
            node = child
    return SuffixTree(root, n)


# -------------------------------------------------------- branching sets


def branchings(x: BitString, members: Iterable[BitString]) -> set[int]:
    """All positions where some other member departs from x."""
    return {max_diff(x, y) for y in members if y != x}


def unseen_branchings(listing: Sequence[BitString], index: int) -> set[int]:
    """Departure positions towards members visited after the index."""
    x = listing[index]
    return {max_diff(x, y) for y in listing[index + 1 :] if y != x}


# ----------------------------------------------------------------- audits


@dataclass(frozen=True)
class AuditCheck:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "ok  " if self.ok else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class AuditReport:
    checks: list[AuditCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(AuditCheck(name, ok, detail))

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _first_bad_flip(listing, checker: FlipChecker) -> Optional[int]:
    for i in range(len(listing) - 1):
        if not checker(listing[i], listing[i + 1]):
            return i
    return None


def audit_traversal(
    listing: Sequence[BitString],
    expected: Iterable[BitString],
    flip_checker: Optional[FlipChecker] = None,
    skeleton_limit: int = 200,
) -> AuditReport:
    """Certify a listing: permutation, genlex, flips, branching order,
    and (on small instances) exact skeleton edges."""
    report = AuditReport()
    listing = list(listing)
    want = set(expected)
    seen = set(listing)
    duplicates = len(listing) - len(seen)
    uniform = len({len(x) for x in listing}) <= 1
    permutation = seen == want and not duplicates
    detail = ""
    if duplicates:
        detail = f"{duplicates} duplicate entries"
    elif seen - want:
        detail = f"unexpected {sorted(x.text() for x in seen - want)[:3]}"
    elif want - seen:
        detail = f"missing {sorted(x.text() for x in want - seen)[:3]}"
    report.add(f"permutation of the expected {len(want)} elements", permutation, detail)

    if duplicates or not uniform:
        report.add("genlex order", False, "malformed listing; remaining checks skipped")
        return report

    genlex = is_genlex(listing)
    detail = ""
    if not genlex:
        for i in range(1, len(listing)):
            if not is_genlex(listing[: i + 1]):
                detail = f"violated at index {i}"
                break
    report.add("genlex order", genlex, detail)

    if flip_checker is not None:
        bad = _first_bad_flip(listing, flip_checker)
        report.add(
            "consecutive outputs are valid flips",
            bad is None,
            "" if bad is None else f"between indices {bad} and {bad + 1}",
        )

    if genlex and permutation and len(listing) > 1:
        report.add(
            "listing cost equals the genlex minimum",
            listing_cost(listing) == genlex_cost(seen),
        )

    ordered = _min_branching_visited_last(listing)
    report.add(
        "closest departures are still unvisited",
        ordered is None,
        "" if ordered is None else f"index {ordered}",
    )

    replay = _unseen_branching_replay(listing)
    report.add(
        "unseen branchings shrink consistently",
        replay is None,
        "" if replay is None else f"index {replay}",
    )

    if 2 <= len(listing) <= skeleton_limit:
        bad = _first_bad_flip(
            listing, lambda a, b: skeleton_edge_test(listing, a, b)
        )
        report.add(
            "consecutive outputs are polytope edges (exact LP)",
            bad is None,
            "" if bad is None else f"between indices {bad} and {bad + 1}",
        )
    return report


def _min_branching_visited_last(listing) -> Optional[int]:
    # Min unseen branching property: everything departing at the
    # minimum unseen position is itself still unseen.
    position = {x: i for i, x in enumerate(listing)}
    for i, x in enumerate(listing[:-1]):
        beta = min(unseen_branchings(listing, i))
        for y in listing:
            if y != x and max_diff(x, y) == beta and position[y] < i:
                return i
    return None


def _unseen_branching_replay(listing) -> Optional[int]:
    for i in range(len(listing) - 1):
        current = unseen_branchings(listing, i)
        beta = min(current)
        successor = unseen_branchings(listing, i + 1)
        if current - {beta} != {p for p in successor if p > beta}:
            return i
    return None


def audit_stack_discipline(result: TraversalResult) -> AuditReport:
    """Replay a recorded traversal against its own final listing.

    At every visit the recorded intervals must be disjoint and ordered
    top-to-bottom by position, cover every unseen branching, and cache
    exactly the smallest unseen branching of their interval.
    """
    report = AuditReport()
    listing = result.listing
    if any(step.stack is None for step in result.steps):
        report.add("stack snapshots recorded", False, "run traverse(record_stack=True)")
        return report
    report.add("stack snapshots recorded", True)
    for i, step in enumerate(result.steps):
        intervals = step.stack
        unseen = unseen_branchings(listing, i)
        ordered = all(
            intervals[k][1] < intervals[k + 1][0] for k in range(len(intervals) - 1)
        )
        covered = all(
            any(lo <= p <= hi for lo, hi, _ in intervals) for p in unseen
        )
        minima = all(
            beta == min((p for p in unseen if lo <= p <= hi), default=None)
            for lo, hi, beta in intervals
        )
        if not (ordered and covered and minima):
            report.add(
                "stack agrees with unseen branchings",
                False,
                f"visit {i}: intervals {intervals}, unseen {sorted(unseen)}",
            )
            return report
    report.add("stack agrees with unseen branchings", True)
    return report


# ------------------------------------------------------- call accounting


@dataclass(frozen=True)
class CallStats:
    init_calls: int
    per_visit: tuple[int, ...]
    max_calls: int
    mean_calls: float
    budget: int

    @property
    def within_budget(self) -> bool:
        return self.max_calls <= self.budget and self.init_calls <= self.budget


def call_budget(n: int) -> int:
    """Worst-case oracle calls per visit: one move plus two interval
    re-scans of at most ceil(log2 n) + 2 calls each."""
    if n <= 0:
        return 1
    return 2 * ((n - 1).bit_length() + 2) + 1


def count_oracle_calls(result: TraversalResult, n: Optional[int] = None) -> CallStats:
    per_visit = tuple(step.calls for step in result.steps)
    if n is None:
        n = len(result.listing[0]) if result.listing else 0
    return CallStats(
        init_calls=result.init_calls,
        per_visit=per_visit,
        max_calls=max(per_visit, default=0),
        mean_calls=float(mean(per_visit)) if per_visit else 0.0,
        budget=call_budget(n),
    )


# ---------------------------------------------------------- flip checkers


def edge_exchange_flip(a: BitString, b: BitString) -> bool:
    """One element swapped for another: spanning trees, matroid bases."""
    return hamming(a, b) == 2


def toggle_or_exchange_flip(a: BitString, b: BitString) -> bool:
    """One element added, removed, or swapped: forests and matroid
    independent sets, whose polytopes have the empty-set corner."""
    return hamming(a, b) in (1, 2)


def _difference_shape(graph: Graph, a: BitString, b: BitString):
    edges = [graph.edge(i) for i in set(a.support()) ^ set(b.support())]
    degree: dict[int, int] = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    vertices = sorted(degree)
    if not vertices:
        return "empty", 0
    adjacency = {v: [] for v in vertices}
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    stack = [vertices[0]]
    seen = {vertices[0]}
    while stack:
        for w in adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(vertices):
        return "disconnected", len(edges)
    if all(d == 2 for d in degree.values()) and len(edges) == len(vertices):
        return "cycle", len(edges)
    ends = sum(1 for d in degree.values() if d == 1)
    if ends == 2 and all(d <= 2 for d in degree.values()):
        return "path", len(edges)
    return "other", len(edges)


def matching_flip(graph: Graph) -> FlipChecker:
    """Symmetric difference is one alternating path or one cycle."""

    def check(a: BitString, b: BitString) -> bool:
        shape, _ = _difference_shape(graph, a, b)
        return shape in ("path", "cycle")

    return check


def short_alternating_path_flip(graph: Graph, max_edges: int = 3) -> FlipChecker:
    """Symmetric difference is one alternating path of few edges; the
    stronger guarantee of plain (unweighted) matching traversal."""

    def check(a: BitString, b: BitString) -> bool:
        shape, size = _difference_shape(graph, a, b)
        return shape == "path" and size <= max_edges

    return check


def connected_difference_flip(poset: Poset) -> FlipChecker:
    """Symmetric difference induces a connected subgraph of the
    comparability graph: ideals and antichains."""

    def check(a: BitString, b: BitString) -> bool:
        changed = sorted(set(a.support()) ^ set(b.support()))
        if not changed:
            return False
        stack = [changed[0]]
        seen = {changed[0]}
        while stack:
            v = stack.pop()
            for u in changed:
                if u not in seen and poset.comparable(u, v):
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(changed)

    return check
