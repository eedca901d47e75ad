"""History-free skeleton traversal.

``traverse`` walks the vertex set of a 0/1-polytope given only through a
:class:`~polytrav.lop.LopOracle`, visiting every vertex exactly once
along a genlex Hamilton path on the polytope's skeleton.  No visited set
is kept.  The state besides the current vertex x is a stack of disjoint
position intervals, ordered with the leftmost interval on top, each
interval caching the smallest position inside it at which some
not-yet-visited vertex departs from x.

One step of the loop:

1. visit x;
2. pop the top interval (it holds the overall smallest such position,
   beta);
3. move to a Hamming-closest vertex that departs from x exactly at beta
   (one oracle call) — by a classical polytope fact this is a skeleton
   edge;
4. re-scan the popped interval above beta and the positions below beta
   against the *new* vertex, pushing whichever of the two windows still
   contains a departure position (binary search, logarithmically many
   oracle calls each).

The stack intervals never overlap: everything below the popped interval
was pushed as {1, ..., beta-1} and everything else on the stack lies
strictly above the popped interval's top.

With a cost vector c the same loop runs on the subset of c-minimal
vertices (a face of the polytope) by weight amplification inside the
reductions; the start vertex is then verified to be c-minimal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .bitstring import BitString, Interval, hamming, max_diff, dot
from .lop import (
    CountingOracle,
    LopOracle,
    Prescription,
    amplified,
    closest_at,
    min_change_in,
)

#: A visitor receives each visited vertex in order; returning False
#: stops the traversal after that vertex.
Visitor = Callable[[BitString], Optional[bool]]


class StartVertexError(ValueError):
    """The supplied start vertex is not a valid starting point."""


@dataclass(frozen=True)
class StackEntry:
    interval: Interval
    beta: int


class IntervalStack:
    """Stack of disjoint intervals, leftmost (smallest positions) on top."""

    def __init__(self):
        self._entries: list[StackEntry] = []

    def push(self, interval: Interval, beta: int) -> None:
        if not (interval.lo <= beta <= interval.hi):
            raise ValueError("cached minimum must lie in its interval")
        if self._entries and interval.hi >= self._entries[-1].interval.lo:
            raise ValueError("intervals on the stack must stay disjoint, descending")
        self._entries.append(StackEntry(interval, beta))

    def pop(self) -> StackEntry:
        return self._entries.pop()

    @property
    def is_empty(self) -> bool:
        return not self._entries

    def snapshot(self) -> tuple[tuple[int, int, int], ...]:
        """(lo, hi, beta) triples from top (leftmost) to bottom."""
        return tuple(
            (e.interval.lo, e.interval.hi, e.beta) for e in reversed(self._entries)
        )

    def __len__(self) -> int:
        return len(self._entries)


@dataclass(frozen=True)
class StepRecord:
    """Accounting for one visited vertex.

    ``calls`` counts the oracle calls spent after this visit to produce
    the next vertex (0 for the final one); ``stack`` is the interval
    stack at visit time, top first, or None when not recorded.
    """

    vertex: BitString
    calls: int
    stack: Optional[tuple[tuple[int, int, int], ...]] = None


@dataclass
class TraversalResult:
    listing: list[BitString] = field(default_factory=list)
    feasible: bool = True
    complete: bool = False
    stopped_early: bool = False
    init_calls: int = 0
    total_calls: int = 0
    steps: list[StepRecord] = field(default_factory=list)

    def __iter__(self):
        return iter(self.listing)

    def __len__(self) -> int:
        return len(self.listing)


def _cost_minimum(
    counting: LopOracle, cost: Sequence[int]
) -> Optional[BitString]:
    # Weights n*c (zero base weight) separate the cost minima strictly,
    # so unlike 1 + n*c this can never leak a non-minimal vertex on a
    # tie.  Still within the amplified weight set.
    return counting.solve(amplified([0] * counting.n, cost))


def default_start(
    oracle: LopOracle, cost: Optional[Sequence[int]] = None
) -> Optional[BitString]:
    """A deterministic start vertex; None when the instance is infeasible.

    Plain mode: the oracle's minimizer for all-ones weights.  With a
    cost vector: a cost-minimal vertex, preferring the amplified
    all-ones minimizer; when an amplification tie hands that call a
    non-minimal vertex, the minimizer under the scaled cost alone is
    used instead.
    """
    n = oracle.n
    if cost is None:
        return oracle.solve([1] * n)
    anchor = _cost_minimum(oracle, cost)
    if anchor is None:
        return None
    preferred = oracle.solve(amplified([1] * n, cost))
    return preferred if dot(cost, preferred) == dot(cost, anchor) else anchor


def _resolve_start(
    counting: CountingOracle,
    start: Optional[BitString],
    cost: Optional[Sequence[int]],
) -> Optional[BitString]:
    n = counting.n
    if cost is None:
        if start is None:
            return counting.solve([1] * n)
        member = counting.solve([0] * n, Prescription.fixing(start))
        if member != start:
            raise StartVertexError(f"start vertex {start} is not in the vertex set")
        return start
    if start is None:
        return default_start(counting, cost)
    anchor = _cost_minimum(counting, cost)
    if anchor is None:
        return None
    member = counting.solve([0] * n, Prescription.fixing(start))
    if member != start:
        raise StartVertexError(f"start vertex {start} is not in the vertex set")
    if dot(cost, start) != dot(cost, anchor):
        raise StartVertexError(
            f"start vertex {start} is not cost-minimal "
            f"({dot(cost, start)} > {dot(cost, anchor)})"
        )
    return start


def traverse(
    oracle: LopOracle,
    start: Optional[BitString] = None,
    visitor: Optional[Visitor] = None,
    cost: Optional[Sequence[int]] = None,
    record_stack: bool = False,
) -> TraversalResult:
    """Visit every vertex exactly once along a genlex skeleton path.

    With ``cost``, visits exactly the cost-minimal vertices instead.
    ``start`` must belong to the visited set (checked with one oracle
    call, plus a cost-minimality check in cost mode); by default the
    traversal starts at ``default_start``.  The optional visitor may
    return False to stop early; the remaining stack is discarded.
    """
    if cost is not None and len(cost) != oracle.n:
        raise ValueError("cost vector length mismatch")
    if start is not None and len(start) != oracle.n:
        raise StartVertexError("start vertex length mismatch")
    counting = CountingOracle(oracle)
    result = TraversalResult()
    x = _resolve_start(counting, start, cost)
    if x is None:
        result.feasible = False
        result.init_calls = result.total_calls = counting.calls
        return result

    stack = IntervalStack()

    def rescan(window: Interval) -> None:
        # Push the window iff some unvisited vertex departs from x in it.
        # Correct without a visited set: every vertex whose departure
        # position from x falls in a live window is still unvisited.
        beta = min_change_in(counting, x, window, cost)
        if beta != float("inf"):
            stack.push(window, int(beta))

    rescan(Interval(1, counting.n))
    result.init_calls = counting.calls

    while True:
        snapshot = stack.snapshot() if record_stack else None
        result.listing.append(x)
        if visitor is not None and visitor(x) is False:
            result.steps.append(StepRecord(x, 0, snapshot))
            result.stopped_early = True
            break
        if stack.is_empty:
            result.steps.append(StepRecord(x, 0, snapshot))
            result.complete = True
            break
        before = counting.calls
        entry = stack.pop()
        x = closest_at(counting, x, entry.beta, cost)
        rescan(Interval(entry.beta + 1, entry.interval.hi))
        rescan(Interval(1, entry.beta - 1))
        result.steps.append(StepRecord(result.listing[-1], counting.calls - before, snapshot))

    result.total_calls = counting.calls
    return result


def traverse_reference(
    members: Iterable[BitString], start: BitString
) -> list[BitString]:
    """Visited-set reference traversal over an explicit vertex set.

    Repeatedly moves to the vertex minimizing the departure position
    among unvisited vertices, breaking ties by minimum Hamming distance,
    then lexicographically.  Matches ``traverse`` with the explicit
    oracle.  Cross-validation tool; quadratic in |X|.
    """
    X = set(members)
    if start not in X:
        raise StartVertexError(f"start vertex {start} is not in the vertex set")
    out = [start]
    visited = {start}
    x = start
    while len(visited) < len(X):
        beta = min(max_diff(x, y) for y in X if y not in visited)
        candidates = [y for y in X if y != x and max_diff(x, y) == beta]
        dmin = min(hamming(x, y) for y in candidates)
        x = min(y for y in candidates if hamming(x, y) == dmin)
        visited.add(x)
        out.append(x)
    return out


def greedy_path(
    neighbors: Callable[[BitString], Iterable[BitString]],
    start: BitString,
) -> list[BitString]:
    """Greedy path in an explicit graph on bitstrings.

    From the current vertex, moves to the unvisited neighbor minimizing
    the departure position (lexicographic tiebreak); stops when all
    neighbors are visited.  On graphs whose suffix-restrictions stay
    connected across the last-bit split this finds a genlex Hamilton
    path; on arbitrary graphs it may stop early.
    """
    out = [start]
    visited = {start}
    x = start
    while True:
        fresh = [y for y in neighbors(x) if y not in visited]
        if not fresh:
            return out
        beta = min(max_diff(x, y) for y in fresh)
        x = min(y for y in fresh if max_diff(x, y) == beta)
        visited.add(x)
        out.append(x)
