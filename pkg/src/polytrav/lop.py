"""Bridge between skeleton traversal and linear optimization.

The traversal engine never looks at the vertex set directly.  All of its
questions are phrased as instances of *linear optimization with
prescription* (LOP): minimize w.y over y in X subject to y_i = 0 for
i in P0 and y_i = 1 for i in P1.  Any deterministic solver of that
problem plugs in as a :class:`LopOracle`; its determinism doubles as the
traversal's tiebreaking rule.

Two questions are reduced to LOP calls here:

* ``min_change_in(o, x, window)`` — the smallest position inside the
  window at which some other vertex departs from x (INFINITY if none).
  Decided by binary search on a monotone predicate, one LOP call per
  probe: give weight -1/+1 to positions >= window.lo depending on x,
  prescribe agreement with x above the probe position, and ask whether
  the optimum beats w.x.
* ``closest_at(o, x, beta)`` — among vertices whose largest differing
  position is exactly beta, one of minimum Hamming distance from x.
  A single LOP call: weights +1/-1 reward agreement with x, the
  prescription forces a flip at beta and agreement above it.

Both accept an optional cost vector c.  Amplifying weights to
w + n*c makes the cost term dominate, so plain minimization over X
answers the same questions about the c-minimal subset of X.  The caller
must then keep the traversal inside that subset (the engine does).

Positions are 1-based; weight and cost sequences are 0-indexed, entry 0
belonging to position 1.  All arithmetic is exact (Python ints).
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .bitstring import INFINITY, BitString, Interval, dot


@dataclass(frozen=True)
class Prescription:
    """Positions forced to 0 and positions forced to 1."""

    zeros: frozenset[int] = frozenset()
    ones: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "zeros", frozenset(self.zeros))
        object.__setattr__(self, "ones", frozenset(self.ones))
        if self.zeros & self.ones:
            raise ValueError("a position cannot be forced to both 0 and 1")

    @property
    def is_empty(self) -> bool:
        return not self.zeros and not self.ones

    def admits(self, x: BitString) -> bool:
        return all(x.get(i) == 0 for i in self.zeros) and all(
            x.get(i) == 1 for i in self.ones
        )

    @classmethod
    def fixing(cls, x: BitString) -> "Prescription":
        """Prescription satisfied by x and nothing else."""
        ones = x.support()
        zeros = frozenset(range(1, len(x) + 1)) - frozenset(ones)
        return cls(zeros=zeros, ones=frozenset(ones))


EMPTY_PRESCRIPTION = Prescription()


class LopOracle(ABC):
    """Deterministic solver for min{w.y : y in X, y zero on P0, one on P1}.

    ``solve`` returns a minimizer or None when no y satisfies the
    prescription.  Identical inputs must yield identical outputs; the
    choice among tied minimizers is the implementation's documented
    tiebreak and becomes the traversal order's tiebreak.
    """

    n: int

    @abstractmethod
    def solve(
        self, weights: Sequence[int], fix: Prescription = EMPTY_PRESCRIPTION
    ) -> Optional[BitString]:
        raise NotImplementedError


class CountingOracle(LopOracle):
    """Wrapper counting solve calls; used for delay accounting."""

    def __init__(self, inner: LopOracle):
        self.inner = inner
        self.n = inner.n
        self.calls = 0

    def solve(self, weights, fix=EMPTY_PRESCRIPTION):
        self.calls += 1
        return self.inner.solve(weights, fix)


def amplified(weights: Sequence[int], cost: Sequence[int]) -> list[int]:
    """w + n*c componentwise; makes the cost term dominate the weights."""
    if len(weights) != len(cost):
        raise ValueError("weight and cost vectors must have equal length")
    n = len(weights)
    return [w + n * c for w, c in zip(weights, cost)]


def _maybe_amplified(weights: list[int], cost: Optional[Sequence[int]]) -> list[int]:
    return weights if cost is None else amplified(weights, cost)


def _probe_weights(x: BitString, lo: int) -> list[int]:
    # Reward differing from x at any position >= lo; ignore positions
    # below lo.  Entries are -1 where x is 0, +1 where x is 1.
    n = len(x)
    return [0 if i < lo else (1 if x.get(i) else -1) for i in range(1, n + 1)]


def change_at_most(
    oracle: LopOracle,
    x: BitString,
    window: Interval,
    alpha: int,
    cost: Optional[Sequence[int]] = None,
) -> bool:
    """Does some other vertex differ from x inside window at position <= alpha?

    Monotone in alpha.  One LOP call: among vertices agreeing with x
    everywhere above alpha, ask whether any beats x itself on weights
    that reward disagreement at positions >= window.lo.  With a cost
    vector, amplified weights restrict the question to cost-minimal
    vertices (x must be one).
    """
    if alpha not in window:
        raise ValueError("alpha must lie in the window")
    n = len(x)
    w = _maybe_amplified(_probe_weights(x, window.lo), cost)
    fix = Prescription(
        zeros=frozenset(i for i in range(alpha + 1, n + 1) if x.get(i) == 0),
        ones=frozenset(i for i in range(alpha + 1, n + 1) if x.get(i) == 1),
    )
    y = oracle.solve(w, fix)
    return y is not None and dot(w, y) < dot(w, x)


def min_change_in(
    oracle: LopOracle,
    x: BitString,
    window: Interval,
    cost: Optional[Sequence[int]] = None,
) -> int | float:
    """Smallest position in the window where some other vertex departs from x.

    Returns INFINITY when every other vertex agrees with x throughout the
    window (or differs only above it).  Issues at most
    ceil(log2(len(window))) + 2 oracle calls: one probe at the window top
    to detect INFINITY, then binary search for the threshold of the
    monotone predicate.
    """
    if window.is_empty:
        return INFINITY
    if not change_at_most(oracle, x, window, window.hi, cost):
        return INFINITY
    lo, hi = window.lo, window.hi
    while lo < hi:
        mid = (lo + hi) // 2
        if change_at_most(oracle, x, window, mid, cost):
            hi = mid
        else:
            lo = mid + 1
    return lo


def closest_at(
    oracle: LopOracle,
    x: BitString,
    beta: int,
    cost: Optional[Sequence[int]] = None,
) -> BitString:
    """Hamming-closest vertex whose largest differing position is beta.

    Single LOP call.  The prescription pins y_beta to the flip of x_beta
    and pins agreement with x above beta; the weights make w.y equal
    Hamming distance from x up to a constant.  The caller guarantees a
    candidate exists (the traversal only asks about known branchings).
    """
    n = len(x)
    base = [1 if x.get(i) == 0 else -1 for i in range(1, n + 1)]
    w = _maybe_amplified(base, cost)
    zeros = {i for i in range(beta + 1, n + 1) if x.get(i) == 0}
    ones = {i for i in range(beta + 1, n + 1) if x.get(i) == 1}
    if x.get(beta) == 0:
        ones.add(beta)
    else:
        zeros.add(beta)
    y = oracle.solve(w, Prescription(zeros=frozenset(zeros), ones=frozenset(ones)))
    if y is None:
        raise RuntimeError(
            "no vertex flips at the requested position; "
            "this indicates stale branching bookkeeping"
        )
    return y


def eliminate_prescription(
    weights: Sequence[int], fix: Prescription, bound: int
) -> list[int]:
    """Weights letting a plain minimizer respect the prescription.

    Entries on forced positions are replaced by +n*bound (forced to 0)
    or -n*bound (forced to 1), where bound >= max|w_i|.  Any minimizer of
    the new weights over X satisfies the prescription whenever some
    member of X does; the caller must post-check the returned vertex
    against the prescription to detect infeasibility, which a plain
    minimizer cannot signal.
    """
    if any(abs(w) > bound for w in weights):
        raise ValueError("bound must dominate every |w_i|")
    if fix.is_empty:
        return list(weights)
    n = len(weights)
    out = list(weights)
    for i in fix.zeros:
        out[i - 1] = n * bound
    for i in fix.ones:
        out[i - 1] = -n * bound
    return out


@dataclass
class PlainMinimizerOracle(LopOracle):
    """LopOracle built from a prescription-free minimizer.

    ``minimize(weights)`` must return a minimizer of w.y over X (or None
    for empty X).  Prescriptions are folded into the weights via
    ``eliminate_prescription`` and post-checked on the result.
    """

    n: int
    minimize: Callable[[list[int]], Optional[BitString]]
    calls: int = field(default=0)

    def solve(self, weights, fix=EMPTY_PRESCRIPTION):
        self.calls += 1
        bound = max((abs(w) for w in weights), default=0) or 1
        y = self.minimize(eliminate_prescription(weights, fix, bound))
        if y is None or not fix.admits(y):
            return None
        return y
