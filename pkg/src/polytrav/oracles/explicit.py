"""Brute-force oracle over an explicitly listed vertex set.

Primarily a validation tool: it makes any explicit set of bitstrings
traversable and fixes the simplest possible tiebreak, a lexicographic
scan that keeps the first minimizer.
"""

from __future__ import annotations

from typing import Iterable, Optional

from ..bitstring import BitString, dot
from ..lop import EMPTY_PRESCRIPTION, LopOracle, Prescription


class ExplicitOracle(LopOracle):
    """Scans the set in lexicographic order; first minimizer wins."""

    def __init__(self, members: Iterable[BitString], n: Optional[int] = None):
        items = sorted(set(members))
        if not items and n is None:
            raise ValueError("an empty explicit vertex set needs an explicit length")
        if n is None:
            n = len(items[0])
        if any(len(x) != n for x in items):
            raise ValueError("members must have equal length")
        self.n = n
        self.members = tuple(items)

    def solve(self, weights, fix: Prescription = EMPTY_PRESCRIPTION) -> Optional[BitString]:
        if len(weights) != self.n:
            raise ValueError("weight vector length mismatch")
        best = None
        best_val = None
        for y in self.members:
            if not fix.admits(y):
                continue
            v = dot(weights, y)
            if best_val is None or v < best_val:
                best, best_val = y, v
        return best
