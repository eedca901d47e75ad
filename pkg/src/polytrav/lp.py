"""Exact LP oracle for 0/1-polytopes given as a system Ax <= b.

Everything runs on Fractions; Bland's rule makes the simplex both
terminating and deterministic, so the oracle doubles as a tiebreak for
the traversal engine.  Prescribed coordinates are substituted out
before solving, and the unit box 0 <= x <= 1 is always added, so the
LP is bounded no matter what the caller supplies.  An optimal basic
solution is a vertex of the feasible region; if the region really is a
0/1-polytope the vertex is binary, and anything fractional is reported
as a diagnostic rather than rounded.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .bitstring import BitString
from .lop import EMPTY_PRESCRIPTION, LopOracle, Prescription

Number = int | Fraction


class NotZeroOnePolytopeError(RuntimeError):
    """The LP optimum is not a 0/1 point: Ax <= b is not a 0/1-polytope."""


class LinearSystem:
    """Inequalities Ax <= b with exact rational entries."""

    def __init__(self, rows: Iterable[Sequence[Number]], rhs: Iterable[Number]):
        self.rows = [[Fraction(a) for a in row] for row in rows]
        self.rhs = [Fraction(v) for v in rhs]
        if len(self.rows) != len(self.rhs):
            raise ValueError("one right-hand side per row required")
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise ValueError("rows must share a width")
        self.n = widths.pop() if widths else 0
        self.m = len(self.rows)

    @classmethod
    def unit_cube(cls, n: int) -> "LinearSystem":
        return cls([], [])._with_width(n)

    def _with_width(self, n: int) -> "LinearSystem":
        self.n = n
        return self


def _pivot(rows, objectives, basis, r, c) -> None:
    piv = rows[r][c]
    rows[r] = [v / piv for v in rows[r]]
    pivot_row = rows[r]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            f = row[c]
            rows[i] = [a - f * b for a, b in zip(row, pivot_row)]
    for k, row in enumerate(objectives):
        if row[c]:
            f = row[c]
            objectives[k] = [a - f * b for a, b in zip(row, pivot_row)]
    basis[r] = c


def _bland(rows, objectives, basis, columns) -> str:
    """Minimize objectives[0]; returns "optimal" or "unbounded"."""
    obj = objectives[0]
    while True:
        enter = next((j for j in columns if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        candidates = [
            (rows[i][-1] / rows[i][enter], basis[i], i)
            for i in range(len(rows))
            if rows[i][enter] > 0
        ]
        if not candidates:
            return "unbounded"
        _, _, leave = min(candidates)
        _pivot(rows, objectives, basis, leave, enter)
        obj = objectives[0]


def _feasible_point(
    rows: list[list[Fraction]],
    rhs: list[Fraction],
    cost: list[Fraction],
    equalities: bool,
) -> Optional[list[Fraction]]:
    """Two-phase simplex: minimize cost over {x >= 0 : Ax <= b (or =)}.

    Returns an optimal basic solution, None when infeasible; raises on
    unboundedness (callers construct bounded systems).
    """
    m = len(rows)
    n = len(cost)
    n_slack = 0 if equalities else m
    body = []
    for i, row in enumerate(rows):
        line = list(row)
        if not equalities:
            line.extend(Fraction(j == i) for j in range(m))
        line.append(rhs[i])
        if rhs[i] < 0:
            line = [-v for v in line]
        body.append(line)
    # One artificial basic variable per row lacking a ready slack.
    artificial: list[int] = []
    basis: list[int] = []
    for i, line in enumerate(body):
        slack = n + i
        if not equalities and line[slack] == 1:
            basis.append(slack)
        else:
            col = n + n_slack + len(artificial)
            artificial.append(col)
            basis.append(col)
    width = n + n_slack + len(artificial)
    for i, line in enumerate(body):
        pad = [Fraction(0)] * len(artificial)
        if basis[i] >= n + n_slack:
            pad[basis[i] - n - n_slack] = Fraction(1)
        body[i] = line[:-1] + pad + [line[-1]]

    phase1 = [Fraction(0)] * (width + 1)
    for col in artificial:
        phase1[col] = Fraction(1)
    phase2 = [Fraction(0)] * (width + 1)
    phase2[:n] = cost
    objectives = [phase1, phase2]
    for i, b in enumerate(basis):
        if objectives[0][b]:
            f = objectives[0][b]
            objectives[0] = [a - f * v for a, v in zip(objectives[0], body[i])]
    if artificial:
        status = _bland(body, objectives, basis, range(width))
        assert status == "optimal", "phase 1 is bounded below by zero"
        if -objectives[0][-1] != 0:
            return None
        # Degenerate artificials still in the basis: swap them for any
        # real column, or drop the (redundant) row.
        for i in range(len(body) - 1, -1, -1):
            if basis[i] >= n + n_slack:
                col = next(
                    (j for j in range(n + n_slack) if body[i][j] != 0), None
                )
                if col is None:
                    del body[i], basis[i]
                else:
                    _pivot(body, objectives, basis, i, col)
    status = _bland(body, [objectives[1]], basis, range(n + n_slack))
    if status == "unbounded":
        raise NotZeroOnePolytopeError("objective unbounded: not a 0/1-polytope")
    solution = [Fraction(0)] * n
    for value, var in zip((line[-1] for line in body), basis):
        if var < n:
            solution[var] = value
    return solution


class LpOracle(LopOracle):
    """Linear optimization with prescription over {x : Ax <= b} vertices."""

    def __init__(self, system: LinearSystem):
        self.system = system
        self.n = system.n

    def solve(self, weights, fix: Prescription = EMPTY_PRESCRIPTION) -> Optional[BitString]:
        if len(weights) != self.n:
            raise ValueError("weight vector length mismatch")
        fixed = {i: 0 for i in fix.zeros}
        fixed.update((i, 1) for i in fix.ones)
        free = [i for i in range(1, self.n + 1) if i not in fixed]
        rows = []
        rhs = []
        for row, b in zip(self.system.rows, self.system.rhs):
            rows.append([row[i - 1] for i in free])
            rhs.append(b - sum(row[i - 1] * v for i, v in fixed.items()))
        for k in range(len(free)):
            box = [Fraction(0)] * len(free)
            box[k] = Fraction(1)
            rows.append(box)
            rhs.append(Fraction(1))
        cost = [Fraction(weights[i - 1]) for i in free]
        point = _feasible_point(rows, rhs, cost, equalities=False)
        if point is None:
            return None
        bits = dict(fixed)
        for i, value in zip(free, point):
            if value == 0:
                bits[i] = 0
            elif value == 1:
                bits[i] = 1
            else:
                raise NotZeroOnePolytopeError(
                    f"optimal vertex has x_{i} = {value}: not a 0/1-polytope"
                )
        return BitString.from_bits(bits[i] for i in range(1, self.n + 1))


def lp_oracle(system: LinearSystem) -> LpOracle:
    return LpOracle(system)


def skeleton_edge_test(members: Iterable[BitString], x: BitString, y: BitString) -> bool:
    """Is (x, y) an edge of the convex hull of the member set?

    Exact characterization for distinct vertices of a polytope: the
    segment midpoint lies in the hull of the remaining vertices exactly
    when the pair is NOT an edge.  Decided by an exact feasibility LP
    over convex multipliers.
    """
    others = sorted(set(members) - {x, y})
    if x == y:
        raise ValueError("skeleton_edge_test needs two distinct vertices")
    n = len(x)
    mid = [Fraction(x.get(i) + y.get(i), 2) for i in range(1, n + 1)]
    rows = [[Fraction(1)] * len(others)]
    rhs = [Fraction(1)]
    for i in range(n):
        rows.append([Fraction(z.get(i + 1)) for z in others])
        rhs.append(mid[i])
    cost = [Fraction(0)] * len(others)
    point = _feasible_point(rows, rhs, cost, equalities=True)
    return point is None
