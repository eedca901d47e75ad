from __future__ import annotations

import random

import pytest

import bruteforce as bf
from polytrav.bitstring import BitString, Interval, all_bitstrings, dot, is_genlex
from polytrav.engine import (
    IntervalStack,
    StartVertexError,
    default_start,
    greedy_path,
    traverse,
    traverse_reference,
)
from polytrav.lop import CountingOracle
from polytrav.oracles.explicit import ExplicitOracle

B = BitString.from_text


def oracle_of(*texts: str) -> ExplicitOracle:
    return ExplicitOracle([B(t) for t in texts])


def square() -> ExplicitOracle:
    return ExplicitOracle(all_bitstrings(2))


def texts(listing) -> list[str]:
    return [x.text() for x in listing]


def call_budget(n: int) -> int:
    # ceil(log2 n) for n >= 1; the n = 0 walk never calls mid-run.
    return 2 * ((n - 1).bit_length() + 2) + 1 if n else 1


class TestIntervalStack:
    def test_push_pop_order(self):
        s = IntervalStack()
        s.push(Interval(5, 9), 6)
        s.push(Interval(1, 3), 2)
        assert s.snapshot() == ((1, 3, 2), (5, 9, 6))
        top = s.pop()
        assert (top.interval, top.beta) == (Interval(1, 3), 2)
        assert not s.is_empty and len(s) == 1

    def test_rejects_overlap_and_wrong_order(self):
        s = IntervalStack()
        s.push(Interval(4, 7), 4)
        with pytest.raises(ValueError):
            s.push(Interval(6, 9), 6)  # overlaps the top
        with pytest.raises(ValueError):
            s.push(Interval(8, 9), 8)  # above the top, not below

    def test_rejects_beta_outside_interval(self):
        s = IntervalStack()
        with pytest.raises(ValueError):
            s.push(Interval(2, 4), 5)


class TestDefaultStart:
    def test_square(self):
        assert default_start(square()) == B("00")

    def test_triangle_is_lex_first_minimizer(self):
        # All three vertices weigh 2 under all-ones, so the explicit
        # oracle hands back the lexicographically first.
        assert default_start(oracle_of("110", "011", "101")) == B("011")

    def test_empty_set(self):
        assert default_start(ExplicitOracle([], n=3)) is None

    def test_cost_mode_returns_a_cost_minimum(self):
        oracle = oracle_of("110", "011", "101")
        assert default_start(oracle, cost=[1, 0, 0]) == B("011")
        assert default_start(oracle, cost=[0, 0, 1]) == B("110")

    def test_cost_mode_survives_amplification_tie(self):
        # With X = {00, 11} and c = (-3, 2) the amplified all-ones
        # weights (-5, 5) value both vertices at 0, and a naive single
        # call would hand back 00, which does not minimize c.
        oracle = oracle_of("00", "11")
        start = default_start(oracle, cost=[-3, 2])
        assert start == B("11")

    def test_cost_mode_start_is_always_minimal(self):
        rng = random.Random(2024)
        for _ in range(100):
            n = rng.randint(1, 5)
            pool = list(all_bitstrings(n))
            members = rng.sample(pool, rng.randint(1, len(pool)))
            cost = [rng.randint(-4, 4) for _ in range(n)]
            start = default_start(ExplicitOracle(members), cost=cost)
            assert dot(cost, start) == min(dot(cost, x) for x in members)


class TestTraverseFrozen:
    def test_square_from_00(self):
        result = traverse(square(), start=B("00"))
        assert texts(result.listing) == ["00", "10", "11", "01"]
        assert result.complete and result.feasible and not result.stopped_early

    def test_square_call_trace(self):
        # Hand-checked against the oracle protocol: membership check is
        # one call, the initial scan of [1,2] costs two, and each
        # transition pays one move plus the window re-scans.
        result = traverse(square(), start=B("00"), record_stack=True)
        assert result.init_calls == 3
        assert [s.calls for s in result.steps] == [2, 2, 1, 0]
        assert result.total_calls == 3 + 5
        assert [s.stack for s in result.steps] == [
            ((1, 2, 1),),
            ((2, 2, 2),),
            ((1, 1, 1),),
            (),
        ]

    def test_triangle_from_110(self):
        result = traverse(oracle_of("110", "011", "101"), start=B("110"))
        assert texts(result.listing) == ["110", "011", "101"]

    def test_singleton_costs_init_only(self):
        result = traverse(oracle_of("101"))
        assert texts(result.listing) == ["101"]
        assert result.complete
        assert [s.calls for s in result.steps] == [0]
        assert result.total_calls == result.init_calls

    def test_empty_vertex_set_is_infeasible(self):
        result = traverse(ExplicitOracle([], n=4))
        assert not result.feasible and result.listing == [] and not result.complete

    def test_zero_length_strings(self):
        result = traverse(ExplicitOracle([BitString.zeros(0)], n=0))
        assert result.listing == [BitString.zeros(0)]
        assert result.complete


class TestStartValidation:
    def test_non_member_rejected(self):
        with pytest.raises(StartVertexError):
            traverse(oracle_of("110", "011"), start=B("111"))

    def test_length_mismatch_rejected(self):
        with pytest.raises(StartVertexError):
            traverse(square(), start=B("000"))

    def test_cost_mode_rejects_non_minimal_member(self):
        oracle = oracle_of("110", "011", "101")
        with pytest.raises(StartVertexError):
            traverse(oracle, start=B("110"), cost=[1, 0, 0])

    def test_cost_mode_accepts_any_cost_minimal_member(self):
        # Under c = (0, 1, 1) the vertices 110 and 101 cost 1, 011 costs 2.
        oracle = oracle_of("110", "011", "101")
        result = traverse(oracle, start=B("101"), cost=[0, 1, 1])
        assert set(texts(result.listing)) == {"110", "101"}
        assert result.listing[0] == B("101")


class TestTraverseProperties:
    def test_matches_reference_on_random_sets(self):
        rng = random.Random(1404)
        for _ in range(120):
            n = rng.randint(1, 6)
            pool = list(all_bitstrings(n))
            members = rng.sample(pool, rng.randint(1, len(pool)))
            start = rng.choice(members)
            got = traverse(ExplicitOracle(members), start=start).listing
            assert got == traverse_reference(members, start)
            assert set(got) == set(members)
            assert is_genlex(got)

    def test_matches_visited_set_bruteforce(self):
        rng = random.Random(77)
        for _ in range(60):
            n = rng.randint(1, 5)
            pool = [x.text() for x in all_bitstrings(n)]
            members = rng.sample(pool, rng.randint(1, len(pool)))
            start = rng.choice(members)
            got = texts(traverse(ExplicitOracle([B(m) for m in members]), start=B(start)).listing)
            assert got == bf.algorithm_p(members, start)

    def test_every_start_yields_a_genlex_hamilton_listing(self):
        members = [B(t) for t in ("000", "001", "011", "110", "111")]
        for start in members:
            got = traverse(ExplicitOracle(members), start=start).listing
            assert got[0] == start
            assert sorted(got) == sorted(members)
            assert is_genlex(got)

    def test_call_budget_per_visit(self):
        rng = random.Random(909)
        for _ in range(80):
            n = rng.randint(1, 7)
            pool = list(all_bitstrings(n))
            members = rng.sample(pool, rng.randint(1, len(pool)))
            result = traverse(ExplicitOracle(members), record_stack=True)
            assert result.init_calls <= call_budget(n)
            assert all(s.calls <= call_budget(n) for s in result.steps)

    def test_stack_snapshots_stay_disjoint_and_descending(self):
        rng = random.Random(31)
        for _ in range(40):
            n = rng.randint(1, 6)
            pool = list(all_bitstrings(n))
            members = rng.sample(pool, rng.randint(1, len(pool)))
            result = traverse(ExplicitOracle(members), record_stack=True)
            for step in result.steps:
                intervals = step.stack
                assert all(lo <= beta <= hi for lo, hi, beta in intervals)
                # top first: strictly increasing position ranges
                assert all(
                    intervals[i][1] < intervals[i + 1][0]
                    for i in range(len(intervals) - 1)
                )

    def test_cost_mode_visits_exactly_the_minima(self):
        rng = random.Random(5151)
        for _ in range(80):
            n = rng.randint(1, 5)
            pool = list(all_bitstrings(n))
            members = rng.sample(pool, rng.randint(1, len(pool)))
            cost = [rng.randint(-3, 3) for _ in range(n)]
            best = min(dot(cost, x) for x in members)
            minima = [x for x in members if dot(cost, x) == best]
            result = traverse(ExplicitOracle(members), cost=cost)
            assert sorted(result.listing) == sorted(minima)
            assert is_genlex(result.listing)
            assert result.listing == traverse_reference(minima, result.listing[0])


class TestVisitor:
    def test_early_stop(self):
        seen = []

        def stop_after_two(x):
            seen.append(x)
            return len(seen) < 2

        result = traverse(square(), start=B("00"), visitor=stop_after_two)
        assert texts(result.listing) == ["00", "10"]
        assert result.stopped_early and not result.complete

    def test_none_return_keeps_going(self):
        seen = []
        result = traverse(square(), start=B("00"), visitor=seen.append)
        assert result.complete and seen == result.listing


class TestTraverseReference:
    def test_frozen_examples(self):
        listing = traverse_reference(list(all_bitstrings(2)), B("00"))
        assert texts(listing) == ["00", "10", "11", "01"]
        listing = traverse_reference([B("110"), B("011"), B("101")], B("110"))
        assert texts(listing) == ["110", "011", "101"]

    def test_rejects_foreign_start(self):
        with pytest.raises(StartVertexError):
            traverse_reference([B("01")], B("10"))


class TestGreedyPath:
    @staticmethod
    def hypercube_neighbors(members):
        pool = set(members)

        def neighbors(x):
            return [y for i in range(1, len(x) + 1) if (y := x.flip(i)) in pool]

        return neighbors

    def test_square_matches_oracle_listing(self):
        members = list(all_bitstrings(2))
        path = greedy_path(self.hypercube_neighbors(members), B("00"))
        assert texts(path) == ["00", "10", "11", "01"]

    def test_greedy_can_strand_vertices(self):
        # From 101 the greedy walk runs 101, 001, 011 and dead-ends,
        # never reaching 000 or 100.
        members = [B(t) for t in ("000", "100", "101", "001", "011")]
        path = greedy_path(self.hypercube_neighbors(members), B("101"))
        assert texts(path) == ["101", "001", "011"]

    def test_full_hypercubes_always_complete(self):
        for n in range(1, 7):
            members = list(all_bitstrings(n))
            path = greedy_path(self.hypercube_neighbors(members), BitString.zeros(n))
            assert len(path) == len(members)
            assert is_genlex(path)
