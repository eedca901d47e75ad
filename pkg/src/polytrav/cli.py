"""Command-line front end.

Streams one object per line on stdout; everything else (statistics,
verification reports, error diagnostics) goes to stderr.  Exit status:
0 on success, 1 when --verify finds a violation, 2 on unusable input
(malformed file, bad flags, infeasible instance, non-0/1 polytope).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bitstring import BitString, dot, listing_cost
from .engine import TraversalResult, traverse
from .formats import (
    InstanceFormatError,
    load_matroid,
    parse_explicit,
    parse_graph,
    parse_polytope,
    parse_poset,
)
from .lp import NotZeroOnePolytopeError, lp_oracle
from .oracles import (
    InstanceTooLargeError,
    explicit_oracle,
    forest_oracle,
    matching_oracle,
    matroid_oracle,
    poset_antichain_oracle,
    poset_ideal_oracle,
    spanning_tree_oracle,
)
from .verify import (
    audit_traversal,
    connected_difference_flip,
    count_oracle_calls,
    edge_exchange_flip,
    matching_flip,
    short_alternating_path_flip,
    toggle_or_exchange_flip,
)


class _Job:
    """Everything resolved from the subcommand and instance file."""

    def __init__(self, oracle, flip_checker=None, expected=None, forced_cost=None):
        self.oracle = oracle
        self.flip_checker = flip_checker
        self.expected = expected
        self.forced_cost = forced_cost


def _prepare(args) -> _Job:
    text = Path(args.instance).read_text()
    kind = args.subcommand
    if kind == "explicit":
        members = parse_explicit(text)
        return _Job(explicit_oracle(members), expected=members)
    if kind == "spanning-trees":
        return _Job(spanning_tree_oracle(parse_graph(text)), edge_exchange_flip)
    if kind == "forests":
        return _Job(forest_oracle(parse_graph(text)), toggle_or_exchange_flip)
    if kind == "matroid-bases":
        return _Job(matroid_oracle(load_matroid(args.instance), True), edge_exchange_flip)
    if kind == "matroid-independent":
        return _Job(
            matroid_oracle(load_matroid(args.instance), False), toggle_or_exchange_flip
        )
    if kind == "matchings":
        graph = parse_graph(text)
        checker = (
            matching_flip(graph)
            if getattr(args, "cost", None)
            else short_alternating_path_flip(graph)
        )
        return _Job(matching_oracle(graph), checker)
    if kind == "max-matchings":
        graph = parse_graph(text)
        oracle = matching_oracle(graph)
        return _Job(
            oracle, matching_flip(graph), forced_cost=[-1] * oracle.n
        )
    if kind == "ideals":
        poset = parse_poset(text)
        return _Job(poset_ideal_oracle(poset), connected_difference_flip(poset))
    if kind == "antichains":
        poset = parse_poset(text)
        return _Job(poset_antichain_oracle(poset), connected_difference_flip(poset))
    if kind == "vertices":
        return _Job(lp_oracle(parse_polytope(text)))
    raise InstanceFormatError(f"unknown subcommand: {kind}")


def _parse_cost(spec: str, n: int) -> list[int]:
    try:
        cost = [int(f) for f in spec.split(",")]
    except ValueError:
        raise ValueError(f"cost must be comma-separated integers, got {spec!r}")
    if len(cost) != n:
        raise ValueError(f"cost has {len(cost)} entries; instance has {n} positions")
    return cost


def _emit(vertex: BitString, sets: bool, out) -> None:
    if sets:
        out.write(f"{vertex.text()}\t{','.join(map(str, vertex.support()))}\n")
    else:
        out.write(vertex.text() + "\n")
    out.flush()


def _expected_for_verify(
    job: _Job, result: TraversalResult, cost: Optional[Sequence[int]]
):
    # Completeness is only checkable against the explicit member list,
    # and only when the run was not truncated; otherwise the audit
    # certifies the emitted prefix on its own terms.
    if job.expected is not None and not result.stopped_early:
        if cost is None:
            return job.expected
        best = min(dot(cost, x) for x in job.expected)
        return [x for x in job.expected if dot(cost, x) == best]
    return result.listing


def _print_stats(result: TraversalResult, err) -> None:
    stats = count_oracle_calls(result)
    err.write(f"objects: {len(result.listing)}\n")
    if result.listing:
        err.write(f"listing cost: {listing_cost(result.listing)}\n")
    err.write(f"initialization calls: {stats.init_calls}\n")
    err.write(f"max calls per visit: {stats.max_calls}\n")
    err.write(f"mean calls per visit: {stats.mean_calls:.3f}\n")
    err.write(f"per-visit budget: {stats.budget}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polytrav",
        description="Stream 0/1-polytope vertices as a genlex Gray code.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    plans = [
        ("explicit", "explicit vertex set file, one bitstring per line", True),
        ("spanning-trees", "spanning trees of a graph", True),
        ("forests", "forests of a graph", True),
        ("matroid-bases", "bases of a matroid", True),
        ("matroid-independent", "independent sets of a matroid", True),
        ("matchings", "matchings of a graph", True),
        ("max-matchings", "maximum matchings of a graph", False),
        ("ideals", "down-closed sets of a poset", True),
        ("antichains", "antichains of a poset", True),
        ("vertices", "vertices of an inequality-description polytope", True),
    ]
    for name, help_text, costed in plans:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("instance", help="instance file path")
        if costed:
            p.add_argument(
                "--cost",
                help="comma-separated integer costs; restricts the output "
                "to cost-minimal objects",
            )
        p.add_argument("--start", help="bitstring to start the listing from")
        p.add_argument(
            "--limit", type=int, help="emit only the first K objects", metavar="K"
        )
        p.add_argument(
            "--verify",
            action="store_true",
            help="audit the finished listing and fail on any violation",
        )
        p.add_argument(
            "--stats", action="store_true", help="print run statistics to stderr"
        )
        p.add_argument(
            "--sets",
            action="store_true",
            help="append the 1-based element indices to each line",
        )
        p.add_argument(
            "--report",
            metavar="DIR",
            help="render figures and a summary into the directory",
        )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out, err = sys.stdout, sys.stderr

    if args.limit is not None and args.limit < 1:
        err.write("error: --limit must be at least 1\n")
        return 2

    try:
        job = _prepare(args)
    except (InstanceFormatError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"error: cannot read instance: {exc}\n")
        return 2

    try:
        cost = job.forced_cost
        if getattr(args, "cost", None):
            cost = _parse_cost(args.cost, job.oracle.n)
        start = BitString.from_text(args.start) if args.start else None

        emitted = 0

        def visitor(vertex: BitString) -> Optional[bool]:
            nonlocal emitted
            _emit(vertex, args.sets, out)
            emitted += 1
            if args.limit is not None and emitted >= args.limit:
                return False
            return None

        result = traverse(job.oracle, start=start, visitor=visitor, cost=cost)
    except (ValueError, NotZeroOnePolytopeError, InstanceTooLargeError) as exc:
        err.write(f"error: {exc}\n")
        return 2

    if not result.feasible:
        err.write("error: infeasible instance, nothing to list\n")
        return 2

    if args.stats:
        _print_stats(result, err)
    if args.report:
        from .report import render_report

        title = f"{args.subcommand} {Path(args.instance).name}"
        for path in render_report(result, args.report, title):
            err.write(f"report: {path}\n")
    if args.verify:
        expected = _expected_for_verify(job, result, cost)
        report = audit_traversal(result.listing, expected, job.flip_checker)
        for line in report.lines():
            err.write(line + "\n")
        if not report.ok:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
