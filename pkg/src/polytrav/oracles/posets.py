"""Poset ideal and antichain oracles via exact flow reductions.

Ideals (down-closed sets): minimizing a linear weight over the ideals
containing P1 and avoiding P0 is a maximum-weight-closure problem on
the elements that remain undecided, solved by one min cut.

Antichains: after removing everything the prescription decides, only
negative-weight elements can improve a minimizer, and maximizing their
total weight over antichains is a weighted Dilworth problem, solved as
a minimum flow with node lower bounds (two max-flow passes).
"""

from __future__ import annotations

from typing import Optional

from ..bitstring import BitString
from ..instances import Poset
from ..lop import EMPTY_PRESCRIPTION, LopOracle, Prescription
from .flow import FlowNetwork


class IdealOracle(LopOracle):
    """Minimum-weight order ideal with prescription."""

    def __init__(self, poset: Poset):
        self.poset = poset
        self.n = poset.n

    def solve(self, weights, fix: Prescription = EMPTY_PRESCRIPTION) -> Optional[BitString]:
        if len(weights) != self.n:
            raise ValueError("weight vector length mismatch")
        forced = self.poset.down_set(fix.ones) if fix.ones else set()
        if forced & fix.zeros:
            return None
        excluded = self.poset.up_set(fix.zeros) if fix.zeros else set()
        middle = [
            v for v in range(1, self.n + 1) if v not in forced and v not in excluded
        ]
        # Max-weight closure on the undecided elements, profit -w.  Any
        # predecessor of an undecided element is undecided or forced,
        # so gluing the chosen closure onto the forced down-set always
        # yields an ideal.
        profit = {v: -weights[v - 1] for v in middle}
        index = {v: k + 2 for k, v in enumerate(middle)}
        net = FlowNetwork(len(middle) + 2)
        source, sink = 0, 1
        infinite = sum(p for p in profit.values() if p > 0) + 1
        for v in middle:
            if profit[v] > 0:
                net.add_edge(source, index[v], profit[v])
            elif profit[v] < 0:
                net.add_edge(index[v], sink, -profit[v])
        for v in middle:
            for u in middle:
                if self.poset.less(u, v):
                    net.add_edge(index[v], index[u], infinite)
        net.max_flow(source, sink)
        reachable = net.residual_reachable(source)
        closure = [v for v in middle if index[v] in reachable]
        return BitString.from_support(self.n, sorted(forced) + closure)


class AntichainOracle(LopOracle):
    """Minimum-weight antichain with prescription."""

    def __init__(self, poset: Poset):
        self.poset = poset
        self.n = poset.n

    def solve(self, weights, fix: Prescription = EMPTY_PRESCRIPTION) -> Optional[BitString]:
        if len(weights) != self.n:
            raise ValueError("weight vector length mismatch")
        forced = sorted(fix.ones)
        for k, a in enumerate(forced):
            for b in forced[k + 1 :]:
                if self.poset.comparable(a, b):
                    return None
        survivors = [
            v
            for v in range(1, self.n + 1)
            if weights[v - 1] < 0
            and v not in fix.zeros
            and v not in fix.ones
            and not any(self.poset.comparable(v, a) for a in forced)
        ]
        chosen = self._heaviest_antichain(survivors, weights)
        return BitString.from_support(self.n, forced + chosen)

    def _heaviest_antichain(self, survivors: list[int], weights) -> list[int]:
        """Maximize the demands p_v = -w_v > 0 over antichains.

        Minimum flow with node lower bounds: each element is an arc
        from its in-node to its out-node demanding p_v flow, chains are
        wired top to bottom, and a min flow decomposes into the fewest
        weighted chains covering every demand; the dual cut, read off
        the final residual as in/out pairs straddling the t-side, is a
        heaviest antichain.
        """
        if not survivors:
            return []
        demand = {v: -weights[v - 1] for v in survivors}
        source, sink, super_source, super_sink = 0, 1, 2, 3
        node_in = {v: 4 + 2 * k for k, v in enumerate(survivors)}
        node_out = {v: 5 + 2 * k for k, v in enumerate(survivors)}
        net = FlowNetwork(4 + 2 * len(survivors))
        infinite = sum(demand.values()) + 1
        for v in survivors:
            net.add_edge(node_in[v], node_out[v], infinite)
            net.add_edge(super_source, node_out[v], demand[v])
            net.add_edge(node_in[v], super_sink, demand[v])
            net.add_edge(source, node_in[v], infinite)
            net.add_edge(node_out[v], sink, infinite)
        for u in survivors:
            for v in survivors:
                if self.poset.less(v, u):
                    net.add_edge(node_out[u], node_in[v], infinite)
        circulation = net.add_edge(sink, source, infinite)
        saturated = net.max_flow(super_source, super_sink)
        assert saturated == sum(demand.values()), "demand routing must succeed"
        net.disable(circulation)
        net.max_flow(sink, source)
        on_sink_side = net.residual_reachable(sink)
        return [
            v
            for v in survivors
            if node_in[v] not in on_sink_side and node_out[v] in on_sink_side
        ]


def poset_ideal_oracle(poset: Poset) -> LopOracle:
    return IdealOracle(poset)


def poset_antichain_oracle(poset: Poset) -> LopOracle:
    return AntichainOracle(poset)
