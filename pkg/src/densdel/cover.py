"""Reductions between density deletion and submodular cover, plus the
greedy cover algorithm with Wolsey's logarithmic guarantee.

Deletion-to-cover: with g(Z) = max over Y subseteq Z of f(Y) - rho|Y|
(the excess function, which is supermodular in the complement sense we
need), define h(X) = g(V) - g(V - X).  h is monotone submodular,
normalized, and h(X) = h(V) exactly when deleting X brings the density
of f down to rho or below.  We scale by the denominator of rho so h is
integer-valued.

Cover-to-deletion: given monotone submodular integer h, the function
f(X) = h(V) - h(V - X) + |X| is normalized non-decreasing supermodular,
and deleting X achieves density <= 1 for f iff h(X) = h(V).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidCost, InvalidOracle
from .oracles import FunctionOracle, SupermodOracle, size_cap
from .rational import Cost, total_cost


@dataclass(frozen=True)
class SubmodCoverInstance:
    ground: frozenset
    h: object  # callable frozenset -> int (monotone submodular, h(empty)=0)
    costs: dict  # vertex -> Cost

    def target(self):
        return self.h(self.ground)


class ReducedH:
    """h(X) = q * (excess(V) - excess(V - X)) for rho = p/q; integer-valued."""

    def __init__(self, f: SupermodOracle, rho: Fraction):
        self.f = f
        self.rho = Fraction(rho)
        self.q = self.rho.denominator * f.denom_bound
        self._cache = {}
        self._g_full = self._g(f.ground)

    def _g(self, subset):
        subset = frozenset(subset)
        if subset not in self._cache:
            val, _ = self.f.excess_max(self.rho, subset)
            self._cache[subset] = val
        return self._cache[subset]

    def __call__(self, x):
        x = frozenset(x)
        val = self.q * (self._g_full - self._g(self.f.ground - x))
        if val.denominator != 1:
            raise InvalidOracle("scaled cover function is not integer-valued")
        return int(val)


def reduce_dd_to_cover(f: SupermodOracle, rho, costs) -> SubmodCoverInstance:
    rho = Fraction(rho)
    if not f.fast_excess and len(f.ground) > size_cap():
        from .errors import TooLarge

        raise TooLarge("exhaustive excess evaluation over a large ground set")
    cost_map = {v: Cost(costs[v]) if not isinstance(costs[v], Cost) else costs[v]
                for v in f.ground}
    return SubmodCoverInstance(ground=f.ground, h=ReducedH(f, rho), costs=cost_map)


def reduce_cover_to_dd(inst: SubmodCoverInstance):
    """Return (supermodular oracle f, threshold rho=1) so that deleting X
    brings f's density to <= rho iff X covers inst."""
    target = inst.target()
    ground = inst.ground

    def fn(x):
        return target - inst.h(ground - x) + len(x)

    return FunctionOracle(ground, fn), Fraction(1)


@dataclass(frozen=True)
class GreedyResult:
    chosen: frozenset
    cost: Cost
    finite: bool
    order: tuple  # vertices in pick order


def greedy_cover(inst: SubmodCoverInstance) -> GreedyResult:
    """Wolsey greedy: repeatedly pick argmax h(v|F)/c(v) until h(F)=h(V).

    Zero-cost vertices with positive marginal are taken eagerly.
    Ties break to the lowest vertex id; infinite-cost vertices are used
    only when no finite-cost vertex has positive marginal.
    """
    target = inst.target()
    chosen = set()
    order = []
    current = inst.h(frozenset())
    while current < target:
        remaining = sorted(inst.ground - chosen)
        margins = {}
        for v in remaining:
            mv = inst.h(frozenset(chosen) | {v}) - current
            if mv < 0:
                raise InvalidOracle("cover function is not monotone")
            margins[v] = mv
        picked = None
        for v in remaining:
            c = inst.costs[v]
            if not c.is_infinite() and c.value == 0 and margins[v] > 0:
                picked = v
                break
        if picked is None:
            best_ratio = None
            for v in remaining:
                c = inst.costs[v]
                if c.is_infinite() or c.value == 0 or margins[v] == 0:
                    continue
                ratio = Fraction(margins[v]) / c.value
                if best_ratio is None or ratio > best_ratio:
                    best_ratio = ratio
                    picked = v
        if picked is None:
            for v in remaining:
                if margins[v] > 0:
                    picked = v
                    break
        if picked is None:
            raise InvalidOracle("no vertex increases coverage but target unmet")
        chosen.add(picked)
        order.append(picked)
        current += margins[picked]
    chosen = frozenset(chosen)
    cost = total_cost(inst.costs, chosen)
    return GreedyResult(chosen=chosen, cost=cost, finite=not cost.is_infinite(),
                        order=tuple(order))


def max_singleton_coverage(inst: SubmodCoverInstance) -> int:
    return max((inst.h(frozenset((v,))) for v in inst.ground), default=0)
