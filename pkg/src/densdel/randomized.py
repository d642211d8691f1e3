"""Randomized proportional-sampling deletion with decomposition
preprocessing.

While the density of f exceeds c_f (1 + eps) rho, preprocess to that
threshold, sample one vertex with probability proportional to
f(v | V - v) / c(v), delete it, and repeat.  Every run ends with
residual density at most c_f (1 + eps) rho; the expected deleted cost
is at most c_f (1 + 1/eps) times the optimum.

Runs are reproducible: all sampling weights are exact rationals turned
into an integer cumulative table over their common denominator, and the
draw is a uniform integer from a seeded generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .decomposition import preprocess
from .errors import HypothesisViolated, InvalidCost, InvariantViolation
from .oracles import SupermodOracle, marginal
from .rational import Cost, total_cost


@dataclass(frozen=True)
class CfInput:
    value: Fraction


@dataclass(frozen=True)
class RandomDeletionRun:
    seed: int
    epsilon: Fraction
    cf: Fraction
    rho: Fraction
    threshold: Fraction
    trace: tuple  # (ground set size after preprocessing, vertex, weight)
    deleted: frozenset
    cost: Cost
    residual_density: Fraction


def marginal_weights(f: SupermodOracle, costs) -> dict:
    """weight(v) = f(v | V - v) / c(v) over the current ground set."""
    ground = f.ground
    weights = {}
    for v in sorted(ground):
        weights[v] = Fraction(marginal(f, v, ground - {v})) / costs[v].value
    return weights


def draw_weighted(weights: dict, rng: random.Random):
    """Exact proportional draw: scale the rational weights to integers
    over their common denominator and index with a uniform integer."""
    items = sorted((v, w) for v, w in weights.items() if w > 0)
    if not items:
        raise InvariantViolation("no positive sampling weight available")
    denom = lcm(*(w.denominator for _, w in items))
    scaled = [(v, w.numerator * (denom // w.denominator)) for v, w in items]
    total = sum(s for _, s in scaled)
    r = rng.randrange(total)
    acc = 0
    for v, s in scaled:
        acc += s
        if r < acc:
            return v, weights[v]
    raise InvariantViolation("weighted draw fell off the table")


def _density(f: SupermodOracle) -> Fraction:
    lam, _ = f.max_density()
    return lam


def random_delete(f: SupermodOracle, costs, rho, epsilon, cf, seed) -> RandomDeletionRun:
    rho = Fraction(rho)
    epsilon = Fraction(epsilon)
    cf_value = cf.value if hasattr(cf, "value") else Fraction(cf)
    if epsilon <= 0:
        from .errors import InvalidEpsilon

        raise InvalidEpsilon("epsilon must be positive")
    cost_map = {}
    for v in f.ground:
        c = costs[v] if isinstance(costs[v], Cost) else Cost(costs[v])
        if c.is_infinite():
            raise InvalidCost(f"vertex {v} has infinite cost")
        cost_map[v] = c
    threshold = cf_value * (1 + epsilon) * rho

    deleted = set()
    # Zero-cost vertices are free; remove them before sampling (the
    # sampling weight divides by the cost).
    free = sorted(v for v in f.ground if cost_map[v].value == 0)
    if free:
        deleted.update(free)
        f = f.restrict(f.ground - set(free))

    rng = random.Random(seed)
    trace = []
    current = f
    while True:
        lam = _density(current)
        if lam <= threshold:
            break
        pre = preprocess(current, threshold)
        if not pre.kept:
            raise InvariantViolation(
                "preprocessing emptied the ground set above the threshold"
            )
        current = pre.oracle
        weights = marginal_weights(current, cost_map)
        v, w = draw_weighted(weights, rng)
        trace.append((len(current.ground), v, w))
        deleted.add(v)
        current = current.restrict(current.ground - {v})

    deleted = frozenset(deleted)
    res_lam = _density(f.restrict(f.ground - (deleted & f.ground)))
    if res_lam > threshold:
        raise InvariantViolation("run finished above the density threshold")
    return RandomDeletionRun(
        seed=seed,
        epsilon=epsilon,
        cf=cf_value,
        rho=rho,
        threshold=threshold,
        trace=tuple(trace),
        deleted=deleted,
        cost=total_cost(cost_map, deleted),
        residual_density=res_lam,
    )


def check_marginal_mass(f: SupermodOracle, rho, epsilon, cf, feasible_set) -> bool:
    """Whether sum over X of f(u|V-u) >= sum over V of f(u|V-u) divided
    by c_f (1 + 1/eps), for a feasible deletion set X.

    Raises HypothesisViolated unless every vertex has last-marginal at
    least c_f (1 + eps) rho.
    """
    rho = Fraction(rho)
    epsilon = Fraction(epsilon)
    cf_value = cf.value if hasattr(cf, "value") else Fraction(cf)
    ground = f.ground
    margins = {v: marginal(f, v, ground - {v}) for v in ground}
    floor = cf_value * (1 + epsilon) * rho
    for v, mv in margins.items():
        if mv < floor:
            raise HypothesisViolated(
                f"vertex {v} has last-marginal {mv} below {floor}"
            )
    lhs = sum((margins[v] for v in feasible_set), Fraction(0))
    rhs = sum(margins.values(), Fraction(0)) / (cf_value * (1 + 1 / epsilon))
    return lhs >= rhs
