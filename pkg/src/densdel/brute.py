"""Exhaustive reference oracles.

Everything here enumerates subsets directly and shares no machinery
with the fast algorithms: densest subgraph values come from a numpy
table of induced edge counts over all vertex subsets, deletion optima
from a subset-OR sweep over that table, and set-cover optima from plain
enumeration of families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import TooLarge
from .graph import MultiGraph
from .oracles import SupermodOracle
from .rational import Cost, total_cost

MAX_GRAPH_N = 20
MAX_ORACLE_N = 12


@dataclass(frozen=True)
class BruteResult:
    value: object  # Fraction (density) or Cost (deletion / cover optimum)
    witnesses: tuple  # all optimal subsets, lexicographic by bitmask
    feasible: bool = True


def _mask_set(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if (mask >> i) & 1)


def edge_count_table(g: MultiGraph) -> np.ndarray:
    """table[mask] = number of edges with both endpoints in mask."""
    if g.n > MAX_GRAPH_N:
        raise TooLarge(f"subset table over {g.n} vertices")
    masks = np.arange(1 << g.n, dtype=np.int64)
    table = np.zeros(1 << g.n, dtype=np.int64)
    mult = {}
    for a, b in g.edges:
        key = (min(a, b), max(a, b))
        mult[key] = mult.get(key, 0) + 1
    for (a, b), m in mult.items():
        inside = ((masks >> a) & 1) & ((masks >> b) & 1)
        table += m * inside
    return table


def popcount_table(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        pc += (masks >> b) & 1
    return pc


def brute_densest(g: MultiGraph) -> BruteResult:
    """Exact max_{nonempty S} |E(S)|/|S| with every maximizer listed."""
    if g.n > 16:
        raise TooLarge(f"densest enumeration over {g.n} vertices")
    if g.n == 0:
        return BruteResult(value=Fraction(0), witnesses=())
    table = edge_count_table(g)
    pc = popcount_table(g.n)
    best = Fraction(0)
    winners = []
    for mask in range(1, 1 << g.n):
        dens = Fraction(int(table[mask]), int(pc[mask]))
        if dens > best:
            best = dens
            winners = [mask]
        elif dens == best:
            winners.append(mask)
    union = 0
    for m in winners:
        union |= m
    if winners and Fraction(int(table[union]), int(pc[union])) != best:
        raise AssertionError("union of maximizers is not a maximizer")
    return BruteResult(value=best, witnesses=tuple(_mask_set(m) for m in winners))


def _any_dense_subset(g: MultiGraph, rho: Fraction) -> np.ndarray:
    """over[mask] = whether some subset of mask has density > rho."""
    table = edge_count_table(g)
    pc = popcount_table(g.n)
    q, p = rho.denominator, rho.numerator
    bad = (q * table) > (p * pc)
    over = bad.reshape([2] * g.n) if g.n else bad.copy()
    for axis in range(g.n):
        hi = [slice(None)] * g.n
        lo = [slice(None)] * g.n
        hi[axis] = 1
        lo[axis] = 0
        over[tuple(hi)] |= over[tuple(lo)]
    return over.reshape(-1)


def brute_opt_deletion(g: MultiGraph, costs, rho) -> BruteResult:
    """Minimum-cost deletion set bringing density to rho or below,
    enumerated over all subsets of the finite-cost vertices."""
    rho = Fraction(rho)
    if g.n > MAX_GRAPH_N:
        raise TooLarge(f"deletion enumeration over {g.n} vertices")
    cost_map = {v: c if isinstance(c, Cost) else Cost(c)
                for v, c in enumerate(costs)}
    finite = [v for v in range(g.n) if not cost_map[v].is_infinite()]
    if len(finite) > MAX_GRAPH_N:
        raise TooLarge(f"{len(finite)} finite-cost deletion candidates")
    over = _any_dense_subset(g, rho)
    full = (1 << g.n) - 1
    best = None
    winners = []
    for r in range(len(finite) + 1):
        for combo in combinations(finite, r):
            xmask = 0
            for v in combo:
                xmask |= 1 << v
            if over[full & ~xmask]:
                continue
            c = total_cost(cost_map, combo)
            if best is None or c < best:
                best = c
                winners = [frozenset(combo)]
            elif c == best:
                winners.append(frozenset(combo))
    if best is None:
        return BruteResult(value=Cost.infinite(), witnesses=(), feasible=False)
    return BruteResult(value=best, witnesses=tuple(winners))


def brute_oracle_densest(f: SupermodOracle) -> BruteResult:
    elems = sorted(f.ground)
    if len(elems) > MAX_ORACLE_N:
        raise TooLarge(f"oracle enumeration over {len(elems)} elements")
    best = Fraction(0)
    winners = []
    for r in range(1, len(elems) + 1):
        for combo in combinations(elems, r):
            s = frozenset(combo)
            dens = f.eval(s) / len(s)
            if dens > best:
                best = dens
                winners = [s]
            elif dens == best:
                winners.append(s)
    return BruteResult(value=best, witnesses=tuple(winners))


def brute_oracle_opt_deletion(f: SupermodOracle, costs, rho) -> BruteResult:
    """Generic-oracle deletion optimum by double enumeration."""
    rho = Fraction(rho)
    elems = sorted(f.ground)
    if len(elems) > MAX_ORACLE_N:
        raise TooLarge(f"oracle enumeration over {len(elems)} elements")
    cost_map = {v: (costs[v] if isinstance(costs[v], Cost) else Cost(costs[v]))
                for v in elems}

    subsets = [frozenset(c) for r in range(len(elems) + 1)
               for c in combinations(elems, r)]
    values = {s: f.eval(s) for s in subsets}

    def feasible(deleted):
        keep = frozenset(elems) - deleted
        return all(values[s] <= rho * len(s) for s in subsets if s <= keep and s)

    best = None
    winners = []
    for deleted in subsets:
        if any(cost_map[v].is_infinite() for v in deleted):
            continue
        if not feasible(deleted):
            continue
        c = total_cost(cost_map, deleted)
        if best is None or c < best:
            best = c
            winners = [deleted]
        elif c == best:
            winners.append(deleted)
    if best is None:
        return BruteResult(value=Cost.infinite(), witnesses=(), feasible=False)
    return BruteResult(value=best, witnesses=tuple(winners))


def brute_set_cover(sc) -> BruteResult:
    n_s = len(sc.sets)
    if n_s > 16:
        raise TooLarge(f"cover enumeration over {n_s} sets")
    universe = frozenset(range(sc.n_universe))
    best = None
    winners = []
    for mask in range(1 << n_s):
        family = [i for i in range(n_s) if (mask >> i) & 1]
        covered = frozenset().union(*(sc.sets[i] for i in family)) if family else frozenset()
        if covered != universe:
            continue
        c = total_cost(dict(enumerate(sc.costs)), family)
        if c.is_infinite():
            continue
        if best is None or c < best:
            best = c
            winners = [frozenset(family)]
        elif c == best:
            winners.append(frozenset(family))
    if best is None:
        return BruteResult(value=Cost.infinite(), witnesses=(), feasible=False)
    return BruteResult(value=best, witnesses=tuple(winners))
