"""Evaluation oracles for normalized non-decreasing supermodular functions.

Concrete families: induced edge count of a multigraph, induced edge
count of a hypergraph, p-mean degree powers, and generic callable-backed
functions (used by the cover reductions and the matroid layer).

Oracles are immutable.  Restriction and contraction return new oracles;
for the edge-count family both stay in the family (a contracted edge
becomes a smaller hyperedge), which keeps excess maximization on the
max-flow fast path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    InvalidHyperedge,
    InvalidMarginal,
    InvalidOracle,
    TooLarge,
    UnsupportedSelfLoop,
    ParseError,
)
from .densest import excess_max_groups, merge_groups, search_max_density
from .graph import MultiGraph


def size_cap(default=16) -> int:
    env = os.environ.get("DD_SIZE_CAP")
    return int(env) if env else default


class Hypergraph:
    __slots__ = ("n", "edges")

    def __init__(self, n, edges):
        self.n = int(n)
        es = []
        for e in edges:
            verts = tuple(e)
            if not verts:
                raise InvalidHyperedge("empty hyperedge")
            for v in verts:
                if not (0 <= v < self.n):
                    raise InvalidHyperedge(f"vertex {v} outside [0,{self.n})")
            es.append(verts)
        self.edges = tuple(es)

    @property
    def rank(self):
        return max((len(set(e)) for e in self.edges), default=1)


def parse_hypergraph(text: str) -> Hypergraph:
    """Format: "n m" then m lines "k v1 ... vk"."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty hypergraph instance")
    n, m = map(int, lines[0].split())
    if len(lines) < 1 + m:
        raise ParseError("fewer hyperedge lines than declared")
    edges = []
    for ln in lines[1 : 1 + m]:
        parts = list(map(int, ln.split()))
        if not parts or len(parts) != parts[0] + 1:
            raise ParseError(f"bad hyperedge line {ln!r}")
        edges.append(tuple(parts[1:]))
    return Hypergraph(n, edges)


def dump_hypergraph(h: Hypergraph) -> str:
    out = [f"{h.n} {len(h.edges)}"]
    for e in h.edges:
        out.append(" ".join([str(len(e))] + [str(v) for v in e]))
    return "\n".join(out) + "\n"


class SupermodOracle:
    """Base evaluation oracle.  eval() must be normalized (eval(set())==0),
    non-decreasing, and supermodular; algorithms assume it, tests spot-check."""

    ground: frozenset
    fast_excess = False
    denom_bound = 1  # all values are multiples of 1/denom_bound
    cf_bound = None  # analytic c_f bound when the family has one

    def eval(self, subset) -> Fraction:
        raise NotImplementedError

    def excess_max(self, rho: Fraction, within=None):
        """(max over Z subseteq within of eval(Z) - rho|Z|, maximal maximizer).

        Generic route enumerates subsets; families with a flow gadget
        override (fast_excess = True).
        """
        within = self.ground if within is None else frozenset(within)
        if len(within) > size_cap():
            raise TooLarge(f"exhaustive excess over {len(within)} elements")
        rho = Fraction(rho)
        elems = sorted(within)
        best = Fraction(0)
        best_sets = [frozenset()]
        for r in range(1, len(elems) + 1):
            for combo in combinations(elems, r):
                z = frozenset(combo)
                val = self.eval(z) - rho * len(z)
                if val > best:
                    best = val
                    best_sets = [z]
                elif val == best:
                    best_sets.append(z)
        maximal = frozenset().union(*best_sets)
        if self.eval(maximal) - rho * len(maximal) != best:
            raise InvalidOracle("union of maximizers is not a maximizer")
        return best, maximal

    def restrict(self, keep) -> "SupermodOracle":
        return _RestrictedOracle(self, frozenset(keep))

    def contract(self, onto) -> "SupermodOracle":
        onto = frozenset(onto)
        if not onto:
            return self
        return _ContractedOracle(self, onto)

    def max_density(self):
        """(lambda* = max over nonempty S of eval(S)/|S|, maximal witness)."""
        if not self.ground:
            return Fraction(0), frozenset()
        top = self.eval(self.ground)
        lam, wit = search_max_density(
            self.excess_max,
            max(top, Fraction(1)),
            self.denom_bound * len(self.ground),
        )
        return lam, wit


def marginal(f: SupermodOracle, v, subset) -> Fraction:
    """f(v|S) = f(S+v) - f(S); requires v not in S."""
    subset = frozenset(subset)
    if v in subset:
        raise InvalidMarginal(f"{v} already in the base set")
    return f.eval(subset | {v}) - f.eval(subset)


class _RestrictedOracle(SupermodOracle):
    def __init__(self, base, keep):
        if not keep <= base.ground:
            raise InvalidOracle("restriction outside the ground set")
        self.base = base
        self.ground = keep
        self.denom_bound = base.denom_bound
        self.fast_excess = base.fast_excess

    def eval(self, subset):
        subset = frozenset(subset)
        if not subset <= self.ground:
            raise InvalidOracle("eval outside restricted ground set")
        return self.base.eval(subset)

    def excess_max(self, rho, within=None):
        within = self.ground if within is None else frozenset(within) & self.ground
        return self.base.excess_max(rho, within)


class _ContractedOracle(SupermodOracle):
    """f_{/U}(X) = f(U | X) - f(U) on ground set V - U."""

    def __init__(self, base, onto):
        self.base = base
        self.onto = onto
        self.ground = base.ground - onto
        self.denom_bound = base.denom_bound
        self._f_onto = base.eval(onto)

    def eval(self, subset):
        return self.base.eval(frozenset(subset) | self.onto) - self._f_onto


class EdgeCountOracle(SupermodOracle):
    """f(S) = total weight of (hyper)edges fully inside S.

    Multigraph edges are weight-1 groups; a self-loop is the singleton
    group of its vertex.  Contraction replaces each group by its part
    outside the contracted set, so the family is closed under both
    restriction and contraction and excess maximization is one max-flow.
    """

    fast_excess = True

    def __init__(self, nv, groups, ground=None, cf_bound=None):
        self.nv = nv
        self.groups = merge_groups(groups)
        self.ground = frozenset(range(nv)) if ground is None else frozenset(ground)
        self.cf_bound = cf_bound

    def eval(self, subset):
        s = frozenset(subset)
        if not s <= self.ground:
            raise InvalidOracle("eval outside ground set")
        return Fraction(sum(w for verts, w in self.groups if verts <= s))

    def excess_max(self, rho, within=None):
        within = self.ground if within is None else frozenset(within)
        return excess_max_groups(self.nv, self.groups, Fraction(rho), within)

    def restrict(self, keep):
        keep = frozenset(keep)
        if not keep <= self.ground:
            raise InvalidOracle("restriction outside the ground set")
        groups = [(verts, w) for verts, w in self.groups if verts <= keep]
        return EdgeCountOracle(self.nv, groups, keep, self.cf_bound)

    def contract(self, onto):
        onto = frozenset(onto)
        if not onto:
            return self
        groups = []
        for verts, w in self.groups:
            rest = verts - onto
            if rest and verts <= self.ground:
                groups.append((rest, w))
        return EdgeCountOracle(self.nv, groups, self.ground - onto, None)


def graph_oracle(g: MultiGraph) -> EdgeCountOracle:
    """f(S) = |E(S)|; analytic c_f bound 2."""
    return EdgeCountOracle(g.n, ((frozenset((a, b)), 1) for a, b in g.edges), cf_bound=Fraction(2))


def hypergraph_oracle(h: Hypergraph) -> EdgeCountOracle:
    """f(S) = number of hyperedges inside S; analytic c_f bound = rank."""
    return EdgeCountOracle(
        h.n, ((frozenset(e), 1) for e in h.edges), cf_bound=Fraction(h.rank)
    )


class PMeanOracle(SupermodOracle):
    """f(S) = sum over u in S of d_S(u)^p (plain edges only)."""

    fast_excess = False

    def __init__(self, g: MultiGraph, p: int):
        if p < 1 or p != int(p):
            raise InvalidOracle("p must be a positive integer")
        if any(a == b for (a, b) in g.edges):
            raise UnsupportedSelfLoop("p-mean degrees are defined on loopless graphs")
        self.g = g
        self.p = int(p)
        self.ground = frozenset(range(g.n))
        self.cf_bound = Fraction((p + 1) ** p)

    def eval(self, subset):
        s = frozenset(subset)
        if not s <= self.ground:
            raise InvalidOracle("eval outside ground set")
        deg = {v: 0 for v in s}
        for (a, b) in self.g.edges:
            if a in s and b in s:
                deg[a] += 1
                deg[b] += 1
        return Fraction(sum(d**self.p for d in deg.values()))


def pmean_oracle(g: MultiGraph, p: int) -> PMeanOracle:
    return PMeanOracle(g, p)


class FunctionOracle(SupermodOracle):
    """Wrap an arbitrary set function given as a callable."""

    def __init__(self, ground, fn, denom_bound=1):
        self.ground = frozenset(ground)
        self.fn = fn
        self.denom_bound = denom_bound

    def eval(self, subset):
        return Fraction(self.fn(frozenset(subset)))


@dataclass(frozen=True)
class CfBound:
    value: Fraction
    provenance: str  # "analytic" or "bruteforce"


def cf_bruteforce(f: SupermodOracle, cap=None) -> CfBound:
    """Exact c_f = max over S with f(S) > 0 of sum_u f(u|S-u) / f(S).

    Sets with f(S) = 0 are skipped; returns 1 when none qualify.
    """
    cap = size_cap(14) if cap is None else cap
    elems = sorted(f.ground)
    if len(elems) > cap:
        raise TooLarge(f"c_f brute force over {len(elems)} elements")
    values = {}
    for r in range(len(elems) + 1):
        for combo in combinations(elems, r):
            values[frozenset(combo)] = f.eval(frozenset(combo))
    best = Fraction(1)
    for s, fs in values.items():
        if fs <= 0 or not s:
            continue
        tot = sum(fs - values[s - {u}] for u in s)
        best = max(best, Fraction(tot, 1) / fs)
    return CfBound(value=best, provenance="bruteforce")
