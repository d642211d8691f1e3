"""Exact densest-subgraph machinery.

Density probes are max-flow computations on the classic gadget
(source -> edge node -> endpoints -> sink), with all rational thresholds
rho = p/q scaled through to integers.  The exact density value is pinned
by binary search plus continued-fraction snapping: the optimum has a
bounded denominator, so once the search interval is narrower than the
minimal spacing of such rationals the simplest fraction inside it is the
answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyGraph, InvariantViolation, InvalidVertex
from .graph import MultiGraph
from .maxflow import FlowNetwork, UNBOUNDED
from .rational import simplest_between


@dataclass(frozen=True)
class DensityCertificate:
    lambda_star: Fraction
    witness: frozenset  # the unique inclusion-wise maximal densest set


@dataclass(frozen=True)
class IntegralOrientation:
    heads: tuple  # heads[i] = head vertex of edge i (self-loop: its vertex)


@dataclass(frozen=True)
class FractionalOrientation:
    # shares[i] = ((u, z_eu), (v, z_ev)) for edge i; self-loop: ((u, 1),)
    shares: tuple

    def in_degree(self, v) -> Fraction:
        total = Fraction(0)
        for pairs in self.shares:
            for (u, z) in pairs:
                if u == v:
                    total += z
        return total


def merge_groups(groups):
    """Merge duplicate vertex sets, summing weights."""
    acc = {}
    for verts, w in groups:
        key = frozenset(verts)
        acc[key] = acc.get(key, 0) + w
    return [(k, w) for k, w in sorted(acc.items(), key=lambda kv: sorted(kv[0])) if w > 0]


def excess_max_groups(nv, groups, rho: Fraction, within):
    """max over Z subseteq within of f(Z) - rho|Z|, f(Z) = total weight of
    groups fully inside Z.  Returns (value, maximal maximizer)."""
    within = frozenset(within)
    p, q = rho.numerator, rho.denominator
    eligible = [(verts, w) for verts, w in groups if verts <= within]
    total_w = sum(w for _, w in eligible)
    n_nodes = 2 + nv + len(eligible)
    net = FlowNetwork(n_nodes, 0, 1)
    for gi, (verts, w) in enumerate(eligible):
        gnode = 2 + nv + gi
        net.add_arc(0, gnode, q * w)
        for v in verts:
            net.add_arc(gnode, 2 + v, UNBOUNDED)
    for v in within:
        net.add_arc(2 + v, 1, p)
    cut = net.solve()
    value = Fraction(q * total_w - cut.value, q)
    witness = frozenset(v for v in within if (2 + v) in cut.source_side)
    return value, witness


def search_max_density(excess_fn, upper: Fraction, denom_bound: int):
    """Exact max density via binary search on excess probes.

    excess_fn(rho) -> (value, witness) with value == 0 iff the max
    density is <= rho.  The optimum is assumed to have denominator at
    most denom_bound; `upper` must satisfy excess_fn(upper) == 0.
    """
    value, witness = excess_fn(Fraction(0))
    if value == 0:
        return Fraction(0), witness
    lo, hi = Fraction(0), Fraction(upper)
    gap = Fraction(1, 2 * denom_bound * denom_bound)
    while hi - lo > gap:
        mid = (lo + hi) / 2
        v, _ = excess_fn(mid)
        if v == 0:
            hi = mid
        else:
            lo = mid
    lam = simplest_between(lo, hi)
    v, witness = excess_fn(lam)
    if v != 0 or lam.denominator > denom_bound:
        raise InvariantViolation("density search failed to pin the optimum")
    return lam, witness


def _graph_groups(g: MultiGraph):
    return merge_groups(((frozenset((a, b)), 1) for (a, b) in g.edges))


def excess_max(g: MultiGraph, rho: Fraction, within=None):
    """max over Z within the given set of |E(Z)| - rho|Z|, with the
    inclusion-wise maximal maximizer."""
    if within is None:
        within = range(g.n)
    within = frozenset(within)
    for v in within:
        g.check_vertex(v)
    return excess_max_groups(g.n, _graph_groups(g), Fraction(rho), within)


def densest_subgraph(g: MultiGraph) -> DensityCertificate:
    """Exact lambda* = max |E(S)|/|S| and the maximal achieving set.

    lambda* = 0 with witness V iff the graph has no edges.
    """
    if g.n == 0:
        raise EmptyGraph("densest subgraph of an empty graph is undefined")
    groups = _graph_groups(g)
    within = frozenset(range(g.n))

    def probe(rho):
        return excess_max_groups(g.n, groups, rho, within)

    lam, wit = search_max_density(probe, Fraction(max(g.m, 1)), g.n)
    if wit and Fraction(g.edge_count_within(wit), len(wit)) != lam:
        raise InvariantViolation("witness density mismatch")
    return DensityCertificate(lambda_star=lam, witness=wit)


def _orientation_network(g: MultiGraph, p: int, q: int):
    """Per-edge gadget with endpoint arcs capped at q, so arc flows are
    exactly the scaled orientation shares."""
    n_nodes = 2 + g.n + g.m
    net = FlowNetwork(n_nodes, 0, 1)
    endpoint_arcs = []  # per edge: list of (vertex, arc index)
    for i, (a, b) in enumerate(g.edges):
        enode = 2 + g.n + i
        net.add_arc(0, enode, q)
        if a == b:
            endpoint_arcs.append([(a, net.add_arc(enode, 2 + a, q))])
        else:
            endpoint_arcs.append(
                [(a, net.add_arc(enode, 2 + a, q)), (b, net.add_arc(enode, 2 + b, q))]
            )
    for v in range(g.n):
        net.add_arc(2 + v, 1, p)
    return net, endpoint_arcs


def check_density_integral(g: MultiGraph, rho: int):
    """An orientation with every in-degree <= rho, iff lambda* <= rho.

    Self-loops orient into their own vertex and add 1 to its in-degree.
    """
    rho = int(rho)
    if rho < 0:
        raise ValueError("rho must be a non-negative integer")
    net, endpoint_arcs = _orientation_network(g, rho, 1)
    cut = net.solve()
    if cut.value != g.m:
        return None
    heads = []
    for pairs in endpoint_arcs:
        head = None
        for (v, arc) in pairs:
            if cut.flows[arc] == 1:
                head = v
        if head is None:
            raise InvariantViolation("saturated edge without a head")
        heads.append(head)
    return IntegralOrientation(heads=tuple(heads))


def check_density_fractional(g: MultiGraph, rho: Fraction):
    """A fractional orientation with every fractional in-degree <= rho,
    iff lambda* <= rho; per-edge shares sum to 1 (self-loop: single 1)."""
    rho = Fraction(rho)
    if rho < 0:
        raise ValueError("rho must be non-negative")
    p, q = rho.numerator, rho.denominator
    net, endpoint_arcs = _orientation_network(g, p, q)
    cut = net.solve()
    if cut.value != q * g.m:
        return None
    shares = []
    for pairs in endpoint_arcs:
        shares.append(tuple((v, Fraction(cut.flows[arc], q)) for (v, arc) in pairs))
    return FractionalOrientation(shares=tuple(shares))
