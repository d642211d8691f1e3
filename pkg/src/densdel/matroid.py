"""Pseudoforest matroids on a host graph.

An edge set F is independent in the rho-fold union of the pseudoforest
matroid exactly when the subgraph (V, F) has maximum density at most
rho, equivalently admits an orientation with every in-degree at most
rho.  Independence is tested by that orientation check, and a witness
partition of F into rho pseudoforests is extracted by rho rounds of
"each vertex claims one unclaimed edge oriented into it".

dual_rank_h builds the submodular function h(S) = rank*(b(S)) of the
dual matroid evaluated on the border edge set b(S) (all edges touching
S), via rank*(E') = |E'| - rank(E) + rank(E - E').  Deleting F makes
the surviving edges independent exactly when h(F) = h(V).
"""

from __future__ import annotations

from .densest import check_density_integral
from .errors import InvalidOracle, InvariantViolation
from .graph import MultiGraph
from .oracles import FunctionOracle


class RankOracle:
    """Rank function over subsets of edge ids of a host graph."""

    def __init__(self, ground, fn):
        self.ground = frozenset(ground)
        self.fn = fn

    def rank(self, subset) -> int:
        subset = frozenset(subset)
        if not subset <= self.ground:
            raise InvalidOracle("rank query outside the edge ground set")
        return int(self.fn(subset))


def _subgraph_of_edges(g: MultiGraph, edge_ids) -> MultiGraph:
    return MultiGraph(g.n, [g.edges[i] for i in sorted(edge_ids)])


def pf_union_independent(g: MultiGraph, rho: int, edge_ids):
    """(independent?, partition) for F in the rho-fold pseudoforest union.

    The partition is a tuple of rho edge-id frozensets, each inducing a
    pseudoforest, or None when F is dependent.
    """
    rho = int(rho)
    if rho < 1:
        raise InvalidOracle("fold count must be a positive integer")
    edge_ids = sorted(frozenset(edge_ids))
    sub = _subgraph_of_edges(g, edge_ids)
    orient = check_density_integral(sub, rho)
    if orient is None:
        return False, None
    # heads[i] is the head vertex of the i-th surviving edge; rho rounds
    # of per-vertex claiming split F into rho in-degree-1 orientations.
    unclaimed = {i: orient.heads[pos] for pos, i in enumerate(edge_ids)}
    parts = []
    for _ in range(rho):
        part = set()
        taken_heads = set()
        for i in sorted(unclaimed):
            h = unclaimed[i]
            if h not in taken_heads:
                taken_heads.add(h)
                part.add(i)
        for i in part:
            del unclaimed[i]
        parts.append(frozenset(part))
    if unclaimed:
        raise InvariantViolation("partition extraction left unclaimed edges")
    return True, tuple(parts)


def pf_union_rank(g: MultiGraph, rho: int, edge_ids) -> int:
    """Rank = size of the greedily built maximal independent subset,
    scanning edges in id order (valid by matroid exchange)."""
    chosen = []
    for i in sorted(frozenset(edge_ids)):
        ok, _ = pf_union_independent(g, rho, chosen + [i])
        if ok:
            chosen.append(i)
    return len(chosen)


def pseudoforest_union_matroid(g: MultiGraph, rho: int) -> RankOracle:
    ground = frozenset(range(g.m))
    return RankOracle(ground, lambda s: pf_union_rank(g, rho, s))


def border_edges(g: MultiGraph, verts) -> frozenset:
    verts = frozenset(verts)
    return frozenset(i for i, (a, b) in enumerate(g.edges)
                     if a in verts or b in verts)


def dual_rank_h(g: MultiGraph, m: RankOracle) -> FunctionOracle:
    """h(S) = |b(S)| - rank(E) + rank(E - b(S)) as a vertex-set oracle."""
    all_edges = frozenset(range(g.m))
    rank_full = m.rank(all_edges)

    def fn(verts):
        b = border_edges(g, verts)
        return len(b) - rank_full + m.rank(all_edges - b)

    return FunctionOracle(frozenset(range(g.n)), fn)
