import random
from fractions import Fraction
from itertools import combinations

from densdel.brute import brute_densest
from densdel.graph import MultiGraph
from densdel.matroid import (
    dual_rank_h,
    pf_union_independent,
    pf_union_rank,
    pseudoforest_union_matroid,
)
from tests.conftest import random_multigraph

K4 = MultiGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
TRIANGLE = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])


def test_examples():
    ok, parts = pf_union_independent(TRIANGLE, 1, range(3))
    assert ok and parts == (frozenset({0, 1, 2}),)
    ok, parts = pf_union_independent(K4, 1, range(6))
    assert not ok and parts is None
    ok, parts = pf_union_independent(K4, 2, range(6))
    assert ok and len(parts) == 2
    assert frozenset().union(*parts) == frozenset(range(6))


def test_partition_parts_are_pseudoforests():
    rng = random.Random(3)
    for _ in range(25):
        g = random_multigraph(rng, max_n=6, max_m=9)
        for rho in (1, 2):
            ok, parts = pf_union_independent(g, rho, range(g.m))
            if not ok:
                continue
            assert len(parts) == rho
            for part in parts:
                sub = MultiGraph(g.n, [g.edges[i] for i in sorted(part)])
                assert brute_densest(sub).value <= 1


def test_ranks():
    assert pf_union_rank(TRIANGLE, 1, range(3)) == 3
    assert pf_union_rank(K4, 1, range(6)) == 4
    assert pf_union_rank(K4, 2, range(6)) == 6
    assert pf_union_rank(K4, 1, []) == 0


def test_rank_axioms():
    rng = random.Random(9)
    g = random_multigraph(rng, max_n=5, max_m=6)
    m = pseudoforest_union_matroid(g, 1)
    subsets = [frozenset(c) for r in range(g.m + 1)
               for c in combinations(range(g.m), r)]
    ranks = {s: m.rank(s) for s in subsets}
    for s in subsets:
        assert 0 <= ranks[s] <= len(s)
        for e in range(g.m):
            if e in s:
                continue
            gain = ranks[s | {e}] - ranks[s]
            assert gain in (0, 1)
            for t in subsets:
                if s <= t and e not in t:
                    assert ranks[t | {e}] - ranks[t] <= gain


def test_independence_iff_density():
    rng = random.Random(17)
    for _ in range(15):
        g = random_multigraph(rng, max_n=5, max_m=7)
        for rho in (1, 2):
            for r in range(g.n + 1):
                for combo in combinations(range(g.n), r):
                    deleted = frozenset(combo)
                    keep = set(range(g.n)) - deleted
                    edge_ids = [i for i, (a, b) in enumerate(g.edges)
                                if a in keep and b in keep]
                    ok, _ = pf_union_independent(g, rho, edge_ids)
                    sub = g.delete_vertices(deleted)
                    lam = brute_densest(sub).value if sub.n else Fraction(0)
                    assert ok == (lam <= rho)


def test_dual_rank_h():
    m = pseudoforest_union_matroid(K4, 1)
    h = dual_rank_h(K4, m)
    assert h.eval(frozenset()) == 0
    # deleting one vertex of K4 leaves a triangle, which is independent
    assert h.eval({0}) == h.eval(frozenset(range(4)))
