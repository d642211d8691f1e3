"""Acceptance suite: each test prints one PASS line for its criterion.

All comparisons are exact rational equality unless a tolerance is part
of the criterion itself (statistical slack on the randomized algorithm,
outward rounding when a natural log enters a bound).
"""

import math
import random
from fractions import Fraction
from itertools import combinations

from densdel.brute import (
    _any_dense_subset,
    brute_densest,
    brute_opt_deletion,
    brute_set_cover,
)
from densdel.cover import greedy_cover, reduce_cover_to_dd, reduce_dd_to_cover
from densdel.decomposition import dense_decomposition, preprocess
from densdel.densest import (
    check_density_fractional,
    check_density_integral,
    densest_subgraph,
)
from densdel.gadgets import SetCoverInstance, build_gadget, extract_cover
from densdel.graph import MultiGraph
from densdel.lp import round_threshold
from densdel.matroid import pf_union_independent, pseudoforest_union_matroid, dual_rank_h
from densdel.oracles import (
    FunctionOracle,
    Hypergraph,
    cf_bruteforce,
    graph_oracle,
    hypergraph_oracle,
    marginal,
    pmean_oracle,
)
from densdel.randomized import (
    check_marginal_mass,
    draw_weighted,
    marginal_weights,
    random_delete,
)
from densdel.rational import Cost
from tests.conftest import random_costs, random_multigraph


def report(criterion, detail):
    print(f"ACCEPTANCE {criterion}: PASS ({detail})")


def corpus(seed, count, **kwargs):
    rng = random.Random(seed)
    return [random_multigraph(rng, **kwargs) for _ in range(count)]


GRAPHS_N8 = corpus(101, 500, max_n=8, max_m=12)


def test_criterion_1_exact_densest():
    for g in GRAPHS_N8:
        cert = densest_subgraph(g)
        ref = brute_densest(g)
        assert cert.lambda_star == ref.value
        union = frozenset().union(*ref.witnesses) if ref.witnesses else frozenset()
        if ref.value > 0:
            assert cert.witness == union
    report(1, "500 multigraphs n<=8, exact value and maximal witness")


def test_criterion_2_orientation_characterization():
    for g in GRAPHS_N8[:250]:
        lam = densest_subgraph(g).lambda_star
        for rho in range(0, 6):
            integral = check_density_integral(g, rho)
            fractional = check_density_fractional(g, Fraction(rho))
            assert (integral is not None) == (lam <= rho)
            assert (integral is not None) == (fractional is not None)
            if integral is not None:
                indeg = [0] * g.n
                for h in integral.heads:
                    indeg[h] += 1
                assert max(indeg, default=0) <= rho
            if fractional is not None:
                for pairs in fractional.shares:
                    assert sum(z for _, z in pairs) == 1
                for v in range(g.n):
                    assert fractional.in_degree(v) <= rho
    report(2, "integral/fractional orientation iff lambda* <= rho, rho in 0..5")


def _brute_decomposition(f):
    blocks = []
    done = frozenset()
    remaining = sorted(f.ground)
    while remaining:
        base = f.eval(done)
        best = None
        winners = []
        for r in range(1, len(remaining) + 1):
            for combo in combinations(remaining, r):
                s = frozenset(combo)
                dens = (f.eval(done | s) - base) / len(s)
                if best is None or dens > best:
                    best = dens
                    winners = [s]
                elif dens == best:
                    winners.append(s)
        block = frozenset().union(*winners)
        blocks.append((block, best))
        done |= block
        remaining = [v for v in remaining if v not in block]
    return blocks


def test_criterion_3_dense_decomposition():
    rng = random.Random(303)
    checked_feasibility = 0
    for _ in range(200):
        g = random_multigraph(rng, max_n=7, max_m=10)
        f = graph_oracle(g)
        d = dense_decomposition(f)
        assert list(d.blocks) == _brute_decomposition(f)
        lam = d.blocks[0][1] if d.blocks else Fraction(0)
        if lam == 0:
            continue
        rho_prime = lam * Fraction(rng.randint(1, 3), 4)
        pre = preprocess(f, rho_prime)
        for v in pre.kept:
            assert marginal(pre.oracle, v, pre.kept - {v}) >= rho_prime
        # Lemma property (1): feasibility transfers from f|_R to f
        elems = sorted(pre.kept)
        if len(elems) > 6 or checked_feasibility > 60:
            continue
        checked_feasibility += 1
        for r in range(len(elems) + 1):
            for combo in combinations(elems, r):
                x = frozenset(combo)
                lam_r, _ = pre.oracle.restrict(pre.kept - x).max_density()
                if lam_r <= rho_prime:
                    lam_f, _ = f.restrict(f.ground - x).max_density()
                    assert lam_f <= rho_prime
    report(3, "200 graphs n<=7: blocks, preprocess marginals, feasibility transfer")


def test_criterion_4_lp_bicriteria():
    rng = random.Random(404)
    count = 0
    while count < 200:
        g = random_multigraph(rng, max_n=9, max_m=12, loops=False)
        costs = random_costs(rng, g.n)
        rho = Fraction(rng.randint(0, 3), rng.randint(1, 2))
        opt = brute_opt_deletion(g, costs, rho)
        count += 1
        for eps in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)):
            res = round_threshold(g, costs, rho, eps)
            assert res.residual_density <= rho / (1 - 2 * eps)
            if not res.cost.is_infinite():
                assert res.cost.value <= res.lp_value / eps
            if opt.feasible:
                assert res.lp_value <= opt.value.value
    report(4, "200 instances n<=9, eps in {1/8,1/4,3/8}: both bounds + lp<=OPT")


def test_criterion_5_greedy_wolsey():
    rng = random.Random(505)
    checked = 0
    attempts = 0
    while checked < 200 and attempts < 1000:
        attempts += 1
        g = random_multigraph(rng, max_n=8, max_m=12)
        f = graph_oracle(g)
        rho = Fraction(rng.randint(0, 3))
        costs = {v: Cost(Fraction(rng.randint(1, 8))) for v in f.ground}
        inst = reduce_dd_to_cover(f, rho, costs)
        max_h = max(inst.h(frozenset({v})) for v in f.ground)
        if max_h < 1:
            continue
        checked += 1
        res = greedy_cover(inst)
        keep = f.ground - res.chosen
        lam, _ = f.restrict(keep).max_density()
        assert lam <= rho
        opt = brute_opt_deletion(g, [costs[v] for v in range(g.n)], rho)
        assert opt.feasible
        # outward rounding: inflate the real-valued bound before comparing
        bound = (1 + math.log(max_h)) * float(opt.value.value)
        assert float(res.cost.value) <= bound * (1 + 1e-9) + 1e-9
    assert checked == 200
    report(5, "200 instances: greedy feasible, cost within Wolsey log bound")


def _synthetic_coverage(rng, ground):
    universe = range(rng.randint(1, 5))
    sets = {v: frozenset(e for e in universe if rng.random() < 0.5) for v in ground}

    def h(x):
        return len(frozenset().union(*(sets[v] for v in x)) if x else frozenset())

    return h


def test_criterion_6_reduction_equivalences():
    rng = random.Random(606)
    # forward: density deletion -> submodular cover
    instances = []
    for _ in range(20):
        g = random_multigraph(rng, max_n=6, max_m=9)
        instances.append(("graph", graph_oracle(g)))
    for _ in range(10):
        n = rng.randint(2, 6)
        edges = [tuple(rng.sample(range(n), min(3, n)))
                 for _ in range(rng.randint(1, 6))]
        instances.append(("hypergraph", hypergraph_oracle(Hypergraph(n, edges))))
    for kind, f in instances:
        rho = Fraction(rng.randint(0, 2), rng.randint(1, 2))
        costs = {v: Cost(1) for v in f.ground}
        inst = reduce_dd_to_cover(f, rho, costs)
        target = inst.target()
        q = inst.h.q
        elems = sorted(f.ground)
        for r in range(len(elems) + 1):
            for combo in combinations(elems, r):
                x = frozenset(combo)
                lam, _ = f.restrict(f.ground - x).max_density()
                assert (inst.h(x) == target) == (lam <= rho)
        for v in elems:
            hv = Fraction(inst.h(frozenset({v})), q)
            fv = marginal(f, v, f.ground - {v})
            assert hv <= max(Fraction(0), fv - rho)
    # reverse: submodular cover -> density deletion at rho = 1
    for _ in range(15):
        ground = frozenset(range(rng.randint(1, 6)))
        h = _synthetic_coverage(rng, ground)
        from densdel.cover import SubmodCoverInstance

        inst = SubmodCoverInstance(ground, h, {v: Cost(1) for v in ground})
        f, rho = reduce_cover_to_dd(inst)
        assert rho == 1
        for v in ground:
            assert marginal(f, v, ground - {v}) == h(frozenset({v})) + 1
        target = h(ground)
        elems = sorted(ground)
        for r in range(len(elems) + 1):
            for combo in combinations(elems, r):
                x = frozenset(combo)
                lam, _ = f.restrict(ground - x).max_density()
                assert (h(x) == target) == (lam <= 1)
    report(6, "both reduction directions + marginal identities, ground <= 6")


def test_criterion_7_randomized_statistics():
    # feasibility on every run, mean cost bound, and chi^2 on the
    # single-step sampling distribution
    k4 = MultiGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    weighted = MultiGraph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4),
                              (0, 3), (1, 4)])
    cases = [
        (k4, {v: Cost(1) for v in range(4)}, Fraction(1, 4), Fraction(1, 2)),
        (k4, {0: Cost(1), 1: Cost(2), 2: Cost(3), 3: Cost(4)},
         Fraction(1, 4), Fraction(1)),
        (weighted, {v: Cost(Fraction(v + 1, 2)) for v in range(5)},
         Fraction(1, 2), Fraction(1, 2)),
    ]
    cf = Fraction(2)
    for g, costs, rho, eps in cases:
        f = graph_oracle(g)
        threshold = cf * (1 + eps) * rho
        opt = brute_opt_deletion(
            g, [costs[v] for v in range(g.n)], threshold
        )
        total = Fraction(0)
        for seed in range(500):
            run = random_delete(f, costs, rho, eps, cf, seed)
            assert run.residual_density <= threshold
            total += run.cost.value
        mean = total / 500
        bound = cf * (1 + 1 / eps) * opt.value.value
        assert mean <= Fraction(11, 10) * bound

    # chi^2 over 10000 single-step draws on the weighted K4 case
    from scipy.stats import chi2

    f = graph_oracle(k4)
    costs = {0: Cost(1), 1: Cost(2), 2: Cost(3), 3: Cost(4)}
    weights = marginal_weights(f, costs)
    total_w = sum(weights.values())
    rng = random.Random(777)
    draws = 10000
    counts = {v: 0 for v in weights}
    for _ in range(draws):
        v, _ = draw_weighted(weights, rng)
        counts[v] += 1
    stat = 0.0
    for v, w in weights.items():
        expected = float(w / total_w) * draws
        stat += (counts[v] - expected) ** 2 / expected
    critical = chi2.ppf(1 - 0.001, df=len(weights) - 1)
    assert stat <= critical
    report(7, f"500 seeds x 3 instances feasible, mean within bound, "
              f"chi2 {stat:.2f} <= {critical:.2f}")


def test_criterion_8_helper_inequality():
    rng = random.Random(808)
    eps = Fraction(1)
    checked = 0
    graphs = 0
    while graphs < 120:
        g = random_multigraph(rng, max_n=7, max_m=10)
        f = graph_oracle(g)
        margins = {v: marginal(f, v, f.ground - {v}) for v in f.ground}
        if min(margins.values()) == 0:
            continue
        graphs += 1
        cf = cf_bruteforce(f).value
        # every last-marginal then sits exactly at the hypothesis floor
        rho = min(margins.values()) / (cf * (1 + eps))
        over = _any_dense_subset(g, rho)
        full = (1 << g.n) - 1
        for xmask in range(1 << g.n):
            if over[full & ~xmask]:
                continue
            x = frozenset(v for v in range(g.n) if (xmask >> v) & 1)
            assert check_marginal_mass(f, rho, eps, cf, x)
            checked += 1
    assert checked > 500
    report(8, f"marginal-mass inequality on {checked} feasible sets, 120 graphs n<=7")


def test_criterion_9_gadget_round_trip():
    rng = random.Random(909)
    # f = 8 identity asserted on construction
    sc8 = SetCoverInstance(1, tuple(frozenset({0}) for _ in range(8)),
                           tuple(Cost(1) for _ in range(8)))
    g8 = build_gadget(sc8, 2).graph
    tree_density = densest_subgraph(g8).lambda_star
    assert tree_density == Fraction(31, 15)

    for trial in range(12):
        n_u = rng.randint(1, 4)
        sets = [set() for _ in range(8)]
        for e in range(n_u):
            for sid in rng.sample(range(8), 4):
                sets[sid].add(e)
        sc = SetCoverInstance(
            n_u, tuple(frozenset(s) for s in sets),
            tuple(Cost(Fraction(rng.randint(1, 9))) for _ in range(8)),
        )
        cover_opt = brute_set_cover(sc)
        for rho in (2, 3):
            gi = build_gadget(sc, rho)
            del_opt = brute_opt_deletion(gi.graph, gi.graph.costs, Fraction(rho))
            assert del_opt.feasible
            assert del_opt.value == cover_opt.value
            for witness in del_opt.witnesses:
                family = extract_cover(gi, witness)
                cost = sum((sc.costs[s] for s in family), Cost(0))
                assert cost == cover_opt.value
    report(9, "12 random instances |U|<=4 |S|=8 f=4, rho in {2,3}: OPT equal, "
              "every optimal deletion extracts an optimal cover")


def test_criterion_10_matroid_layer():
    rng = random.Random(1010)
    for _ in range(8):
        g = random_multigraph(rng, max_n=7, max_m=8)
        for rho in (1, 2):
            for r in range(g.m + 1):
                for combo in combinations(range(g.m), r):
                    edge_ids = list(combo)
                    ok, parts = pf_union_independent(g, rho, edge_ids)
                    sub = MultiGraph(g.n, [g.edges[i] for i in edge_ids])
                    assert ok == (brute_densest(sub).value <= rho)
                    if ok:
                        assert len(parts) == rho
                        assert frozenset().union(*parts) == frozenset(edge_ids)
                        for part in parts:
                            psub = MultiGraph(g.n, [g.edges[i] for i in part])
                            assert brute_densest(psub).value <= 1
    # dual-rank chain through the cover-to-deletion reduction
    for _ in range(6):
        g = random_multigraph(rng, max_n=6, max_m=7)
        m = pseudoforest_union_matroid(g, 1)
        h = dual_rank_h(g, m)
        from densdel.cover import SubmodCoverInstance

        inst = SubmodCoverInstance(
            h.ground, lambda x: int(h.eval(x)), {v: Cost(1) for v in h.ground}
        )
        f, rho = reduce_cover_to_dd(inst)
        for r in range(g.n + 1):
            for combo in combinations(range(g.n), r):
                deleted = frozenset(combo)
                keep = frozenset(range(g.n)) - deleted
                edge_ids = [i for i, (a, b) in enumerate(g.edges)
                            if a in keep and b in keep]
                ok, _ = pf_union_independent(g, 1, edge_ids)
                lam, _ = f.restrict(keep).max_density()
                assert ok == (lam <= rho)
    report(10, "independence iff density, witnesses are pseudoforests, "
               "dual-rank chain reproduces independence")


def test_criterion_11_cf_bounds():
    rng = random.Random(1111)
    for _ in range(60):
        g = random_multigraph(rng, max_n=8, max_m=10)
        assert cf_bruteforce(graph_oracle(g)).value <= 2
    assert cf_bruteforce(graph_oracle(MultiGraph(2, [(0, 1)]))).value == 2
    for _ in range(30):
        n = rng.randint(2, 7)
        r = rng.randint(2, 3)
        edges = [tuple(rng.sample(range(n), min(r, n)))
                 for _ in range(rng.randint(1, 7))]
        h = Hypergraph(n, edges)
        assert cf_bruteforce(hypergraph_oracle(h)).value <= h.rank
    for p in (1, 2, 3):
        for _ in range(12):
            g = random_multigraph(rng, max_n=7, max_m=9, loops=False)
            assert cf_bruteforce(pmean_oracle(g, p)).value <= (p + 1) ** p
    report(11, "c_f <= 2 (graphs, tight on an edge), <= r (hypergraphs), "
               "<= (p+1)^p (p-means)")
