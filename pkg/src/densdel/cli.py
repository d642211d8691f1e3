"""Command-line interface.

Subcommands: density, decompose, delete greedy|lp|random, gadget
build|extract, verify, bench.  Output is JSON on stdout (rationals as
"p/q" strings); exit code 0 on success, 1 on a domain error with a
machine-readable error object, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .brute import brute_densest, brute_oracle_densest
from .cover import greedy_cover, reduce_dd_to_cover
from .decomposition import dense_decomposition
from .densest import densest_subgraph
from .errors import DensdelError, UnsupportedInstance
from .gadgets import (
    build_gadget,
    build_warmup_gadget,
    cover_to_deletion,
    extract_cover,
    parse_set_cover,
)
from .graph import MultiGraph, dump_graph, parse_graph
from .lp import round_threshold
from .oracles import graph_oracle, hypergraph_oracle, parse_hypergraph, pmean_oracle
from .randomized import random_delete
from .rational import Cost, frac_str, parse_frac

SCHEMA = 1


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_objective(args):
    """Returns (oracle, costs dict, graph-or-None)."""
    text = _read(args.instance)
    objective = getattr(args, "objective", "graph")
    if objective == "hypergraph":
        h = parse_hypergraph(text)
        f = hypergraph_oracle(h)
        costs = {v: Cost(1) for v in range(h.n)}
        return f, costs, None
    g = parse_graph(text)
    costs = {v: g.costs[v] for v in range(g.n)}
    if objective == "pmean":
        return pmean_oracle(g, args.p), costs, g
    return graph_oracle(g), costs, g


def _emit(obj, args):
    if getattr(args, "timing", False):
        obj["wall_time_seconds"] = time.perf_counter() - args._t0
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def cmd_density(args):
    f, _, g = _load_objective(args)
    lam, wit = f.max_density()
    out = {"schema": SCHEMA, "lambda": frac_str(lam), "witness": sorted(wit)}
    if args.oracle:
        ref = brute_densest(g).value if g is not None else brute_oracle_densest(f).value
        out["oracle_agrees"] = ref == lam
        if ref != lam:
            raise DensdelError(f"oracle disagrees: {frac_str(ref)} vs {frac_str(lam)}")
    return _emit(out, args)


def cmd_decompose(args):
    f, _, _ = _load_objective(args)
    decomp = dense_decomposition(f)
    blocks = [
        {"vertices": sorted(vs), "density": frac_str(d)} for vs, d in decomp.blocks
    ]
    return _emit({"schema": SCHEMA, "blocks": blocks}, args)


def _report(args, algorithm, deleted, cost, f, extra=None):
    residual = f.restrict(f.ground - frozenset(deleted))
    lam, _ = residual.max_density()
    out = {
        "schema": SCHEMA,
        "algorithm": algorithm,
        "deleted": sorted(deleted),
        "cost": str(cost),
        "residual_lambda": frac_str(lam),
    }
    if extra:
        out.update(extra)
    return out


def cmd_delete_greedy(args):
    f, costs, _ = _load_objective(args)
    rho = parse_frac(args.rho)
    inst = reduce_dd_to_cover(f, rho, costs)
    res = greedy_cover(inst)
    out = _report(args, "greedy", res.chosen, res.cost, f,
                  {"rho": frac_str(rho), "order": list(res.order),
                   "finite": res.finite})
    return _emit(out, args)


def cmd_delete_lp(args):
    text = _read(args.instance)
    g = parse_graph(text)
    rho = parse_frac(args.rho)
    eps = parse_frac(args.eps)
    res = round_threshold(g, g.costs, rho, eps)
    out = {
        "schema": SCHEMA,
        "algorithm": "lp",
        "deleted": sorted(res.deleted),
        "cost": str(res.cost),
        "residual_lambda": frac_str(res.residual_density),
        "rho": frac_str(rho),
        "epsilon": frac_str(eps),
        "lp_value": frac_str(res.lp_value),
        "cost_bound_holds": not res.cost.is_infinite()
        and res.cost.value <= res.cost_bound,
        "density_bound_holds": res.residual_density <= res.density_bound,
        "infeasible_with_finite_cost": res.infeasible_with_finite_cost,
    }
    return _emit(out, args)


def cmd_delete_random(args):
    f, costs, _ = _load_objective(args)
    rho = parse_frac(args.rho)
    eps = parse_frac(args.eps)
    cf = parse_frac(args.cf) if args.cf else (f.cf_bound or Fraction(2))
    if args.trials:
        runs = [
            random_delete(f, costs, rho, eps, cf, args.seed + i)
            for i in range(args.trials)
        ]
        finite = [r.cost.value for r in runs]
        mean = sum(finite, Fraction(0)) / len(finite)
        out = {
            "schema": SCHEMA,
            "algorithm": "random",
            "rho": frac_str(rho),
            "epsilon": frac_str(eps),
            "cf": frac_str(cf),
            "trials": args.trials,
            "costs": [str(r.cost) for r in runs],
            "mean_cost": frac_str(mean),
        }
        return _emit(out, args)
    run = random_delete(f, costs, rho, eps, cf, args.seed)
    out = _report(args, "random", run.deleted, run.cost, f, {
        "rho": frac_str(rho),
        "epsilon": frac_str(eps),
        "cf": frac_str(cf),
        "seed": args.seed,
        "threshold": frac_str(run.threshold),
        "trace": [[size, v, frac_str(w)] for size, v, w in run.trace],
    })
    return _emit(out, args)


def _rebuild_gadget(args):
    sc = parse_set_cover(_read(args.setcover))
    if args.warmup:
        return build_warmup_gadget(sc)
    return build_gadget(sc, args.rho)


def cmd_gadget_build(args):
    gi = _rebuild_gadget(args)
    graph_text = dump_graph(gi.graph)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(graph_text)
    out = {
        "schema": SCHEMA,
        "rho": gi.rho,
        "kind": gi.kind,
        "n": gi.graph.n,
        "m": gi.graph.m,
        "provenance": {str(v): name for v, name in sorted(gi.provenance().items())},
    }
    if not args.out:
        out["graph"] = graph_text
    return _emit(out, args)


def cmd_gadget_extract(args):
    gi = _rebuild_gadget(args)
    if args.report:
        deleted = frozenset(json.loads(_read(args.report))["deleted"])
    elif args.deleted is not None:
        deleted = frozenset(int(x) for x in args.deleted.replace(",", " ").split())
    else:
        build_parser().error("gadget extract needs --deleted or --report")
    family = extract_cover(gi, deleted)
    cost = sum((gi.source.costs[s] for s in sorted(family)), Cost(0))
    out = {
        "schema": SCHEMA,
        "cover": sorted(family),
        "cost": str(cost),
    }
    return _emit(out, args)


def cmd_verify(args):
    report = json.loads(_read(args.report))
    f, costs, _ = _load_objective(args)
    deleted = frozenset(report["deleted"])
    residual = f.restrict(f.ground - deleted)
    lam, _ = residual.max_density()
    cost = sum((costs[v] for v in deleted), Cost(0))
    ok = frac_str(lam) == report["residual_lambda"] and str(cost) == report["cost"]
    out = {
        "schema": SCHEMA,
        "verified": ok,
        "residual_lambda": frac_str(lam),
        "cost": str(cost),
    }
    _emit(out, args)
    return 0 if ok else 1


def cmd_bench(args):
    cfg = {}
    for ln in _read(args.config).splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        key, _, val = ln.partition("=")
        cfg[key.strip()] = val.strip()
    ns = argparse.Namespace(
        instance=cfg["instance"],
        objective=cfg.get("objective", "graph"),
        p=int(cfg.get("p", "2")),
    )
    f, costs, _ = _load_objective(ns)
    rho = parse_frac(cfg["rho"])
    eps = parse_frac(cfg["eps"])
    cf = parse_frac(cfg["cf"]) if "cf" in cfg else (f.cf_bound or Fraction(2))
    lo, _, hi = cfg.get("seeds", "0:100").partition(":")
    writer = sys.stdout
    writer.write("seed,cost,residual_lambda,steps\n")
    for seed in range(int(lo), int(hi)):
        run = random_delete(f, costs, rho, eps, cf, seed)
        writer.write(
            f"{seed},{run.cost},{frac_str(run.residual_density)},{len(run.trace)}\n"
        )
    return 0


def build_parser():
    top = argparse.ArgumentParser(prog="densdel")
    top.add_argument("--timing", action="store_true",
                     help="include wall time in the JSON output")
    sub = top.add_subparsers(dest="command", required=True)

    def add_objective(p):
        p.add_argument("--objective", choices=["graph", "hypergraph", "pmean"],
                       default="graph")
        p.add_argument("--p", type=int, default=2,
                       help="exponent for the pmean objective")

    p = sub.add_parser("density")
    p.add_argument("instance")
    add_objective(p)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(fn=cmd_density)

    p = sub.add_parser("decompose")
    p.add_argument("instance")
    add_objective(p)
    p.set_defaults(fn=cmd_decompose)

    pd = sub.add_parser("delete")
    dsub = pd.add_subparsers(dest="strategy", required=True)

    p = dsub.add_parser("greedy")
    p.add_argument("instance")
    p.add_argument("--rho", required=True)
    add_objective(p)
    p.set_defaults(fn=cmd_delete_greedy)

    p = dsub.add_parser("lp")
    p.add_argument("instance")
    p.add_argument("--rho", required=True)
    p.add_argument("--eps", required=True)
    p.set_defaults(fn=cmd_delete_lp)

    p = dsub.add_parser("random")
    p.add_argument("instance")
    p.add_argument("--rho", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--cf", default=None)
    add_objective(p)
    p.set_defaults(fn=cmd_delete_random)

    pg = sub.add_parser("gadget")
    gsub = pg.add_subparsers(dest="action", required=True)

    p = gsub.add_parser("build")
    p.add_argument("setcover")
    p.add_argument("--rho", type=int, default=2)
    p.add_argument("--warmup", action="store_true")
    p.add_argument("--out", default=None, help="write the graph file here")
    p.set_defaults(fn=cmd_gadget_build)

    p = gsub.add_parser("extract")
    p.add_argument("setcover")
    p.add_argument("--rho", type=int, default=2)
    p.add_argument("--warmup", action="store_true")
    p.add_argument("--deleted", default=None,
                   help="deleted vertex ids, comma or space separated")
    p.add_argument("--report", default=None,
                   help="JSON report file with a 'deleted' field")
    p.set_defaults(fn=cmd_gadget_extract)

    p = sub.add_parser("verify")
    p.add_argument("instance")
    p.add_argument("--report", required=True)
    add_objective(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench")
    p.add_argument("config")
    p.set_defaults(fn=cmd_bench)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.perf_counter()
    try:
        return args.fn(args)
    except DensdelError as exc:
        json.dump(
            {"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc)},
            sys.stdout,
            sort_keys=True,
        )
        sys.stdout.write("\n")
        return 1
    except FileNotFoundError as exc:
        json.dump(
            {"schema": SCHEMA, "error": "FileNotFound", "message": str(exc)},
            sys.stdout,
            sort_keys=True,
        )
        sys.stdout.write("\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
