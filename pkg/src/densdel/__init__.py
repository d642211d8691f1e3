"""Density-deletion algorithms on graphs and supermodular set functions."""

from .brute import (
    brute_densest,
    brute_opt_deletion,
    brute_oracle_densest,
    brute_oracle_opt_deletion,
    brute_set_cover,
)
from .cover import greedy_cover, reduce_cover_to_dd, reduce_dd_to_cover
from .decomposition import dense_decomposition, preprocess
from .densest import (
    check_density_fractional,
    check_density_integral,
    densest_subgraph,
    excess_max,
)
from .gadgets import (
    build_gadget,
    build_warmup_gadget,
    extract_cover,
    parse_set_cover,
    dump_set_cover,
    SetCoverInstance,
)
from .graph import MultiGraph, dump_graph, parse_graph
from .lp import build_orientation_lp, round_threshold, solve_lp
from .matroid import (
    dual_rank_h,
    pf_union_independent,
    pf_union_rank,
    pseudoforest_union_matroid,
)
from .oracles import (
    Hypergraph,
    cf_bruteforce,
    dump_hypergraph,
    graph_oracle,
    hypergraph_oracle,
    marginal,
    parse_hypergraph,
    pmean_oracle,
)
from .randomized import check_marginal_mass, random_delete
from .rational import Cost, frac_str, parse_frac, simplest_between

__version__ = "0.1.0"
