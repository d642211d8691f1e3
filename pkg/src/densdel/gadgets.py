"""Set-cover to graph-density-deletion instance generators and the
reverse solution map.

Main construction (target density rho >= 2, uniform element frequency
f >= 4 a power of 2): one set-vertex per set, plus a complete binary
tree per element whose f leaves are the set-vertices of the sets that
contain it.  Roots get 1 self-loop, set-vertices get 2 self-loops, and
for rho = 2 + alpha every vertex gets alpha extra self-loops.  Only
set-vertices have finite cost (the set's cost); a finite-cost feasible
deletion set is exactly a set cover of the same cost.

Warmup construction: the incidence graph with f_max - 1 self-loops on
each set-vertex and f_max - f_e self-loops on element vertex u_e,
at target density rho = f_max - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .densest import check_density_integral
from .errors import NotFeasible, NotFiniteCost, ParseError, UnsupportedInstance
from .graph import MultiGraph
from .rational import Cost, COST_INF, parse_frac, frac_str


@dataclass(frozen=True)
class SetCoverInstance:
    n_universe: int
    sets: tuple  # per set, frozenset of element ids
    costs: tuple  # per set, Cost

    def frequencies(self):
        freq = [0] * self.n_universe
        for s in self.sets:
            for e in s:
                freq[e] += 1
        return freq


def parse_set_cover(text: str) -> SetCoverInstance:
    """Format: "nU nS", then nS lines "cost k e1 ... ek"."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty set cover instance")
    try:
        n_u, n_s = map(int, lines[0].split())
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    if len(lines) < 1 + n_s:
        raise ParseError("fewer set lines than declared")
    sets = []
    costs = []
    for ln in lines[1 : 1 + n_s]:
        parts = ln.split()
        if len(parts) < 2:
            raise ParseError(f"bad set line {ln!r}")
        costs.append(Cost.parse(parts[0]))
        k = int(parts[1])
        if len(parts) != 2 + k:
            raise ParseError(f"bad set line {ln!r}")
        elems = frozenset(int(x) for x in parts[2:])
        for e in elems:
            if not (0 <= e < n_u):
                raise ParseError(f"element {e} outside [0,{n_u})")
        sets.append(elems)
    covered = frozenset().union(*sets) if sets else frozenset()
    if covered != frozenset(range(n_u)):
        raise ParseError("some element belongs to no set")
    return SetCoverInstance(n_universe=n_u, sets=tuple(sets), costs=tuple(costs))


def dump_set_cover(sc: SetCoverInstance) -> str:
    out = [f"{sc.n_universe} {len(sc.sets)}"]
    for s, c in zip(sc.sets, sc.costs):
        elems = sorted(s)
        out.append(" ".join([str(c), str(len(elems))] + [str(e) for e in elems]))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class GadgetInstance:
    graph: MultiGraph
    rho: int
    set_vertex: tuple  # set id -> vertex id
    root_vertex: dict  # element id -> root vertex id (empty for warmup)
    source: SetCoverInstance
    kind: str  # "tree" or "warmup"

    def provenance(self):
        names = {}
        for sid, v in enumerate(self.set_vertex):
            names[v] = f"set:{sid}"
        for e, r in self.root_vertex.items():
            names[r] = f"root:{e}"
        for v in range(self.graph.n):
            names.setdefault(v, "internal" if self.kind == "tree" else
                             f"element:{v - len(self.set_vertex)}")
        return names


def build_gadget(sc: SetCoverInstance, rho: int) -> GadgetInstance:
    rho = int(rho)
    if rho < 2:
        raise UnsupportedInstance("tree gadget needs an integer target >= 2")
    freq = sc.frequencies()
    f = freq[0] if freq else 0
    if any(x != f for x in freq):
        raise UnsupportedInstance("tree gadget needs uniform element frequency")
    if f < 4 or (f & (f - 1)) != 0:
        raise UnsupportedInstance(
            "tree gadget needs frequency >= 4 and a power of 2"
        )
    alpha = rho - 2
    n_sets = len(sc.sets)
    edges = []
    costs = [None] * n_sets
    set_vertex = tuple(range(n_sets))
    for sid in range(n_sets):
        costs[sid] = sc.costs[sid]
    next_id = n_sets
    root_vertex = {}
    for e in range(sc.n_universe):
        # Leaves in ascending set id; build levels bottom-up, pairing
        # adjacent nodes, until a single root remains.
        level = [sid for sid in range(n_sets) if e in sc.sets[sid]]
        while len(level) > 1:
            parents = []
            for i in range(0, len(level), 2):
                p = next_id
                next_id += 1
                costs.append(COST_INF)
                edges.append((level[i], p))
                edges.append((level[i + 1], p))
                parents.append(p)
            level = parents
        root_vertex[e] = level[0]
    n = next_id
    for sid in range(n_sets):
        edges.extend([(sid, sid)] * 2)
    for e in range(sc.n_universe):
        edges.append((root_vertex[e], root_vertex[e]))
    if alpha:
        for v in range(n):
            edges.extend([(v, v)] * alpha)
    g = MultiGraph(n, edges, tuple(costs))
    return GadgetInstance(graph=g, rho=rho, set_vertex=set_vertex,
                          root_vertex=root_vertex, source=sc, kind="tree")


def build_warmup_gadget(sc: SetCoverInstance) -> GadgetInstance:
    freq = sc.frequencies()
    f_max = max(freq) if freq else 1
    n_sets = len(sc.sets)
    n = n_sets + sc.n_universe
    edges = []
    for sid, s in enumerate(sc.sets):
        for e in sorted(s):
            edges.append((sid, n_sets + e))
    for sid in range(n_sets):
        edges.extend([(sid, sid)] * (f_max - 1))
    for e in range(sc.n_universe):
        u = n_sets + e
        edges.extend([(u, u)] * (f_max - freq[e]))
    costs = tuple(sc.costs) + tuple(COST_INF for _ in range(sc.n_universe))
    g = MultiGraph(n, edges, costs)
    return GadgetInstance(graph=g, rho=f_max - 1,
                          set_vertex=tuple(range(n_sets)), root_vertex={},
                          source=sc, kind="warmup")


def extract_cover(gi: GadgetInstance, deleted) -> frozenset:
    """Map a finite-cost feasible deletion set back to the set family
    {S : v_S deleted}; guaranteed to be a set cover."""
    deleted = frozenset(deleted)
    set_ids = {v: sid for sid, v in enumerate(gi.set_vertex)}
    for v in deleted:
        if v not in set_ids:
            raise NotFiniteCost(f"deleted vertex {v} has infinite cost")
    residual = gi.graph.delete_vertices(deleted)
    if check_density_integral(residual, gi.rho) is None:
        raise NotFeasible("deletion set leaves density above the target")
    family = frozenset(set_ids[v] for v in deleted)
    covered = frozenset().union(
        *(gi.source.sets[sid] for sid in family)
    ) if family else frozenset()
    if covered != frozenset(range(gi.source.n_universe)):
        raise NotFeasible("extracted family does not cover the universe")
    return family


def cover_to_deletion(gi: GadgetInstance, family) -> frozenset:
    """Map a set cover to its deletion set {v_S : S in the cover}."""
    return frozenset(gi.set_vertex[sid] for sid in family)
