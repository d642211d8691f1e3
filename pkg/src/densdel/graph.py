"""Undirected multigraph with self-loops and vertex costs.

Conventions used throughout the library:
  * |E(S)| counts every edge with both endpoints in S; a self-loop is
    counted once when its vertex is in S.
  * degree(v) counts each self-loop at v once.
  * Graphs are immutable after construction; vertex deletion produces
    new induced views carrying a back-mapping to original ids.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidVertex, ParseError
from .rational import Cost, COST_ONE


class MultiGraph:
    __slots__ = ("n", "edges", "costs", "origin")

    def __init__(self, n, edges, costs=None, origin=None):
        self.n = int(n)
        es = []
        for (u, v) in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidVertex(f"edge ({u},{v}) outside [0,{self.n})")
            es.append((int(u), int(v)))
        self.edges = tuple(es)
        if costs is None:
            self.costs = (COST_ONE,) * self.n
        else:
            if len(costs) != self.n:
                raise InvalidVertex("cost vector length mismatch")
            self.costs = tuple(costs)
        # origin[i] = id of vertex i in the graph this view was taken from
        self.origin = tuple(origin) if origin is not None else tuple(range(self.n))

    @property
    def m(self):
        return len(self.edges)

    def vertices(self):
        return range(self.n)

    def check_vertex(self, v):
        if not (0 <= v < self.n):
            raise InvalidVertex(f"vertex {v} outside [0,{self.n})")

    def degree(self, v):
        """Incident edge count; each self-loop counts once."""
        self.check_vertex(v)
        return sum(1 for (a, b) in self.edges if a == v or b == v)

    def edge_count_within(self, subset):
        """|E(S)|: edges with both endpoints in the vertex set `subset`."""
        s = frozenset(subset)
        return sum(1 for (a, b) in self.edges if a in s and b in s)

    def induced_subgraph(self, keep):
        """Graph induced on `keep`, with costs restricted and ids remapped.

        The result's `origin` maps new ids back to ids of this graph.
        """
        keep = sorted(set(keep))
        for v in keep:
            self.check_vertex(v)
        remap = {old: new for new, old in enumerate(keep)}
        ks = set(keep)
        edges = [(remap[a], remap[b]) for (a, b) in self.edges if a in ks and b in ks]
        costs = [self.costs[v] for v in keep]
        return MultiGraph(len(keep), edges, costs, origin=keep)

    def delete_vertices(self, removed):
        return self.induced_subgraph(set(range(self.n)) - set(removed))

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return (self.n, self.edges, self.costs) == (other.n, other.edges, other.costs)

    def __hash__(self):
        return hash((self.n, self.edges, self.costs))

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> MultiGraph:
    """Parse the text instance format.

    Line 1: "n m"; next m lines "u v" (u == v allowed, self-loop);
    optional trailing lines "c u p/q" or "c u inf".  Default cost 1.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty graph instance")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    if len(lines) < 1 + m:
        raise ParseError("fewer edge lines than declared")
    edges = []
    for ln in lines[1 : 1 + m]:
        try:
            u, v = map(int, ln.split())
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    costs = [COST_ONE] * n
    for ln in lines[1 + m :]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "c":
            raise ParseError(f"bad cost line {ln!r}")
        u = int(parts[1])
        if not (0 <= u < n):
            raise InvalidVertex(f"cost line for unknown vertex {u}")
        costs[u] = Cost.parse(parts[2])
    return MultiGraph(n, edges, costs)


def dump_graph(g: MultiGraph) -> str:
    """Serialize in the text instance format (round-trips bit-exactly)."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for (u, v) in g.edges)
    for v in range(g.n):
        if g.costs[v] != COST_ONE:
            out.append(f"c {v} {g.costs[v]}")
    return "\n".join(out) + "\n"
