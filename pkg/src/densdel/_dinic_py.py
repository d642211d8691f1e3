"""Pure-Python Dinic max-flow on integer capacities.

Arbitrary-precision fallback for the compiled kernel in ``_dinic``.
Arc lists use the usual paired-residual layout: arc i and arc i^1 are
reverses of each other.
"""

from collections import deque


def max_flow(n, source, sink, arc_from, arc_to, arc_cap):
    """Run Dinic; returns (value, flows, residual_caps).

    flows[i] is the flow on input arc i (arcs as given, not residuals).
    """
    head = [[] for _ in range(n)]
    to = []
    cap = []
    for a, b, c in zip(arc_from, arc_to, arc_cap):
        head[a].append(len(to))
        to.append(b)
        cap.append(c)
        head[b].append(len(to))
        to.append(a)
        cap.append(0)

    level = [0] * n
    it = [0] * n
    total = 0

    def bfs():
        for i in range(n):
            level[i] = -1
        level[source] = 0
        q = deque([source])
        while q:
            u = q.popleft()
            for e in head[u]:
                v = to[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level[sink] >= 0

    def dfs(u, pushed):
        if u == sink:
            return pushed
        while it[u] < len(head[u]):
            e = head[u][it[u]]
            v = to[e]
            if cap[e] > 0 and level[v] == level[u] + 1:
                d = dfs(v, min(pushed, cap[e]))
                if d > 0:
                    cap[e] -= d
                    cap[e ^ 1] += d
                    return d
            it[u] += 1
        return 0

    while bfs():
        it[:] = [0] * n
        while True:
            f = dfs(source, float("inf"))
            if f == 0:
                break
            total += f

    flows = [cap[2 * i + 1] for i in range(len(arc_from))]
    residual = list(cap)
    return total, flows, residual


def sink_side(n, sink, arc_from, arc_to, residual):
    """Nodes from which the sink is reachable in the residual graph.

    The complement (containing the source) is the inclusion-wise maximal
    minimum-cut source side.
    """
    # reverse adjacency over residual arcs with positive capacity
    radj = [[] for _ in range(n)]
    for i in range(len(arc_from)):
        a, b = arc_from[i], arc_to[i]
        if residual[2 * i] > 0:
            radj[b].append(a)
        if residual[2 * i + 1] > 0:
            radj[a].append(b)
    seen = [False] * n
    seen[sink] = True
    q = deque([sink])
    while q:
        u = q.popleft()
        for w in radj[u]:
            if not seen[w]:
                seen[w] = True
                q.append(w)
    return [i for i in range(n) if seen[i]]
