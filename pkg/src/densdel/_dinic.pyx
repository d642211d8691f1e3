# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Dinic max-flow kernel on int64 capacities.

Interface mirrors ``_dinic_py``; callers must keep the total capacity
within int64 range (the dispatcher in ``maxflow`` checks this).
"""

from libc.stdlib cimport malloc, free

import cython


def max_flow(int n, int source, int sink, arc_from, arc_to, arc_cap):
    cdef int m = len(arc_from)
    cdef int narcs = 2 * m
    cdef long long *cap = <long long *> malloc(narcs * sizeof(long long))
    cdef int *to = <int *> malloc(narcs * sizeof(int))
    cdef int *nxt = <int *> malloc(narcs * sizeof(int))
    cdef int *head = <int *> malloc(n * sizeof(int))
    cdef int *level = <int *> malloc(n * sizeof(int))
    cdef int *it = <int *> malloc(n * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    # iterative DFS stacks
    cdef int *path_node = <int *> malloc((n + 1) * sizeof(int))
    cdef int *path_arc = <int *> malloc((n + 1) * sizeof(int))
    if not (cap and to and nxt and head and level and it and queue and path_node and path_arc):
        raise MemoryError()

    cdef int i, u, v, e, qh, qt, depth
    cdef long long total = 0, pushed, d

    try:
        for i in range(n):
            head[i] = -1
        for i in range(m):
            u = arc_from[i]
            v = arc_to[i]
            to[2 * i] = v
            cap[2 * i] = arc_cap[i]
            nxt[2 * i] = head[u]
            head[u] = 2 * i
            to[2 * i + 1] = u
            cap[2 * i + 1] = 0
            nxt[2 * i + 1] = head[v]
            head[v] = 2 * i + 1

        while True:
            # BFS levels
            for i in range(n):
                level[i] = -1
            level[source] = 0
            queue[0] = source
            qh = 0
            qt = 1
            while qh < qt:
                u = queue[qh]
                qh += 1
                e = head[u]
                while e != -1:
                    v = to[e]
                    if cap[e] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue[qt] = v
                        qt += 1
                    e = nxt[e]
            if level[sink] < 0:
                break
            for i in range(n):
                it[i] = head[i]
            # blocking flow via iterative DFS
            while True:
                depth = 0
                path_node[0] = source
                pushed = 0
                while True:
                    u = path_node[depth]
                    if u == sink:
                        # min residual along the path
                        d = -1
                        for i in range(depth):
                            e = path_arc[i]
                            if d < 0 or cap[e] < d:
                                d = cap[e]
                        for i in range(depth):
                            e = path_arc[i]
                            cap[e] -= d
                            cap[e ^ 1] += d
                        total += d
                        pushed = d
                        break
                    e = it[u]
                    while e != -1 and not (cap[e] > 0 and level[to[e]] == level[u] + 1):
                        e = nxt[e]
                    it[u] = e
                    if e == -1:
                        level[u] = -1  # dead end; prune
                        if depth == 0:
                            break
                        depth -= 1
                    else:
                        path_arc[depth] = e
                        depth += 1
                        path_node[depth] = to[e]
                if pushed == 0:
                    break

        flows = [cap[2 * i + 1] for i in range(m)]
        residual = [cap[i] for i in range(narcs)]
        return total, flows, residual
    finally:
        free(cap)
        free(to)
        free(nxt)
        free(head)
        free(level)
        free(it)
        free(queue)
        free(path_node)
        free(path_arc)


def sink_side(int n, int sink, arc_from, arc_to, residual):
    cdef int m = len(arc_from)
    cdef list radj = [[] for _ in range(n)]
    cdef int i, a, b
    for i in range(m):
        a = arc_from[i]
        b = arc_to[i]
        if residual[2 * i] > 0:
            radj[b].append(a)
        if residual[2 * i + 1] > 0:
            radj[a].append(b)
    seen = [False] * n
    seen[sink] = True
    stack = [sink]
    while stack:
        u = stack.pop()
        for w in radj[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return [i for i in range(n) if seen[i]]
