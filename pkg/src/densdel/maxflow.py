"""Exact integer max-flow / min-cut with maximal source-side extraction.

Backend selection: the compiled Dinic kernel (``densdel._dinic``, built
from Cython) is used when available and when every capacity fits in
int64; otherwise the pure-Python twin takes over.  Set the environment
variable ``DENSDEL_PURE_MAXFLOW=1`` to force the pure backend.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import InvalidNetwork
from . import _dinic_py

try:
    from . import _dinic  # compiled extension
except ImportError:  # pragma: no cover - depends on build environment
    _dinic = None

_INT64_LIMIT = 2**62

UNBOUNDED = None  # sentinel capacity: replaced by (sum of finite caps) + 1


def backend_name() -> str:
    if os.environ.get("DENSDEL_PURE_MAXFLOW") == "1" or _dinic is None:
        return "python"
    return "compiled"


@dataclass(frozen=True)
class MinCut:
    value: int
    source_side: frozenset
    flows: tuple  # flow per input arc, in insertion order


class FlowNetwork:
    """Directed network with integer capacities; nodes are 0..n-1."""

    def __init__(self, n_nodes: int, source: int, sink: int):
        if n_nodes < 2 or not (0 <= source < n_nodes and 0 <= sink < n_nodes):
            raise InvalidNetwork("need distinct source/sink within node range")
        if source == sink:
            raise InvalidNetwork("source equals sink")
        self.n = n_nodes
        self.source = source
        self.sink = sink
        self._from = []
        self._to = []
        self._cap = []

    def add_arc(self, u: int, v: int, cap) -> int:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidNetwork(f"arc ({u},{v}) outside node range")
        if cap is not UNBOUNDED and (not isinstance(cap, int) or cap < 0):
            raise InvalidNetwork(f"capacity must be a non-negative int, got {cap!r}")
        self._from.append(u)
        self._to.append(v)
        self._cap.append(cap)
        return len(self._cap) - 1

    def solve(self) -> MinCut:
        finite_total = sum(c for c in self._cap if c is not UNBOUNDED)
        big = finite_total + 1
        caps = [big if c is UNBOUNDED else c for c in self._cap]
        use_compiled = (
            _dinic is not None
            and os.environ.get("DENSDEL_PURE_MAXFLOW") != "1"
            and self.n * big < _INT64_LIMIT
        )
        engine = _dinic if use_compiled else _dinic_py
        value, flows, residual = engine.max_flow(
            self.n, self.source, self.sink, self._from, self._to, caps
        )
        reach_sink = engine.sink_side(self.n, self.sink, self._from, self._to, residual)
        side = frozenset(range(self.n)) - frozenset(reach_sink)
        return MinCut(value=int(value), source_side=side, flows=tuple(int(f) for f in flows))
