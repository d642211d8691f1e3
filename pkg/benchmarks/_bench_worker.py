"""Benchmark worker: reads "\\n===\\n"-separated graph texts on stdin,
computes each densest subgraph, and prints the backend name, the total
wall time, and one result line per graph."""

import sys
import time

from densdel.densest import densest_subgraph
from densdel.graph import parse_graph
from densdel.maxflow import backend_name
from densdel.rational import frac_str


def main():
    graphs = [parse_graph(t) for t in sys.stdin.read().split("\n===\n")]
    start = time.perf_counter()
    results = []
    for g in graphs:
        cert = densest_subgraph(g)
        results.append(
            f"{frac_str(cert.lambda_star)} {','.join(map(str, sorted(cert.witness)))}"
        )
    elapsed = time.perf_counter() - start
    print(backend_name())
    print(f"{elapsed:.6f}")
    for line in results:
        print(line)


if __name__ == "__main__":
    main()
