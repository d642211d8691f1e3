"""Compare the compiled max-flow kernel against the pure-Python twin.

Runs densest-subgraph computations (the max-flow-heavy code path) on a
family of random multigraphs under both backends, checks that the
results agree exactly, and prints per-backend wall times.

Usage: python benchmarks/bench_maxflow.py [--sizes 50,100,200] [--seed N]
"""

import argparse
import os
import random
import subprocess
import sys
import time

HERE = os.path.dirname(os.path.abspath(__file__))


def make_graph_text(rng, n, m):
    lines = [f"{n} {m}"]
    for _ in range(m):
        a = rng.randrange(n)
        b = rng.randrange(n)
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"


def run_worker(graph_texts, force_pure):
    env = dict(os.environ)
    if force_pure:
        env["DENSDEL_PURE_MAXFLOW"] = "1"
    else:
        env.pop("DENSDEL_PURE_MAXFLOW", None)
    proc = subprocess.run(
        [sys.executable, os.path.join(HERE, "_bench_worker.py")],
        input="\n===\n".join(graph_texts),
        capture_output=True, text=True, env=env, check=True,
    )
    lines = proc.stdout.strip().splitlines()
    backend = lines[0]
    elapsed = float(lines[1])
    results = lines[2:]
    return backend, elapsed, results


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="50,100,200",
                    help="comma-separated vertex counts")
    ap.add_argument("--per-size", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    texts = []
    for n in (int(s) for s in args.sizes.split(",")):
        for _ in range(args.per_size):
            texts.append(make_graph_text(rng, n, 4 * n))

    backend_c, time_c, res_c = run_worker(texts, force_pure=False)
    backend_p, time_p, res_p = run_worker(texts, force_pure=True)

    if res_c != res_p:
        print("MISMATCH between backends", file=sys.stderr)
        return 1
    print(f"instances: {len(texts)}")
    print(f"{backend_c:>10}: {time_c:.3f} s")
    print(f"{backend_p:>10}: {time_p:.3f} s")
    if backend_c != backend_p and time_c > 0:
        print(f"speedup: {time_p / time_c:.2f}x")
    else:
        print("compiled backend unavailable; both runs used the pure backend")
    return 0


if __name__ == "__main__":
    sys.exit(main())
