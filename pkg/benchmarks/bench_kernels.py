#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the two greedy optimizers on planted-partition graphs of increasing
size with both backends, checks that the partitions are identical, and
prints a timing table.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from commtext._kernels import available_backends
from commtext.cda import infomap, louvain
from commtext.evaluation import SynthConfig, generate_synthetic


def planted_graph(communities: int, nodes: int, seed: int):
    cfg = SynthConfig(
        communities=communities,
        nodes_per_community=nodes,
        p_in=min(1.0, 20.0 / nodes),
        p_out=min(1.0, 1.0 / (nodes * (communities - 1))),
        tweets_per_user="const:1",
        tokens_per_tweet="const:1",
        vocab_size=1,
        mu_text=0.0,
        seed=seed,
    )
    return generate_synthetic(cfg).graph


def time_run(fn, *args, repeats: int = 3, **kwargs):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        best = min(best, time.perf_counter() - start)
    return result, best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smallest size only")
    args = parser.parse_args()

    backends = available_backends()
    if "speed" not in backends:
        print("compiled kernel not available; run `pip install -e . --no-build-isolation`")
        return 1

    sizes = [(8, 125), (16, 500), (20, 2000)]
    if args.quick:
        sizes = sizes[:1]

    print(f"{'graph':>22} {'algo':>8} {'pure [s]':>10} {'speed [s]':>10} {'ratio':>7}  identical")
    for communities, nodes in sizes:
        g = planted_graph(communities, nodes, seed=5)
        label = f"{g.n_nodes}n/{g.n_edges}e"
        for algo_name, runner in (("louvain", louvain), ("infomap", infomap)):
            if algo_name == "louvain":
                pure_part, pure_t = time_run(runner, g, 1.0, 7, kernel=backends["pure"])
                fast_part, fast_t = time_run(runner, g, 1.0, 7, kernel=backends["speed"])
            else:
                pure_part, pure_t = time_run(runner, g, 7, kernel=backends["pure"])
                fast_part, fast_t = time_run(runner, g, 7, kernel=backends["speed"])
            same = bool(np.array_equal(pure_part.assignment, fast_part.assignment))
            ratio = pure_t / fast_t if fast_t > 0 else float("inf")
            print(f"{label:>22} {algo_name:>8} {pure_t:>10.3f} {fast_t:>10.3f} {ratio:>6.1f}x  {same}")
            if not same:
                print("BACKEND MISMATCH", file=sys.stderr)
                return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
