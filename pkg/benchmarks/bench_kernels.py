#!/usr/bin/env python3
"""Time the two subset-enumeration backends against each other.

For each order, builds a random connected graph, forces TDPOLY_BACKEND to
each implementation in turn, times the size-count kernel, and checks that the
two count vectors agree bit for bit before printing a row.

    python3 benchmarks/bench_kernels.py --n-min 14 --n-max 22 --repeats 3
"""

import argparse
import os
import time

import numpy as np

from tdpoly.graph import random_connected_graph
from tdpoly.kernels import BACKEND_ENV_VAR, size_counts


def neighbor_masks(g) -> np.ndarray:
    pos = {v: i for i, v in enumerate(g.vertices)}
    masks = np.zeros(g.order, dtype=np.int64)
    for u, v in g.edges:
        masks[pos[u]] |= np.int64(1) << pos[v]
        masks[pos[v]] |= np.int64(1) << pos[u]
    return masks


def timed(masks: np.ndarray, backend: str, repeats: int):
    """Best-of-N wall time for one backend; returns (counts, seconds)."""
    previous = os.environ.get(BACKEND_ENV_VAR)
    os.environ[BACKEND_ENV_VAR] = backend
    try:
        counts = size_counts(masks)  # warm: jit compile, page in
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            counts = size_counts(masks)
            best = min(best, time.perf_counter() - t0)
        return counts, best
    finally:
        if previous is None:
            os.environ.pop(BACKEND_ENV_VAR, None)
        else:
            os.environ[BACKEND_ENV_VAR] = previous


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=14)
    parser.add_argument("--n-max", type=int, default=22)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--density", type=float, default=0.3)
    args = parser.parse_args()

    print(f"{'n':>3} {'masks':>12} {'numba ms':>12} {'numpy ms':>12} {'speedup':>9}")
    for n in range(args.n_min, args.n_max + 1):
        g = random_connected_graph(n, args.density, args.seed + n)
        masks = neighbor_masks(g)
        try:
            nb_counts, nb_best = timed(masks, "numba", args.repeats)
        except RuntimeError:
            print(f"{n:>3} {1 << n:>12} {'unavailable':>12}")
            continue
        np_counts, np_best = timed(masks, "numpy", args.repeats)
        if not np.array_equal(nb_counts, np_counts):
            print(f"backend disagreement at n={n}: {nb_counts} vs {np_counts}")
            return 1
        print(
            f"{n:>3} {1 << n:>12} {nb_best * 1e3:>12.2f} {np_best * 1e3:>12.2f}"
            f" {np_best / nb_best:>8.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
