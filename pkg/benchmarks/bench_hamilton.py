#!/usr/bin/env python3
"""Benchmark the compiled search kernel against the pure-Python fallback.

Both kernels run the identical algorithm with identical expansion order,
so the comparison isolates the interpreter overhead.  Each case reports
status, expanded nodes (which must agree between kernels) and wall time.

Usage: python benchmarks/bench_hamilton.py [--heavy]
The --heavy flag adds a multi-million-node budget run on odd(5).
"""

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from kneserlab import _hamcore_py  # noqa: E402
from kneserlab.graphs import Family, build  # noqa: E402

try:
    from kneserlab import _hamcore
except ImportError:
    _hamcore = None

STATUS = {0: "found", 1: "none", 2: "budget"}


def prepare(family, seed):
    g = build(family)
    neighbors = [list(g.neighbors(i)) for i in range(g.n_vertices)]
    rank = list(range(g.n_vertices))
    random.Random(seed).shuffle(rank)
    return g, neighbors, rank


def time_kernel(kernel, neighbors, rank, max_nodes, max_seconds, repeats):
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = kernel.solve(neighbors, 0, rank, max_nodes, max_seconds)
        times.append(time.perf_counter() - t0)
    return result, min(times), statistics.median(times)


CASES = [
    ("petersen proof (odd 3)", Family.odd(3), 0, 10**6, 30.0, 25),
    ("odd 4 search", Family.odd(4), 0, 10**6, 30.0, 25),
    ("middle 3 search", Family.middle_levels(3), 0, 10**6, 30.0, 25),
    ("middle 4 search", Family.middle_levels(4), 0, 10**6, 30.0, 10),
    ("odd 5 search (seed 1)", Family.odd(5), 1, 10**6, 60.0, 5),
]

HEAVY_CASES = [
    ("odd 5 hard seed, 3M-node budget", Family.odd(5), 0, 3 * 10**6, 600.0, 1),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--heavy", action="store_true",
                        help="include the multi-million-node budget case")
    args = parser.parse_args()

    cases = CASES + (HEAVY_CASES if args.heavy else [])
    sys.setrecursionlimit(10000)

    print(f"{'case':<34} {'status':<7} {'nodes':>9} "
          f"{'python':>10} {'cython':>10} {'speedup':>8}")
    print("-" * 84)
    for name, family, seed, max_nodes, max_seconds, repeats in cases:
        _g, neighbors, rank = prepare(family, seed)
        py_result, py_best, _ = time_kernel(
            _hamcore_py, neighbors, rank, max_nodes, max_seconds, repeats
        )
        row = (f"{name:<34} {STATUS[py_result[0]]:<7} {py_result[2]:>9} "
               f"{py_best * 1000:>8.2f}ms")
        if _hamcore is not None:
            cy_result, cy_best, _ = time_kernel(
                _hamcore, neighbors, rank, max_nodes, max_seconds, repeats
            )
            if cy_result[:2] != py_result[:2] or cy_result[2] != py_result[2]:
                raise AssertionError(f"kernels disagree on {name}")
            row += f" {cy_best * 1000:>8.2f}ms {py_best / cy_best:>7.1f}x"
        else:
            row += f" {'absent':>10} {'-':>8}"
        print(row)
    if _hamcore is None:
        print("\ncompiled kernel not built; run: python setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
