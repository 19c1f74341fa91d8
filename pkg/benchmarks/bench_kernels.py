"""Compiled kernels vs the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--metric quarter]

Times one move-table column build and a complete compact census with each
backend, checks that both give identical results, and prints a small table.
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from cubediam import kernels
from cubediam.census import compact_bfs
from cubediam.codec import generator_action
from cubediam.cube import metric_generators, parse_generator


def _best(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), out


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--metric", default="quarter", choices=("half", "quarter", "semi-quarter", "bi-quarter"))
    args = ap.parse_args(argv)

    backends = {"numpy": kernels.implementation("numpy")}
    try:
        backends["compiled"] = kernels.implementation("compiled")
    except ImportError:
        print("compiled extension not built; timing the numpy fallback only")

    src, twist = generator_action(parse_generator("R", 2))
    m = metric_generators(args.metric, 2)
    # warm the move-table cache so the census timing is the search alone
    compact_bfs(m, max_depth=1)

    results = {}
    print(f"{'kernel':<24}{'backend':<10}{'best s':>10}{'median s':>10}")
    for name, impl in backends.items():
        best, med, col = _best(lambda: impl.build_table(src, twist), args.repeat)
        print(f"{'build_table (R)':<24}{name:<10}{best:>10.3f}{med:>10.3f}")
        best2, med2, (levels, depth) = _best(lambda: compact_bfs(m, backend=impl), args.repeat)
        print(f"{'census ' + args.metric:<24}{name:<10}{best2:>10.3f}{med2:>10.3f}")
        results[name] = (best, best2, col, levels, depth)

    if len(results) == 2:
        a, b = results["compiled"], results["numpy"]
        same = np.array_equal(a[2], b[2]) and a[3] == b[3] and np.array_equal(a[4], b[4])
        print(f"identical outputs: {same}")
        print(f"speed-up: build_table x{b[0] / a[0]:.1f}, census x{b[1] / a[1]:.1f}")


if __name__ == "__main__":
    main()
