"""Time the compiled kernels against their pure Python bodies.

    python3 benchmarks/bench_kernels.py [--seed S] [--repeat R]

Both paths run the same function body on the same graphs; the compiled one
gets an int64 array, the pure one a list of Python ints. Results are checked
to agree before any timing is reported.
"""
import argparse
import time

import numpy as np

from vcblock import _kernels
from vcblock._accel import HAVE_NUMBA
from vcblock.exact import opt_value
from vcblock.generators import DEFAULT_SEED, random_graph, rng_from


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def bench_min_cover(graphs, repeat):
    def jit():
        return [_kernels._min_cover(np.array(g.masks(), dtype=np.int64), g.n, np.int64((1 << g.n) - 1), g.n + 1)
                for g in graphs]

    def pure():
        return [_kernels.PURE["_min_cover"](list(g.masks()), g.n, (1 << g.n) - 1, g.n + 1) for g in graphs]

    return jit, pure


def bench_blocking_table(graphs, repeat):
    opts = [opt_value(g) for g in graphs]

    def jit():
        return [_kernels._blocking_table(np.array(g.masks(), dtype=np.int64), g.n, o,
                                         np.arange(g.n, dtype=np.int64), g.n)
                for g, o in zip(graphs, opts)]

    def pure():
        return [_kernels.PURE["_blocking_table"](list(g.masks()), g.n, o, list(range(g.n)), g.n)
                for g, o in zip(graphs, opts)]

    return jit, pure


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba unavailable or disabled; nothing to compare")
        return
    rng = rng_from(args.seed)
    cover_graphs = [random_graph(rng, int(rng.integers(40, 52)), 0.12) for _ in range(20)]
    table_graphs = [random_graph(rng, int(rng.integers(10, 14)), 0.3) for _ in range(20)]
    cases = [
        ("min_cover n=40..51", bench_min_cover(cover_graphs, args.repeat)),
        ("blocking_table n=10..13", bench_blocking_table(table_graphs, args.repeat)),
    ]
    print(f"{'kernel':<26}{'jit s':>10}{'pure s':>10}{'speedup':>10}")
    for name, (jit, pure) in cases:
        jit()  # compile outside the timing
        tj, rj = _best(jit, args.repeat)
        tp, rp = _best(pure, 1)
        same = [tuple(map(int, a)) for a in rj] == [tuple(map(int, b)) for b in rp]
        if not same:
            raise SystemExit(f"{name}: compiled and pure results differ")
        print(f"{name:<26}{tj:>10.4f}{tp:>10.4f}{tp / tj:>9.1f}x")


if __name__ == "__main__":
    main()
