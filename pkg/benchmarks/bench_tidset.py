#!/usr/bin/env python3
"""Benchmark the compiled tidset kernels against the numpy fallback.

Times the three set operations over sorted uint32 arrays at several sizes,
then (with --mine) times a full paper-scale mining pass under the backend
currently selected at import. To compare end-to-end mining across backends:

    python benchmarks/bench_tidset.py --mine
    RULECOVER_KERNEL=python python benchmarks/bench_tidset.py --mine
"""

import argparse
import statistics
import time

import numpy as np

from rulecover._kernels import _tidset_py

try:
    from rulecover._kernels import _tidset_cy
except ImportError:
    _tidset_cy = None

SIZES = [100, 1_000, 10_000, 100_000]
OPS = ["intersect", "union", "difference"]


def make_pair(rng, size):
    universe = size * 4
    a = np.unique(rng.integers(1, universe, size=size).astype(np.uint32))
    b = np.unique(rng.integers(1, universe, size=size).astype(np.uint32))
    return a, b


def time_op(fn, a, b, repeat=7, loops=None):
    if loops is None:
        loops = max(1, int(2e6 / (len(a) + len(b) + 1)))
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        for _ in range(loops):
            fn(a, b)
        samples.append((time.perf_counter() - start) / loops)
    return statistics.median(samples)


def bench_kernels():
    rng = np.random.default_rng(2024)
    backends = [("numpy-fallback", _tidset_py)]
    if _tidset_cy is not None:
        backends.insert(0, ("cython", _tidset_cy))
    else:
        print("compiled kernels not built; timing the fallback only\n")

    header = f"{'op':<12}{'size':>9}" + "".join(f"{name:>18}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for op in OPS:
        for size in SIZES:
            a, b = make_pair(rng, size)
            row = f"{op:<12}{size:>9}"
            times = []
            for _, mod in backends:
                t = time_op(getattr(mod, op), a, b)
                times.append(t)
                row += f"{t * 1e6:>15.2f} us"
            if len(times) == 2:
                row += f"{times[1] / times[0]:>9.1f}x"
            print(row)
        print()


def bench_mining():
    from rulecover import KERNEL_BACKEND, MiningConfig, generate_synthetic, mine

    print(f"mining benchmark (backend: {KERNEL_BACKEND})")
    d = generate_synthetic(2680, 71, (2, 4), seed=42)
    start = time.perf_counter()
    mined = mine(d, MiningConfig(0.3, 0.8))
    elapsed = time.perf_counter() - start
    print(f"  2680x71 records, support 0.3, confidence 0.8: "
          f"{len(mined.rules)} rules in {elapsed:.2f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--mine", action="store_true",
                        help="also run a full paper-scale mining pass")
    args = parser.parse_args()
    bench_kernels()
    if args.mine:
        bench_mining()


if __name__ == "__main__":
    main()
