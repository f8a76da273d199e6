"""Compare the compiled kernel backend against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--n-max N] [--repeats R]
"""

import argparse
import time

import numpy as np

from sigmalab import kernels
from sigmalab.kernels import _fallback


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=10**6)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    print(f"active backend: {kernels.BACKEND}")
    if kernels.BACKEND == "fallback":
        print("compiled extension unavailable; timing fallback against itself")

    rows = []

    t_active = best_of(lambda: kernels.sigma_sieve(args.n_max, 0.25), args.repeats)
    t_fb = best_of(lambda: _fallback.sigma_sieve(args.n_max, 0.25), args.repeats)
    rows.append((f"sigma_sieve n_max={args.n_max}", t_active, t_fb))

    weights = np.arange(1, args.n_max + 1, dtype=np.float64) ** -0.875
    x = float(args.n_max) - 0.5
    t_active = best_of(
        lambda: kernels.oscillating_cosine_sum(weights, x), args.repeats
    )
    t_fb = best_of(
        lambda: _fallback.oscillating_cosine_sum(weights, x), args.repeats
    )
    rows.append((f"oscillating_cosine_sum N={args.n_max}", t_active, t_fb))

    print(f"{'operation':<42} {'active':>10} {'fallback':>10} {'speedup':>8}")
    for name, ta, tf in rows:
        print(f"{name:<42} {ta * 1e3:>8.2f}ms {tf * 1e3:>8.2f}ms {tf / ta:>7.2f}x")


if __name__ == "__main__":
    main()
