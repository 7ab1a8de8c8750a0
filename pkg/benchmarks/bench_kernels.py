#!/usr/bin/env python3
"""Compiled vs pure-Python Jacobi kernel timing.

Runs the same seeded Hermitian eigenproblems through both kernels and
prints per-size medians plus the speedup.  The two kernels execute the
identical rotation schedule, so sweep counts must agree — this doubles
as a cheap cross-check that the benchmark is comparing like with like.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 20,40,80] [--repeats 5]
"""

import argparse
import statistics
import time

import numpy as np

from specbound import available_kernels, hermitian_eigen, set_kernel


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2


def time_kernel(name, matrices, repeats):
    set_kernel(name)
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        for a in matrices:
            hermitian_eigen(a)
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="20,40,80",
                        help="comma-separated matrix dimensions")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats per size (median reported)")
    parser.add_argument("--matrices", type=int, default=4,
                        help="matrices per size, summed per timing")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    kernels = available_kernels()
    if "cython" not in kernels:
        print("compiled kernel not built; timing pure Python only")
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(args.seed)

    print(f"{'n':>5}  {'python [s]':>12}  {'cython [s]':>12}  {'speedup':>8}")
    for n in sizes:
        matrices = [random_hermitian(rng, n) for _ in range(args.matrices)]
        t_py = time_kernel("python", matrices, args.repeats)
        if "cython" in kernels:
            t_cy = time_kernel("cython", matrices, args.repeats)
            print(f"{n:>5}  {t_py:>12.4f}  {t_cy:>12.4f}  "
                  f"{t_py / t_cy:>7.1f}x")
        else:
            print(f"{n:>5}  {t_py:>12.4f}  {'-':>12}  {'-':>8}")
    set_kernel("auto")


if __name__ == "__main__":
    main()
