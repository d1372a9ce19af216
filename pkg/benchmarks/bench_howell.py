"""Compare the compiled and pure-Python Howell kernels.

Run as: python benchmarks/bench_howell.py [--sizes 8,16,32] [--repeat 5]
"""

import argparse
import random
import time

from ringscope import _backend
from ringscope._howell_py import howell_mod as howell_py


def bench(kernel, mats, ncols, n, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in mats:
            kernel([list(r) for r in m], ncols, n)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="4,8,16,32")
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--modulus", type=int, default=256)
    args = parser.parse_args()

    if _backend.BACKEND != "cython":
        print("compiled kernel unavailable; only timing the Python one")
    rng = random.Random(12345)
    print(f"{'size':>6} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for size in map(int, args.sizes.split(",")):
        mats = [[[rng.randrange(args.modulus) for _ in range(size)]
                 for _ in range(size)]
                for _ in range(args.count)]
        t_py = bench(howell_py, mats, size, args.modulus, args.repeat)
        if _backend.BACKEND == "cython":
            t_c = bench(_backend.howell_mod, mats, size, args.modulus,
                        args.repeat)
            print(f"{size:>6} {t_py:>11.4f}s {t_c:>11.4f}s {t_py / t_c:>8.1f}x")
        else:
            print(f"{size:>6} {t_py:>11.4f}s {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
