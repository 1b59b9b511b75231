#!/usr/bin/env python3
"""Benchmark the compiled digit kernels against the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--repeat N]

Times three workloads on both implementations (when the compiled extension
is available) and prints a small table with the speedup:

* sign_pair: a batch of random exact sign determinations;
* expand_pair: full orbit detection for every b/a with a <= 120;
* digits_prefix: long digit prefixes for a fixed set of states.
"""

import argparse
import random
import time

from zeckinv import _pure

try:
    from zeckinv import _kernel
except ImportError:
    _kernel = None


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workload_sign(mod):
    rng = random.Random(42)
    pairs = [
        (rng.randint(-10**9, 10**9), rng.randint(-10**9, 10**9))
        for _ in range(20000)
    ]

    def run():
        sign = mod.sign_pair
        for a, b in pairs:
            sign(a, b)

    return run


def workload_expand(mod):
    def run():
        expand = mod.expand_pair
        for a in range(1, 121):
            for b in range(a):
                expand(b, 0, a)

    return run


def workload_prefix(mod):
    states = [(1, 0, 2), (2, 1, 7), (30, -11, 97), (355, 0, 1130)]

    def run():
        prefix = mod.digits_prefix
        for p, q, den in states:
            prefix(p, q, den, 20000)

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repeats")
    args = parser.parse_args()

    workloads = [
        ("sign_pair x20000", workload_sign),
        ("expand_pair a<=120", workload_expand),
        ("digits_prefix 4x20000", workload_prefix),
    ]

    print(f"{'workload':<24} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>9}")
    for name, make in workloads:
        t_pure = time_call(make(_pure), args.repeat)
        if _kernel is None:
            print(f"{name:<24} {t_pure:>10.4f} {'n/a':>13} {'n/a':>9}")
            continue
        t_fast = time_call(make(_kernel), args.repeat)
        print(
            f"{name:<24} {t_pure:>10.4f} {t_fast:>13.4f} "
            f"{t_pure / t_fast:>8.1f}x"
        )
    if _kernel is None:
        print("\ncompiled extension not available; showing pure timings only")


if __name__ == "__main__":
    main()
