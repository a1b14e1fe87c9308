#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallbacks.

Measures the two hot loops on the workloads that dominate suite runtime:
the truncated expansion of the root-set product at ranks 4..6 (35, 126 and
462 linear forms) and a dense truncated product of rational polynomials.

Run:
    python3 benchmarks/bench_kernels.py
"""

import random
import time
from fractions import Fraction

from redchern import _mulcore_py
from redchern.symfun import root_compositions

try:
    from redchern import _mulcore
except ImportError:
    _mulcore = None


def timeit(fn, repeat=5):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def chain_workloads():
    for n in (4, 5, 6):
        forms = root_compositions(n)
        yield f"chain rank {n} ({len(forms)} forms, cap {n})", (
            lambda f=forms, n=n: lambda m: m.expand_linear_chain(f, n, n)
        )()


def mul_workload():
    rng = random.Random(7)
    nvars = 4
    wdegs = (1, 2, 3, 4)

    def dense(terms):
        return {
            tuple(rng.randint(0, 3) for _ in range(nvars)): Fraction(
                rng.randint(-99, 99), rng.randint(1, 30)
            )
            for _ in range(terms)
        }

    pa, pb = dense(160), dense(160)
    return "mul 160x160 terms (cap 8)", lambda m: m.mul_trunc(pa, pb, wdegs, 8)


def main():
    rows = list(chain_workloads()) + [mul_workload()]
    print(f"{'workload':<38} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, call in rows:
        t_py, r_py = timeit(lambda: call(_mulcore_py))
        if _mulcore is None:
            print(f"{label:<38} {t_py * 1e3:>8.1f}ms {'n/a':>10} {'':>8}")
            continue
        t_cy, r_cy = timeit(lambda: call(_mulcore))
        assert r_py == r_cy, "backends disagree"
        print(
            f"{label:<38} {t_py * 1e3:>8.1f}ms {t_cy * 1e3:>8.1f}ms"
            f" {t_py / t_cy:>7.1f}x"
        )
    if _mulcore is None:
        print("compiled kernel not built; run: python3 setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
