"""Benchmark the compiled kernels against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py
Both lanes are imported directly (no env var needed) so one process can
time them side by side.
"""

import time

import numpy as np

from diskbands import _kernels_py

try:
    from diskbands import _kernels
except ImportError:
    _kernels = None


def _time(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_bessel(mod):
    def run():
        total = 0.0
        for n in range(0, 13):
            x = 0.05
            while x < 45.0:
                total += mod.bessel_j_kernel(n, x)
                x += 0.05
        return total

    return _time(run)


def bench_tridiag(mod):
    rng = np.random.default_rng(1234)
    n = 2000
    d = np.ascontiguousarray(rng.uniform(1.0, 3.0, n))
    e = np.ascontiguousarray(rng.uniform(-1.0, 1.0, n - 1))

    def run():
        return mod.tridiag_smallest_eigenvalues(d, e, 4)

    return _time(run)


def main():
    rows = []
    t_py = bench_bessel(_kernels_py)
    rows.append(("bessel_j sweep (13 orders x 900 args)", t_py,
                 bench_bessel(_kernels) if _kernels else None))
    t_py = bench_tridiag(_kernels_py)
    rows.append(("tridiag 4 smallest eigenvalues (n=2000)", t_py,
                 bench_tridiag(_kernels) if _kernels else None))

    print("%-42s %12s %12s %8s" % ("kernel", "python [ms]", "compiled [ms]", "speedup"))
    for name, py, comp in rows:
        if comp is None:
            print("%-42s %12.2f %12s %8s" % (name, py * 1e3, "n/a", "n/a"))
        else:
            print("%-42s %12.2f %12.2f %7.1fx" % (name, py * 1e3, comp * 1e3, py / comp))
    if _kernels is None:
        print("compiled extension not built; only the fallback lane was timed")


if __name__ == "__main__":
    main()
