"""Compare the compiled and numpy section-sum kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--sizes 1000 20000 200000]

Prints best-of-N wall time per call and the largest disagreement between
backends for each section length, plus one end-to-end discriminant solve.
"""

import argparse
import math
import time

import numpy as np

from gramdisc import kernels


def best_time(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_sizes(sizes, repeat):
    print(f"{'N':>8} {'comp':>5} {'numpy ms':>10} {'cython ms':>10} {'speedup':>8} {'max diff':>10}")
    for N in sizes:
        kp1 = np.arange(2, N + 2, dtype=np.float64)
        logs = np.log(kp1)
        w = 1.0 / np.sqrt(kp1)
        t = 2.0 * N + 1.0
        th, thp = 0.7, 0.5 * math.log(t / (2 * math.pi))
        for comp in (False, True):
            py = lambda: kernels.python_section_sums(th, thp, t, logs, w, comp)
            tp = best_time(py, repeat)
            if kernels.compiled_section_sums is None:
                print(f"{N:>8} {comp!s:>5} {tp * 1e3:>10.3f} {'n/a':>10}")
                continue
            cy = lambda: kernels.compiled_section_sums(th, thp, t, logs, w, comp)
            tc = best_time(cy, repeat)
            diff = max(abs(a - b) for a, b in zip(py(), cy()))
            print(f"{N:>8} {comp!s:>5} {tp * 1e3:>10.3f} {tc * 1e3:>10.3f} "
                  f"{tp / tc:>8.2f} {diff:>10.2e}")


def bench_discriminant(repeat):
    from gramdisc.discriminant import discriminant
    from gramdisc.section import ParameterVector
    orig = kernels.section_sums
    out = {}
    for name, fn in (("numpy", kernels.python_section_sums),
                     ("cython", kernels.compiled_section_sums)):
        if fn is None:
            continue
        kernels.section_sums = fn
        try:
            out[name] = best_time(lambda: discriminant(730119, ParameterVector.ones()), repeat)
        finally:
            kernels.section_sums = orig
    print("discriminant(730119, ones), ~2e5 terms, 16 continuation steps:")
    for name, secs in out.items():
        print(f"  {name:>6}: {secs:.3f} s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--sizes", type=int, nargs="+", default=[1000, 20_000, 200_000])
    parser.add_argument("--skip-solve", action="store_true")
    args = parser.parse_args()
    print(f"active backend: {kernels.BACKEND}")
    bench_sizes(args.sizes, args.repeat)
    if not args.skip_solve:
        bench_discriminant(max(1, args.repeat // 2))


if __name__ == "__main__":
    main()
