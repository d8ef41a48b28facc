"""Time the compiled field kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--points N] [--centers M] [--repeat R]
"""

import argparse
import timeit

import numpy as np

from graviton import _ghkernel_py

try:
    from graviton import _ghkernel
except ImportError:
    _ghkernel = None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--centers", type=int, nargs="+", default=[2, 8, 32])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ghkernel is None:
        print("compiled extension not built; only the numpy fallback is available")
    rng = np.random.default_rng(0)
    direction = np.array([0.36, 0.48, 0.8])
    print(f"{'kernel':<16}{'centers':>8}{'python ms':>12}{'cython ms':>12}{'speedup':>9}{'max diff':>11}")
    for m in args.centers:
        P = np.ascontiguousarray(rng.normal(size=(m, 3)))
        X = np.ascontiguousarray(rng.normal(size=(args.points, 3)) * 3)
        calls = {
            "potential_terms": lambda mod: mod.potential_terms(P, X),
            "center_terms": lambda mod: mod.center_terms(P, X),
            "gauge_terms": lambda mod: mod.gauge_terms(P, X, direction),
        }
        for name, call in calls.items():
            t_py = min(timeit.repeat(lambda: call(_ghkernel_py), number=1, repeat=args.repeat))
            if _ghkernel is None:
                print(f"{name:<16}{m:>8}{1e3 * t_py:>12.2f}{'-':>12}{'-':>9}{'-':>11}")
                continue
            t_cy = min(timeit.repeat(lambda: call(_ghkernel), number=1, repeat=args.repeat))
            diff = max(float(np.abs(a - b).max()) for a, b in zip(call(_ghkernel_py), call(_ghkernel)))
            print(f"{name:<16}{m:>8}{1e3 * t_py:>12.2f}{1e3 * t_cy:>12.2f}{t_py / t_cy:>8.1f}x{diff:>11.1e}")


if __name__ == "__main__":
    main()
