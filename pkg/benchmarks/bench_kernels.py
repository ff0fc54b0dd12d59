"""Compare the compiled and pure-Python Chern-class scan.

    python3 benchmarks/bench_kernels.py [--repeat N]

Runs the exhaustive round trip used by the acceptance suite (every class
with c1 in [-4, 4], c2 in [1, 80] on all five CICYs) through each backend
and checks they return identical matches.
"""
import argparse
import time

from acmbundles import grr, kernels
from acmbundles.core_model import catalog


def workload():
    jobs = []
    for X in catalog():
        for c1 in range(-4, 5):
            for c2 in range(1, 81):
                if grr.grr_chi_exact(X, c1, c2).denominator == 1:
                    prof = grr.chi_profile(X, c1, c2)
                    jobs.append((X, prof))
    return jobs


def run(jobs, backend):
    out = []
    for X, prof in jobs:
        out.append(kernels.scan_chern(X.r, X.k, (-6, 6), (0, 100), prof.twists, prof.values, backend=backend))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    jobs = workload()
    backends = ["python"] + (["cython"] if kernels.compiled_backend is not None else [])
    results, timings = {}, {}
    for b in backends:
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            results[b] = run(jobs, b)
            best = min(best, time.perf_counter() - t0)
        timings[b] = best
        print(f"{b:<7} {len(jobs)} scans  best of {args.repeat}: {best * 1000:9.1f} ms")
    if "cython" in results:
        assert results["cython"] == results["python"], "backends disagree"
        print(f"speedup: {timings['python'] / timings['cython']:.1f}x (identical results)")
    else:
        print("compiled kernels not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
