"""Time the compiled and pure-Python LR kernels on the same workload.

Usage: python benchmarks/bench_lr.py [--k 4] [--n 9] [--repeat 3]

The workload is every coefficient c^nu_{lam,mu} with lam, mu, nu in the
k x (n-k) box and |nu| = |lam| + |mu|. Both kernels must agree on every
coefficient; the script exits nonzero otherwise.
"""

from __future__ import annotations

import argparse
import sys
import time

from higherfano.schubert import partitions_in_box
from higherfano.schubert._kernel import compiled_lr_coefficient, python_lr_coefficient


def workload(k: int, n: int) -> list[tuple]:
    box = partitions_in_box(k, n - k)
    jobs = []
    for i, lam in enumerate(box):
        for mu in box[i:]:
            size = sum(lam) + sum(mu)
            if size <= k * (n - k):
                jobs += [(nu, lam, mu) for nu in partitions_in_box(k, n - k, size)]
    return jobs


def run(fn, jobs) -> tuple[float, list[int]]:
    start = time.perf_counter()
    out = [fn(nu, lam, mu) for nu, lam, mu in jobs]
    return time.perf_counter() - start, out


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    jobs = workload(args.k, args.n)
    print(f"Gr({args.k},{args.n}): {len(jobs)} coefficients")
    kernels = [("python", python_lr_coefficient)]
    if compiled_lr_coefficient is None:
        print("compiled kernel not built; timing the fallback only")
    else:
        kernels.append(("compiled", compiled_lr_coefficient))
    results, times = {}, {}
    for name, fn in kernels:
        best = None
        for _ in range(args.repeat):
            t, out = run(fn, jobs)
            best = t if best is None else min(best, t)
        results[name], times[name] = out, best
        print(f"  {name:<9} {best:8.3f} s")
    if len(results) == 2:
        if results["python"] != results["compiled"]:
            print("kernels disagree", file=sys.stderr)
            return 1
        print(f"  speedup   {times['python'] / times['compiled']:8.1f}x, outputs identical")
    return 0


if __name__ == "__main__":
    sys.exit(main())
