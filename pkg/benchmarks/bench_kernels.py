"""Compare the compiled and pure-Python search kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both modules are imported directly, so the comparison does not depend on
which backend ``italdom`` selected at import.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from italdom import _pykernels
from italdom.families import build_family, random_digraph
from italdom.idf import branch_order, gamma_italian, upper_bound_witness

try:
    from italdom import _ckernels
except ImportError:
    _ckernels = None


def gamma_workload(n: int, count: int, seed: int):
    jobs = []
    for i in range(count):
        d = random_digraph(n, 0.3, seed + i)
        budget = upper_bound_witness(d).weight - 1
        jobs.append((d.order, d.in_masks, d.out_masks, branch_order(d), budget, 0))
    return jobs


def run_gamma(mod, jobs) -> int:
    total = 0
    for args in jobs:
        total += mod.best_idf(*args)[3]
    return total


def bondage_job(spec: str):
    d = build_family(spec)
    arcs = d.arcs()
    gamma = gamma_italian(d).value
    return d, [t for t, _ in arcs], [h for _, h in arcs], gamma


def run_bondage(mod, job, k: int) -> int:
    d, tails, heads, gamma = job
    # cold cache each run so both modules do the same work
    _, nodes = mod.first_bondage_subset(
        d.order, d.in_masks, d.out_masks, tails, heads, k, gamma, branch_order(d), []
    )
    return nodes


def timed(fn, repeat: int) -> tuple[float, object]:
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times), result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    sizes = (10, 12) if args.quick else (10, 12, 14, 16)
    workloads = [(f"best_idf n={n} x20", lambda mod, j=gamma_workload(n, 20, 100 * n): run_gamma(mod, j))
                 for n in sizes]
    bondage = [("kbip:3,4", 2), ("complete:5", 3)] if args.quick else [("kbip:3,4", 2), ("complete:5", 3),
                                                                        ("kbip:4,5", 4)]
    for spec, k in bondage:
        job = bondage_job(spec)
        workloads.append((f"bondage {spec} k={k}", lambda mod, j=job, k=k: run_bondage(mod, j, k)))

    print(f"{'workload':<28}{'python_s':>11}{'cython_s':>11}{'speedup':>10}")
    for name, fn in workloads:
        t_py, r_py = timed(lambda: fn(_pykernels), args.repeat)
        t_c, r_c = timed(lambda: fn(_ckernels), args.repeat)
        if r_py != r_c:
            print(f"{name}: node counts differ (python {r_py}, cython {r_c})", file=sys.stderr)
            return 1
        print(f"{name:<28}{t_py:>11.4f}{t_c:>11.4f}{t_py / max(t_c, 1e-9):>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
