"""Compiled vs pure-Python kernels on the resolvent sweep and the stabilizer brute force.

    python3 benchmarks/bench_kernels.py [--forms N] [--coord-box B] [--stab-bound S]

The resolvent sweep is the criterion-9 workload: for each quartic in the |f_i| <= 2
box, every pair (x, y) in the coordinate box [-B, B]^3 (15625 pairs at B = 2).
"""

import argparse
import time

from quarticrings import kernels
from quarticrings.resolvent import resolvent_data
from quarticrings.sweeps import enumerate_forms


def bench_resolvent(forms, bound, impl):
    prepared = []
    for f in forms:
        rd = resolvent_data(f)
        w, t = rd.phi_forms_zeta()
        prepared.append((rd.Q.mult, w.coeffs, t.coeffs, rd.delta))
    t0 = time.perf_counter()
    bad = 0
    for mult, w, t, delta in prepared:
        bad += kernels.resolvent_violations(mult, w, t, delta, bound, impl=impl)[0]
    return time.perf_counter() - t0, bad


def bench_stabilizer(bound, impl):
    t0 = time.perf_counter()
    found = kernels.stabilizer_bruteforce(bound, impl=impl)
    return time.perf_counter() - t0, len(found)


def main():
    p = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    p.add_argument("--forms", type=int, default=3125, help="number of box forms to sweep")
    p.add_argument("--coord-box", type=int, default=2)
    p.add_argument("--stab-bound", type=int, default=6)
    args = p.parse_args()

    forms = list(enumerate_forms("bqf", 2))[: args.forms]
    side = (2 * args.coord_box + 1) ** 3
    iterations = len(forms) * side * side
    print(f"kernels available: {kernels.IMPLEMENTATION}")
    print(f"resolvent sweep: {len(forms)} forms x {side * side} pairs = {iterations:,} inner iterations")
    impls = ["python"] + (["compiled"] if kernels.IMPLEMENTATION == "compiled" else [])
    times = {}
    for impl in impls:
        sec, bad = bench_resolvent(forms, args.coord_box, impl)
        times[impl] = sec
        print(f"  {impl:9s} {sec:8.2f}s  {iterations / sec / 1e6:8.1f} M it/s  violations={bad}")
    if len(times) == 2:
        print(f"  speedup   {times['python'] / times['compiled']:8.1f}x")

    print(f"stabilizer brute force, entries in [-{args.stab_bound}, {args.stab_bound}]:")
    stimes = {}
    for impl in impls:
        sec, n = bench_stabilizer(args.stab_bound, impl)
        stimes[impl] = sec
        print(f"  {impl:9s} {sec:8.4f}s  elements={n}")
    if len(stimes) == 2:
        print(f"  speedup   {stimes['python'] / stimes['compiled']:8.1f}x")


if __name__ == "__main__":
    main()
