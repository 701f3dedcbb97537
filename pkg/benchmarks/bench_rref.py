"""Benchmark the pure and compiled elimination lanes on real workloads.

Times `rank` on bar-complex boundary matrices (the shape that dominates
every computation in the package) plus one synthetic dense-ish matrix per
field.  Run from a checkout:

    python3 benchmarks/bench_rref.py
    python3 benchmarks/bench_rref.py --max-degree 5 --repeat 5
"""

import argparse
import random
import time
from fractions import Fraction

from hochcap import kernels, zoo
from hochcap.complexes import boundary_matrix
from hochcap.fields import QQ, PrimeField
from hochcap.linalg import SparseMat, rank


def random_matrix(field, nrows, ncols, density, rng):
    cols = []
    for _ in range(ncols):
        col = {}
        for i in range(nrows):
            if rng.random() < density:
                if field is QQ:
                    col[i] = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
                else:
                    col[i] = rng.randrange(field.p)
        cols.append(col)
    return SparseMat.from_columns(nrows, field, cols)


def workloads(max_degree):
    rng = random.Random(99)
    for name in ("truncated_cubic", "two_by_two_matrices", "f2_c2"):
        A = zoo.get(name)
        m = boundary_matrix(A.regular(), max_degree)
        yield f"boundary {name} n={max_degree} ({m.nrows}x{m.ncols})", m
    yield "random Q 120x120 d=0.15", random_matrix(QQ, 120, 120, 0.15, rng)
    yield "random F_97 200x200 d=0.2", random_matrix(PrimeField(97), 200, 200, 0.2, rng)


def time_rank(m, repeat):
    best = float("inf")
    got = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        got = rank(m)
        best = min(best, time.perf_counter() - t0)
    return best, got


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not kernels.compiled_available():
        print("compiled kernels not built; timing the pure lane only")
    lanes = ["pure"] + (["compiled"] if kernels.compiled_available() else [])

    rows = []
    for label, m in workloads(args.max_degree):
        timings = {}
        ranks = set()
        for lane in lanes:
            kernels.set_lane(lane)
            t, r = time_rank(m, args.repeat)
            timings[lane] = t
            ranks.add(r)
        assert len(ranks) == 1, f"lanes disagree on {label}"
        rows.append((label, timings, ranks.pop()))
    kernels.set_lane("auto")

    width = max(len(r[0]) for r in rows)
    header = f"{'workload':{width}}  {'rank':>5}  {'pure':>9}"
    if "compiled" in lanes:
        header += f"  {'compiled':>9}  {'speedup':>7}"
    print(header)
    print("-" * len(header))
    for label, timings, rk in rows:
        line = f"{label:{width}}  {rk:5d}  {timings['pure'] * 1e3:8.2f}m"
        if "compiled" in timings:
            ratio = timings["pure"] / timings["compiled"]
            line += f"  {timings['compiled'] * 1e3:8.2f}m  {ratio:6.2f}x"
        print(line)


if __name__ == "__main__":
    main()
