"""Compare the pure-Python and compiled integer kernels.

Times int_det, int_rank, mod_rank, and gp_extends on mixed workloads: small
matrices with machine-size entries (the compiled fast path), larger matrices,
and entries past 2**28 where both backends run exact object arithmetic.

Run:  python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit
from fractions import Fraction

from genpos._kernels import pure

try:
    from genpos._kernels import _fastrank as fast
except ImportError:
    fast = None

from genpos.geometry import Point


def _rand_matrix(rng, n, m, lo, hi):
    return [[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)]


def _gp_case(rng, d, k, spread):
    """A general-position prefix of k homogeneous rows plus one candidate."""
    pts = []
    while len(pts) < k + 1:
        cand = Point([Fraction(rng.randint(-spread, spread), rng.randint(1, 7))
                      for _ in range(d)])
        if pure.gp_extends([p.hom for p in pts], cand.hom, d):
            pts.append(cand)
    rows = [p.hom for p in pts[:-1]]
    return rows, pts[-1].hom, d


def build_cases(rng):
    cases = []
    for n, lo, hi, label in [
        (3, -50, 50, "det 3x3 small"),
        (4, -10**6, 10**6, "det 4x4 medium"),
        (4, -10**12, 10**12, "det 4x4 big entries"),
        (6, -100, 100, "det 6x6 small"),
    ]:
        mats = [_rand_matrix(rng, n, n, lo, hi) for _ in range(60)]
        cases.append((label, "int_det", lambda k, ms=mats: [k.int_det(M) for M in ms]))
    mats = [_rand_matrix(rng, 6, 9, -40, 40) for _ in range(40)]
    cases.append(("rank 6x9", "int_rank", lambda k, ms=mats: [k.int_rank(M) for M in ms]))
    mats = [_rand_matrix(rng, 12, 12, -10**9, 10**9) for _ in range(20)]
    cases.append(
        ("mod rank 12x12", "mod_rank",
         lambda k, ms=mats: [k.mod_rank(M, 2147483647) for M in ms])
    )
    for d, kk in [(2, 8), (3, 7)]:
        probes = [_gp_case(rng, d, kk, 30) for _ in range(25)]
        cases.append(
            ("gp_extends d=%d k=%d" % (d, kk), "gp_extends",
             lambda k, ps=probes: [k.gp_extends(r, nr, dd) for r, nr, dd in ps])
        )
    return cases


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(20240815)
    cases = build_cases(rng)

    if fast is None:
        print("compiled backend not built; timing the pure backend only")
    print("%-24s %12s %12s %9s" % ("case", "pure (ms)", "compiled", "speedup"))
    for label, _, run in cases:
        t_pure = min(timeit.repeat(lambda: run(pure), number=3, repeat=args.repeat))
        if fast is None:
            print("%-24s %12.3f %12s %9s" % (label, t_pure * 1e3 / 3, "-", "-"))
            continue
        expect = run(pure)
        got = run(fast)
        assert expect == got, "backend disagreement on %s" % label
        t_fast = min(timeit.repeat(lambda: run(fast), number=3, repeat=args.repeat))
        print(
            "%-24s %12.3f %12.3f %8.1fx"
            % (label, t_pure * 1e3 / 3, t_fast * 1e3 / 3, t_pure / t_fast)
        )


if __name__ == "__main__":
    main()
