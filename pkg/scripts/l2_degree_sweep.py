#!/usr/bin/env python3
"""Sweep the l2-Betti concentration degree as the place set grows.

For the split form of signature (3,2) over the totally real degree-7
field, each additional finite place shifts the concentration degree up
by its local rank (two), so the degree is 21 + 2m with m finite places.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from arithmeq.exact.intpoly import IntPoly
from arithmeq.intutil import primes_upto
from arithmeq.nf import make_field, places_over
from arithmeq.sarith import GroupSpec, Triple, l2_profile, s_rank

def main() -> None:
    k = make_field(IntPoly([-2, 0, 24, 10, -28, -18, 0, 1]))
    spec = GroupSpec("Spin", 5, tuple([(3, 2)] * 7))
    finite = []
    for p in primes_upto(40):
        for pl in places_over(k, p):
            finite.append((p, pl.ordinal))
    print("m  |S|  s_rank  degree  euler_sign")
    for m in range(0, 8):
        t = Triple(k, spec, frozenset(finite[:m]))
        prof = l2_profile(t)
        total_s = 7 + m
        sign = {1: "+1", 0: "0", -1: "-1"}[prof.euler_sign]
        print(f"{m}  {total_s:3d}  {s_rank(t):6d}  {prof.degree:6d}  {sign:>10}")
        assert prof.degree == 7 + 2 * total_s

if __name__ == "__main__":
    main()
