#!/usr/bin/env python3
"""End-to-end report on the bundled families of equivalent fields.

Computes, for each pair: the invariant battery, the splitting data at
the ramified primes, the equivalence verdict, and the commensurability
verdict for SL3 over the matching place sets.  Everything is exact; the
script is a readable walk through the whole pipeline.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from arithmeq.equiv import arith_equiv, invariant_battery
from arithmeq.exact.intpoly import IntPoly
from arithmeq.intutil import format_factored
from arithmeq.nf import decompose, make_field, places_over
from arithmeq.sarith import GroupSpec, Triple, decide_commensurability

PAIRS = [
    (
        "octic radicals of 3",
        IntPoly([-3] + [0] * 7 + [1]),
        IntPoly([-48] + [0] * 7 + [1]),
        [2, 3],
    ),
    (
        "octic radicals of 97",
        IntPoly([-97] + [0] * 7 + [1]),
        IntPoly([-1552] + [0] * 7 + [1]),
        [2, 97],
    ),
    (
        "totally real degree seven",
        IntPoly([-2, 0, 24, 10, -28, -18, 0, 1]),
        IntPoly([11, 13, -41, -19, 51, -15, -3, 1]),
        [2, 13, 191],
    ),
]


def main() -> None:
    for title, fk, fl, ram in PAIRS:
        print(f"== {title} ==")
        t0 = time.time()
        k, l = make_field(fk), make_field(fl)
        battery = invariant_battery(k, l)
        print(f"defining polynomials: {fk}  |  {fl}")
        print(
            f"discriminant {format_factored(k.field_disc)}, "
            f"signature {k.signature}, battery all equal: {battery.all_equal}"
        )
        for p in ram:
            pk = decompose(k, p).pairs
            pl = decompose(l, p).pairs
            print(f"  splitting over {p}: {pk} vs {pl}")
        verdict = arith_equiv(k, l, 1000)
        print(f"equivalence verdict: {verdict.verdict} (method {verdict.method})")
        sl3 = GroupSpec("SL", 3)
        sa = frozenset((p, pl.ordinal) for p in ram for pl in places_over(k, p))
        sb = frozenset((p, pl.ordinal) for p in ram for pl in places_over(l, p))
        outcome = decide_commensurability(
            Triple(k, sl3, sa), Triple(l, sl3, sb), 1000
        )
        print(f"SL3 over all places above {ram}: {outcome.outcome}")
        print(f"({time.time() - t0:.2f}s)")
        print()


if __name__ == "__main__":
    main()
