"""Exact real-root counting via Sturm chains.

The chain is kept over Z by taking pseudo-remainders and stripping a
positive content, so every sign agrees with the rational Sturm sequence.
"""

from __future__ import annotations

from ..errors import DegreeError, SquarefreeError
from .intpoly import IntPoly, poly_gcd


def sturm_chain(f: IntPoly) -> list[IntPoly]:
    """Sturm sequence of a squarefree polynomial, integer-scaled."""
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        prev, cur = chain[-2], chain[-1]
        _, rem, k = prev.pseudo_divmod(cur)
        if rem.is_zero:
            break
        # pseudo-remainder = lc(cur)^k * true remainder; flip the sign back
        # if the multiplier is negative, then negate for the Sturm recursion.
        if cur.lc < 0 and k % 2:
            rem = -rem
        g = rem.content()
        chain.append(IntPoly(-c // g for c in rem.coeffs))
    return chain


def _variations(signs: list[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a * b < 0)


def count_real_roots(f: IntPoly) -> int:
    """Number of distinct real roots of squarefree f (whole real line)."""
    chain = sturm_chain(f)
    sign = lambda c: (c > 0) - (c < 0)
    at_plus = [sign(g.lc) for g in chain]
    at_minus = [sign(g.lc) * (-1 if g.degree % 2 else 1) for g in chain]
    return _variations(at_minus) - _variations(at_plus)


def sturm_signature(f: IntPoly) -> tuple[int, int]:
    """Signature (r, s): real root count and conjugate complex pair count.

    Requires deg f >= 1 and f squarefree; r + 2s = deg f.
    """
    if f.degree < 1:
        raise DegreeError("signature needs degree >= 1")
    if poly_gcd(f, f.derivative()).degree > 0:
        raise SquarefreeError("polynomial has a repeated root")
    r = count_real_roots(f)
    return r, (f.degree - r) // 2
