"""Factorization over the rationals: Hensel lifting plus subset recombination.

The pipeline is classical Zassenhaus: strip content, Yun squarefree
decomposition, pick a good reduction prime (fewest modular factors among
a fixed sample), lift the modular factorization above twice the
Landau-Mignotte coefficient bound, then search factor subsets in
ascending cardinality.  A cross-prime degree filter certifies many
irreducible inputs without lifting at all.  Everything is deterministic.
"""

from __future__ import annotations

import itertools
import math

from ..errors import DegreeError
from ..intutil import primes_upto
from .intpoly import IntPoly, squarefree_decomposition
from .modpoly import Factorization, ModPoly, factor_mod_p, mod_gcd, mod_xgcd

_SAMPLE_PRIMES = 12


# -- arithmetic on coefficient lists modulo m (m a prime power) -----------


def _mul_mod(a: list[int], b: list[int], m: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    while out and out[-1] == 0:
        out.pop()
    return out


def _add_mod(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _sub_mod(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _divmod_monic_mod(a: list[int], g: list[int], m: int) -> tuple[list[int], list[int]]:
    """Division by monic g over Z/m."""
    assert g and g[-1] == 1
    rem = list(a)
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return [], rem
    quo = [0] * (len(rem) - dg)
    for i in range(len(rem) - dg - 1, -1, -1):
        c = rem[i + dg] % m
        if c:
            quo[i] = c
            for j in range(dg + 1):
                rem[i + j] = (rem[i + j] - c * g[j]) % m
    r = rem[:dg]
    while r and r[-1] == 0:
        r.pop()
    while quo and quo[-1] == 0:
        quo.pop()
    return quo, r


def _sym(c: int, m: int) -> int:
    """Symmetric representative in (-m/2, m/2]."""
    c %= m
    return c - m if 2 * c > m else c


# -- Hensel lifting ---------------------------------------------------------


def _hensel_step(
    f: list[int],
    g: list[int],
    h: list[int],
    s: list[int],
    t: list[int],
    m: int,
) -> tuple[list[int], list[int], list[int], list[int]]:
    """One quadratic lift: from f=gh, sg+th=1 (mod m) to the same mod m^2.

    f, g, h monic; deg s < deg h, deg t < deg g on entry and exit.
    """
    mm = m * m
    e = _sub_mod(f, _mul_mod(g, h, mm), mm)
    q, r = _divmod_monic_mod(_mul_mod(s, e, mm), h, mm)
    g1 = _add_mod(g, _add_mod(_mul_mod(t, e, mm), _mul_mod(q, g, mm), mm), mm)
    h1 = _add_mod(h, r, mm)
    b = _sub_mod(_add_mod(_mul_mod(s, g1, mm), _mul_mod(t, h1, mm), mm), [1], mm)
    c, d = _divmod_monic_mod(_mul_mod(s, b, mm), h1, mm)
    s1 = _sub_mod(s, d, mm)
    t1 = _sub_mod(t, _add_mod(_mul_mod(t, b, mm), _mul_mod(c, g1, mm), mm), mm)
    return g1, h1, s1, t1


def _lift_tree(f: list[int], factors: list[list[int]], p: int, target: int) -> list[list[int]]:
    """Lift monic f = prod(factors) from mod p to mod p^(2^j) >= target.

    f carries the true integer coefficients reduced mod the final modulus;
    factors are monic mod p and pairwise coprime.
    """
    if len(factors) == 1:
        m = p
        while m < target:
            m *= m
        return [[c % m for c in f]]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [1]
    for fac in left:
        g = _mul_mod(g, fac, p)
    h = [1]
    for fac in right:
        h = _mul_mod(h, fac, p)
    one, sp, tp = mod_xgcd(ModPoly(p, g), ModPoly(p, h))
    assert one.degree == 0 and not one.is_zero, "lift factors not coprime"
    s = list(sp.coeffs)
    t = list(tp.coeffs)
    m = p
    while m < target:
        fm = [c % (m * m) for c in f]
        g, h, s, t = _hensel_step(fm, g, h, s, t, m)
        m *= m
    return _lift_tree(g, left, p, target) + _lift_tree(h, right, p, target)


# -- prime selection and degree filter --------------------------------------


def _ddf_pattern(f: ModPoly) -> tuple[int, ...] | None:
    """Sorted irreducible-factor degrees of f mod p, or None if f is not
    squarefree mod p (or drops degree).  Distinct-degree splitting only."""
    p = f.p
    if f.degree < 1:
        return None
    if mod_gcd(f, f.derivative()).degree != 0:
        return None
    degrees: list[int] = []
    g = f.monic()
    x = ModPoly(p, (0, 1))
    h = x % g
    d = 0
    while g.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, g)
        gd = mod_gcd(h - x, g)
        if gd.degree > 0:
            degrees.extend([d] * (gd.degree // d))
            g = (g // gd).monic()
            h = h % g
    if g.degree > 0:
        degrees.append(g.degree)
    return tuple(sorted(degrees))


def _sample_patterns(f: IntPoly) -> list[tuple[int, tuple[int, ...]]]:
    """(prime, factor-degree pattern) for the first usable odd primes."""
    out = []
    for p in primes_upto(10_000):
        if p == 2 or f.lc % p == 0:
            continue
        pattern = _ddf_pattern(ModPoly.from_int_poly(f, p))
        if pattern is None:
            continue
        out.append((p, pattern))
        if len(out) >= _SAMPLE_PRIMES:
            break
    return out


def _degree_mask(pattern: tuple[int, ...]) -> int:
    """Bitmask of degrees realizable as subset sums of the pattern."""
    mask = 1
    for d in pattern:
        mask |= mask << d
    return mask


# -- main entry --------------------------------------------------------------


def _factor_squarefree_monic(f: IntPoly) -> list[IntPoly]:
    """Irreducible monic integer factors of a monic squarefree polynomial."""
    n = f.degree
    if n == 1:
        return [f]
    samples = _sample_patterns(f)
    assert samples, "no squarefree reduction found (input not squarefree?)"

    allowed = (1 << (n + 1)) - 1
    for _, pattern in samples:
        allowed &= _degree_mask(pattern)
    if all(not (allowed >> d) & 1 for d in range(1, n)):
        return [f]

    p, pattern = min(samples, key=lambda pp: (len(pp[1]), pp[0]))
    fact = factor_mod_p(ModPoly.from_int_poly(f, p))
    modular = [list(g.coeffs) for g, _ in fact.factors]
    if len(modular) == 1:
        return [f]

    # Landau-Mignotte: factors of f have sup-norm <= 2^n * l2norm(f).
    bound = (1 << n) * (math.isqrt(f.norm2_squared()) + 1)
    target = 2 * bound + 1
    modulus = p
    while modulus < target:
        modulus *= modulus
    lifted = _lift_tree([c % modulus for c in f.coeffs], modular, p, target)
    check = [1]
    for g in lifted:
        check = _mul_mod(check, g, modulus)
    assert check == [c % modulus for c in f.coeffs], "hensel lift mismatch"

    found: list[IntPoly] = []
    remaining = lifted
    current = f
    c = 1
    while 2 * c <= len(remaining):
        hit = False
        for combo in itertools.combinations(range(len(remaining)), c):
            deg = sum(len(remaining[i]) - 1 for i in combo)
            if not (allowed >> deg) & 1:
                continue
            # cheap constant-term divisibility screen
            c0 = 1
            for i in combo:
                c0 = c0 * (remaining[i][0] if remaining[i] else 0) % modulus
            c0 = _sym(c0, modulus)
            f0 = current(0)
            if c0 == 0 or f0 % c0 != 0:
                continue
            prod = [1]
            for i in combo:
                prod = _mul_mod(prod, remaining[i], modulus)
            cand = IntPoly(_sym(x, modulus) for x in prod)
            try:
                quo = current.exact_div(cand)
            except ArithmeticError:
                continue
            found.append(cand)
            current = quo
            remaining = [g for i, g in enumerate(remaining) if i not in combo]
            hit = True
            break
        if not hit:
            c += 1
    if current.degree > 0:
        found.append(current)
    return sorted(found, key=lambda g: (g.degree, g.coeffs))


def factor_over_q(f: IntPoly) -> Factorization:
    """Factor an integer polynomial into content times primitive irreducibles.

    The content is a signed integer (factors have positive leading
    coefficient); multiplying everything back reconstructs f exactly.
    """
    if f.is_zero:
        raise DegreeError("cannot factor the zero polynomial")
    content, prim = f.primitive()
    if prim.degree < 1:
        return Factorization(content=content, factors=())
    parts: dict[IntPoly, int] = {}
    # x^k factor comes off first so constant-term filters stay valid
    k = 0
    while prim[0] == 0:
        prim = IntPoly(prim.coeffs[1:])
        k += 1
    if k:
        parts[IntPoly((0, 1))] = k
    for sqf, mult in squarefree_decomposition(prim):
        lc = sqf.lc
        if lc != 1:
            # substitute y = lc*x to get a monic model, factor, map back
            n = sqf.degree
            monic = IntPoly(
                tuple(sqf[i] * lc ** (n - 1 - i) for i in range(n)) + (1,)
            )
            for g in _factor_squarefree_monic(monic):
                back = g.compose_linear(lc, 0).primitive()[1]
                parts[back] = parts.get(back, 0) + mult
        else:
            for g in _factor_squarefree_monic(sqf):
                parts[g] = parts.get(g, 0) + mult
    factors = tuple(sorted(parts.items(), key=lambda fm: (fm[0].degree, fm[0].coeffs)))
    return Factorization(content=content, factors=factors)
