"""Integer primality, factorization, and small prime tables.

Everything here is deterministic: Miller-Rabin uses fixed witness sets
(provably correct below 3.3e24) and Pollard rho iterates a fixed
parameter sequence, so repeated runs factor integers identically.
"""

from __future__ import annotations

import math
from functools import lru_cache

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
    139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
)

# Sufficient deterministic witnesses for n < 3,317,044,064,679,887,385,961,981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981


def primes_upto(n: int) -> list[int]:
    """All primes <= n, ascending (simple sieve)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, n + 1) if sieve[i]]


def _miller_rabin(n: int, a: int) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a % n, d, n)
    if x in (0, 1, n - 1):
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _lucas_strong_prp(n: int) -> bool:
    # Strong Lucas test with Selfridge's parameter choice; combined with
    # base-2 Miller-Rabin this is the Baillie-PSW test (no counterexamples
    # known; only relevant for n beyond the proven Miller-Rabin bound).
    d = 5
    while True:
        g = math.gcd(abs(d), n)
        if 1 < g < n:
            return False
        if _jacobi(d, n) == -1:
            break
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4
    k = n + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1
    # Lucas sequences by binary ladder.
    u, v, qk = 1, p, q
    for bit in bin(k)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u % 2:
                u += n
            if v % 2:
                v += n
            u, v = u // 2 % n, v // 2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if not all(_miller_rabin(n, a) for a in _MR_WITNESSES):
        return False
    if n < _MR_PROVEN_BOUND:
        return True
    return _lucas_strong_prp(n)


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n, deterministic parameter scan."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard rho parameter scan exhausted on {n}")


def _perfect_root(n: int) -> tuple[int, int] | None:
    for k in range(2, n.bit_length() + 1):
        r = round(n ** (1.0 / k))
        for cand in (r - 1, r, r + 1):
            if cand >= 2 and cand**k == n:
                return cand, k
    return None


@lru_cache(maxsize=4096)
def factorint(n: int) -> tuple[tuple[int, int], ...]:
    """Complete factorization of |n| as sorted ((prime, exponent), ...).

    factorint(0) is an error; units factor to ().
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    factors: dict[int, int] = {}

    def accumulate(m: int) -> None:
        if m == 1:
            return
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            return
        root = _perfect_root(m)
        if root is not None:
            base, k = root
            for _ in range(k):
                accumulate(base)
            return
        d = _pollard_brent(m)
        accumulate(d)
        accumulate(m // d)

    for p in _SMALL_PRIMES:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # Light trial division beyond the hardcoded table before rho.
    d = _SMALL_PRIMES[-1] + 2
    while d * d <= n and d < 10_000:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 2
    accumulate(n)
    return tuple(sorted(factors.items()))


def squarefull_primes(n: int) -> list[int]:
    """Primes p with p*p dividing n, ascending."""
    return [p for p, e in factorint(n) if e >= 2]


def format_factored(n: int) -> str:
    """Render an integer as a signed product of ascending prime powers.

    Examples: -1024 -> "-2^10", 12 -> "2^2 * 3", 1 -> "1", -1 -> "-1".
    """
    if n == 0:
        return "0"
    sign = "-" if n < 0 else ""
    if abs(n) == 1:
        return sign + "1"
    parts = []
    for p, e in factorint(n):
        parts.append(f"{p}^{e}" if e > 1 else str(p))
    return sign + " * ".join(parts)
