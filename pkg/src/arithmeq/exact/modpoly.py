"""Univariate polynomial arithmetic and factorization over prime fields.

Factorization runs squarefree decomposition, then distinct-degree
splitting, then equal-degree splitting.  The equal-degree stage is
derandomized: splitting elements are drawn from a fixed enumeration
(x, x+1, ..., x+p-1, then higher-degree candidates in base-p order), so
the returned factor sequence is reproducible bit for bit.  Downstream
consumers rely on that for stable place orderings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from ..errors import NotPrimeError
from ..intutil import is_prime
from .intpoly import IntPoly


class ModPoly:
    """Immutable polynomial over Z/p, dense ascending residues."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("ModPoly is immutable")

    @classmethod
    def from_int_poly(cls, f: IntPoly, p: int) -> ModPoly:
        return cls(p, f.coeffs)

    def to_int_poly(self) -> IntPoly:
        """Lift with coefficients in [0, p)."""
        return IntPoly(self.coeffs)

    # -- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(("ModPoly", self.p, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"ModPoly({self.p}, {list(self.coeffs)!r})"

    def _check(self, other: ModPoly) -> None:
        if self.p != other.p:
            raise ValueError("mixed moduli")

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> ModPoly:
        return ModPoly(self.p, (-c for c in self.coeffs))

    def __add__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ModPoly(self.p, (self[i] + other[i] for i in range(n)))

    def __sub__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ModPoly(self.p, (self[i] - other[i] for i in range(n)))

    def __mul__(self, other: ModPoly | int) -> ModPoly:
        if isinstance(other, int):
            return ModPoly(self.p, (c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero or other.is_zero:
            return ModPoly(self.p)
        p = self.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % p
        return ModPoly(p, out)

    __rmul__ = __mul__

    def divmod(self, other: ModPoly) -> tuple[ModPoly, ModPoly]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        p = self.p
        dg = other.degree
        inv = pow(other.lc, p - 2, p)
        rem = list(self.coeffs)
        if len(rem) - 1 < dg:
            return ModPoly(p), self
        quo = [0] * (len(rem) - dg)
        for i in range(len(rem) - dg - 1, -1, -1):
            c = rem[i + dg] * inv % p
            if c:
                quo[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = (rem[i + j] - c * b) % p
        return ModPoly(p, quo), ModPoly(p, rem[:dg])

    def __floordiv__(self, other: ModPoly) -> ModPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: ModPoly) -> ModPoly:
        return self.divmod(other)[1]

    def monic(self) -> ModPoly:
        if self.is_zero or self.is_monic:
            return self
        inv = pow(self.lc, self.p - 2, self.p)
        return self * inv

    def derivative(self) -> ModPoly:
        return ModPoly(self.p, (i * self.coeffs[i] for i in range(1, len(self.coeffs))))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def pow_mod(self, e: int, modulus: ModPoly) -> ModPoly:
        """self**e reduced mod modulus, by repeated squaring."""
        result = ModPoly(self.p, (1,))
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result


def x_poly(p: int) -> ModPoly:
    return ModPoly(p, (0, 1))


def mod_gcd(a: ModPoly, b: ModPoly) -> ModPoly:
    """Monic gcd over Z/p."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def mod_xgcd(a: ModPoly, b: ModPoly) -> tuple[ModPoly, ModPoly, ModPoly]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = ModPoly(p, (1,)), ModPoly(p)
    t0, t1 = ModPoly(p), ModPoly(p, (1,))
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    inv = pow(r0.lc, p - 2, p)
    return r0 * inv, s0 * inv, t0 * inv


@dataclass(frozen=True)
class Factorization:
    """content * prod(factor^multiplicity); factors sorted canonically."""

    content: int
    factors: tuple[tuple[object, int], ...]

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def degree_multiset(self) -> tuple[int, ...]:
        out: list[int] = []
        for f, m in self.factors:
            out.extend([f.degree] * m)
        return tuple(sorted(out))


def _squarefree_parts(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Monic squarefree decomposition in characteristic p.

    Returns pairwise-coprime monic squarefree g_i with f = prod g_i^i.
    """
    p = f.p
    out: dict[int, ModPoly] = {}

    def merge(g: ModPoly, mult: int) -> None:
        if g.degree > 0:
            out[mult] = out[mult] * g if mult in out else g

    def recurse(g: ModPoly, scale: int) -> None:
        # g monic; contributes factors with multiplicity * scale
        if g.degree < 1:
            return
        d = g.derivative()
        if d.is_zero:
            # g = h(x^p) = h(x)^p since coefficients are in the prime field
            h = ModPoly(p, (g[i * p] for i in range(g.degree // p + 1)))
            recurse(h, scale * p)
            return
        c = mod_gcd(g, d)
        w = (g // c).monic()
        i = 1
        while w.degree > 0:
            y = mod_gcd(w, c)
            merge((w // y).monic(), i * scale)
            w = y
            c = (c // y).monic()
            i += 1
        if c.degree > 0:
            h = ModPoly(p, (c[j * p] for j in range(c.degree // p + 1)))
            recurse(h, scale * p)

    recurse(f.monic(), 1)
    return [(g, m) for m, g in sorted(out.items())]


def _distinct_degree(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Split monic squarefree f into products of same-degree irreducibles.

    Returns [(product, d)] with d ascending.
    """
    p = f.p
    out = []
    h = x_poly(p) % f
    g = f
    d = 0
    while g.degree > 2 * (d + 1) - 1 and g.degree > 0:
        d += 1
        h = h.pow_mod(p, g)
        gd = mod_gcd((h - x_poly(p)) % g, g)
        if gd.degree > 0:
            out.append((gd, d))
            g = (g // gd).monic()
            h = h % g
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _split_candidates(p: int) -> Iterator[ModPoly]:
    """Fixed enumeration x, x+1, x+2, ... then higher degrees in base-p order."""
    deg = 1
    while True:
        for m in range(p**deg):
            digits = []
            mm = m
            for _ in range(deg):
                digits.append(mm % p)
                mm //= p
            yield ModPoly(p, digits + [1])
        deg += 1


def _equal_degree_split(f: ModPoly, d: int) -> list[ModPoly]:
    """Factor monic squarefree f whose irreducible factors all have degree d."""
    p = f.p
    if f.degree == d:
        return [f]
    for h in _split_candidates(p):
        hh = h % f
        if p == 2:
            # trace map T(h) = h + h^2 + ... + h^(2^(d-1))
            t = ModPoly(p)
            cur = hh
            for _ in range(d):
                t = (t + cur) % f
                cur = cur.pow_mod(2, f)
            g = mod_gcd(t, f)
        else:
            t = hh.pow_mod((p**d - 1) // 2, f) - ModPoly(p, (1,))
            g = mod_gcd(t % f, f)
        if 0 < g.degree < f.degree:
            other = (f // g).monic()
            return _equal_degree_split(g, d) + _equal_degree_split(other, d)
    raise AssertionError("unreachable: splitting candidates are inexhaustible")


def factor_mod_p(f: ModPoly) -> Factorization:
    """Complete factorization into monic irreducibles over Z/p.

    Deterministic: the factor tuple is sorted by (degree, coefficients)
    and the same input always yields the identical object.
    """
    if not is_prime(f.p):
        raise NotPrimeError(f"{f.p} is not prime")
    if f.is_zero:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    unit = f.lc
    work = f.monic()
    found: list[tuple[ModPoly, int]] = []
    for sq, mult in _squarefree_parts(work):
        for prod, d in _distinct_degree(sq):
            for irr in _equal_degree_split(prod, d):
                found.append((irr, mult))
    merged: dict[ModPoly, int] = {}
    for g, m in found:
        merged[g] = merged.get(g, 0) + m
    factors = tuple(
        sorted(merged.items(), key=lambda fm: (fm[0].degree, fm[0].coeffs))
    )
    return Factorization(content=unit, factors=factors)
