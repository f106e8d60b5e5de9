"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored ascending by degree with no trailing zeros; the
zero polynomial is the empty coefficient sequence.  All operations are
pure and exact.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from ..errors import DegreeError


class IntPoly:
    """Immutable integer polynomial, dense ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("IntPoly is immutable")

    # -- basic structure ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c:+d}")
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                var = "x" if i == 1 else f"x^{i}"
                terms.append(("+" if c > 0 else "-") + mag + var)
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s

    # -- ring operations -------------------------------------------------

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] - other[i] for i in range(n))

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly((other,)) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shifted(self, k: int) -> IntPoly:
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    # -- evaluation and calculus ------------------------------------------

    def __call__(self, x):
        """Horner evaluation; works for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(i * self.coeffs[i] for i in range(1, len(self.coeffs)))

    def compose_linear(self, a: int, b: int) -> IntPoly:
        """Return self(a*x + b)."""
        lin = IntPoly((b, a))
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + IntPoly((c,))
        return acc

    # -- content and division ----------------------------------------------

    def content(self) -> int:
        """Nonnegative gcd of coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def primitive(self) -> tuple[int, IntPoly]:
        """Split into (signed content, primitive part with positive lc)."""
        if self.is_zero:
            return 0, IntPoly()
        g = self.content()
        if self.lc < 0:
            g = -g
        return g, IntPoly(c // g for c in self.coeffs)

    def exact_scale_div(self, d: int) -> IntPoly:
        """Divide all coefficients by d, asserting exactness."""
        if any(c % d for c in self.coeffs):
            raise ArithmeticError("inexact coefficient division")
        return IntPoly(c // d for c in self.coeffs)

    def divmod_monic(self, g: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Division with remainder by a monic polynomial, exact over Z."""
        if not g.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dg = g.degree
        if len(rem) - 1 < dg:
            return IntPoly(), self
        quo = [0] * (len(rem) - dg)
        for i in range(len(rem) - dg - 1, -1, -1):
            c = rem[i + dg]
            if c:
                quo[i] = c
                for j, b in enumerate(g.coeffs):
                    rem[i + j] -= c * b
        return IntPoly(quo), IntPoly(rem[:dg])

    def exact_div(self, g: IntPoly) -> IntPoly:
        """Exact polynomial division over Z; raises if g does not divide."""
        if g.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = g.degree
        glc = g.lc
        if len(rem) - 1 < dg:
            if self.is_zero:
                return IntPoly()
            raise ArithmeticError("inexact polynomial division")
        quo = [0] * (len(rem) - dg)
        for i in range(len(rem) - dg - 1, -1, -1):
            c = rem[i + dg]
            if c % glc:
                raise ArithmeticError("inexact polynomial division")
            q = c // glc
            quo[i] = q
            if q:
                for j, b in enumerate(g.coeffs):
                    rem[i + j] -= q * b
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return IntPoly(quo)

    def pseudo_divmod(self, g: IntPoly) -> tuple[IntPoly, IntPoly, int]:
        """Pseudo-division: lc(g)^(deg f - deg g + 1) * f = q*g + r.

        Returns (q, r, delta+1) where the multiplier is lc(g)**(delta+1).
        """
        if g.is_zero:
            raise ZeroDivisionError("pseudo-division by zero")
        df, dg = self.degree, g.degree
        if df < dg:
            return IntPoly(), self, 0
        e = df - dg + 1
        rem = self
        quo = IntPoly()
        glc = g.lc
        while not rem.is_zero and rem.degree >= dg:
            t = IntPoly((0,) * (rem.degree - dg) + (rem.lc,))
            quo = quo * glc + t
            rem = rem * glc - t * g
            e -= 1
        scale = glc**e
        return quo * scale, rem * scale, self.degree - dg + 1

    def norm2_squared(self) -> int:
        return sum(c * c for c in self.coeffs)


def from_roots(roots: Sequence[int]) -> IntPoly:
    acc = IntPoly((1,))
    for r in roots:
        acc = acc * IntPoly((-r, 1))
    return acc


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[x], primitive with positive lc.

    Primitive PRS: pseudo-remainders reduced to primitive part each step.
    """
    if a.is_zero and b.is_zero:
        return IntPoly()
    if a.is_zero:
        return b.primitive()[1]
    if b.is_zero:
        return a.primitive()[1]
    ca, pa = a.primitive()
    cb, pb = b.primitive()
    cont = math.gcd(ca, cb)
    if pa.degree < pb.degree:
        pa, pb = pb, pa
    while not pb.is_zero:
        _, r, _ = pa.pseudo_divmod(pb)
        pa, pb = pb, (r.primitive()[1] if not r.is_zero else IntPoly())
    if pa.degree == 0:
        return IntPoly((cont,))
    return pa * cont if cont != 1 else pa


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant over Z via the subresultant remainder sequence."""
    if a.is_zero or b.is_zero:
        return 0
    if a.degree == 0 and b.degree == 0:
        return 1
    if a.degree == 0:
        return a.lc ** b.degree
    if b.degree == 0:
        return b.lc ** a.degree
    sign = 1
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            sign = -sign
        a, b = b, a
    ca, a = a.primitive()
    cb, b = b.primitive()
    # primitive() folds the lc sign into the content; resultants scale by
    # content^(other degree).
    scale = ca ** b.degree * cb ** a.degree
    g = 1
    h = 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if (da % 2) and (db % 2):
            sign = -sign
        _, r, _ = a.pseudo_divmod(b)
        a = b
        b = r.exact_scale_div(g * h**delta)
        g = a.lc
        h = h * (g**delta) if delta == 0 else (g**delta) // (h ** (delta - 1))
        if b.is_zero:
            return 0
        if b.degree == 0:
            # one last subresultant normalization step
            res = (b.lc ** a.degree) // (h ** (a.degree - 1))
            return sign * scale * res


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f); zero iff repeated root."""
    n = f.degree
    if n < 1:
        raise DegreeError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    assert res % f.lc == 0
    return sign * (res // f.lc)


def squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm over Z on the primitive part.

    Returns [(g_i, i)] with f = content * prod g_i^i, each g_i squarefree
    primitive with positive lc, pairwise coprime.  Content is dropped.
    """
    _, f = f.primitive()
    if f.degree < 1:
        return []
    df = f.derivative()
    g = poly_gcd(f, df)
    if g.degree == 0:
        return [(f, 1)]
    c = f.exact_div(g)
    d = df.exact_div(g) - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out


def power_sums(f: IntPoly, count: int) -> list[int]:
    """Newton power sums s_0..s_{count-1} of the roots of monic f."""
    if not f.is_monic:
        raise ValueError("power sums need a monic polynomial")
    n = f.degree
    sums = [n]
    for k in range(1, count):
        s = 0
        for i in range(1, min(k - 1, n) + 1):
            s -= f[n - i] * sums[k - i]
        if k <= n:
            s -= k * f[n - k]
        sums.append(s)
    return sums
