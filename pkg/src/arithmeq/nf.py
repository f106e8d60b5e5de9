"""Number fields: maximal order, discriminant, signature, prime splitting.

A field is presented by a monic irreducible integer polynomial.  The
maximal order is found by testing p-maximality with the Dedekind
criterion at every prime whose square divides the polynomial
discriminant and, where that fails, enlarging through the radical
idealizer until the order stabilizes (round-2).  Prime decomposition
reads (e, f) pairs off the mod-p factorization away from the index and
off the idempotent splitting of O/pO at index primes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import MonicError, NotPrimeError, PlaceError, ReducibleError
from .exact.factorq import factor_over_q
from .exact.intpoly import IntPoly, discriminant
from .exact.modpoly import ModPoly, factor_mod_p, mod_gcd
from .exact.sturm import sturm_signature
from .ffalg import FpAlgebra, kernel_mod, split_idempotents
from .intutil import factorint, is_prime, squarefull_primes

Matrix = tuple[tuple[int, ...], ...]


# -- integer lattice utilities ----------------------------------------------


def hnf(rows: Sequence[Sequence[int]], n: int) -> Matrix:
    """Row Hermite normal form of a full-rank lattice in Z^n.

    Result is n x n, row i pivoted at column i, positive pivots, entries
    above each pivot reduced to [0, pivot).
    """
    work = [list(r) for r in rows if any(r)]
    out: list[list[int]] = []
    for col in range(n):
        cand = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not cand:
            raise ValueError("matrix is not full rank")
        while len(cand) > 1:
            cand.sort(key=lambda r: abs(r[col]))
            pivot = cand[0]
            survivors = [pivot]
            for r in cand[1:]:
                q = r[col] // pivot[col]
                reduced = [a - q * b for a, b in zip(r, pivot)]
                if reduced[col] != 0:
                    survivors.append(reduced)
                elif any(reduced):
                    rest.append(reduced)
            cand = survivors
        pivot = cand[0]
        if pivot[col] < 0:
            pivot = [-a for a in pivot]
        out.append(pivot)
        work = rest
    # normalize entries above each pivot
    for j in range(n):
        for i in range(j):
            q = out[i][j] // out[j][j]
            if q:
                out[i] = [a - q * b for a, b in zip(out[i], out[j])]
    return tuple(tuple(r) for r in out)


def _det_triangular(m: Matrix) -> int:
    d = 1
    for i in range(len(m)):
        d *= m[i][i]
    return d


@dataclass(frozen=True)
class Order:
    """Order in Q[x]/(f): rows of num/den are basis elements over the
    power basis 1, theta, ..., theta^(n-1)."""

    num: Matrix  # HNF, n x n
    den: int

    def normalized(self) -> Order:
        g = self.den
        for row in self.num:
            for c in row:
                g = math.gcd(g, c)
                if g == 1:
                    return self
        return Order(
            tuple(tuple(c // g for c in row) for row in self.num), self.den // g
        )


def _order_index(o: Order) -> int:
    """[O : Z[theta]] for an order containing Z[theta]."""
    det = _det_triangular(o.num)
    n = len(o.num)
    index, rem = divmod(o.den**n, det)
    assert rem == 0, "order does not contain the equation order"
    return index


def _solve_in_basis(m: Matrix, target: Sequence[Fraction]) -> list[Fraction]:
    """Solve c * m = target exactly; m is HNF (row-pivoted) hence triangular."""
    n = len(m)
    c = [Fraction(0)] * n
    for j in range(n):
        acc = target[j]
        for i in range(j):
            acc -= c[i] * m[i][j]
        c[j] = acc / m[j][j]
    # trailing columns consistency
    for j in range(n):
        assert sum(c[i] * m[i][j] for i in range(n)) == target[j]
    return c


# -- public types -------------------------------------------------------------


@dataclass(frozen=True)
class Place:
    """A place over p with its invariants and a stable ordinal."""

    p: int
    e: int
    f: int
    ordinal: int


@dataclass(frozen=True)
class DecompProfile:
    """Multiset of (e, f) over a rational prime, sorted by (f, e)."""

    p: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def ramified(self) -> bool:
        return any(e > 1 for e, _ in self.pairs)

    def residue_degrees(self) -> tuple[int, ...]:
        """Ascending residue degrees (the decomposition type)."""
        return tuple(sorted(f for _, f in self.pairs))


@dataclass(frozen=True, eq=False)
class NumberField:
    """Validated number field with its maximal order."""

    poly: IntPoly
    degree: int
    max_order: Order
    field_disc: int
    signature: tuple[int, int]
    index: int
    index_primes: frozenset[int]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(("NumberField", self.poly))

    # Structure constants of the maximal order: basis products expressed
    # in the basis again.  Integral because the order is a ring.
    def structure_constants(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        if "mul" not in self._cache:
            self._cache["mul"] = _structure_constants(self.poly, self.max_order)
        return self._cache["mul"]

    def ramified_primes(self) -> tuple[int, ...]:
        if "ram" not in self._cache:
            self._cache["ram"] = tuple(p for p, _ in factorint(self.field_disc))
        return self._cache["ram"]


@lru_cache(maxsize=1024)
def _structure_constants(f: IntPoly, o: Order) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = f.degree
    den = o.den
    basis = [IntPoly(row) for row in o.num]
    table = []
    for i in range(n):
        row_out = []
        for j in range(i + 1):
            prod = (basis[i] * basis[j]).divmod_monic(f)[1]
            target = [Fraction(prod[k], den * den) for k in range(n)]
            coords = _solve_in_basis(o.num, [t * den for t in target])
            assert all(c.denominator == 1 for c in coords), "order is not a ring"
            row_out.append(tuple(int(c) for c in coords))
        table.append(row_out)
    # symmetrize
    full = [[table[max(i, j)][min(i, j)] for j in range(n)] for i in range(n)]
    return tuple(tuple(r) for r in full)


# -- Dedekind criterion and round-2 ------------------------------------------


def dedekind_p_maximal(f: IntPoly, p: int) -> bool:
    """Whether Z[theta] is p-maximal, by the Dedekind criterion."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    fp = ModPoly.from_int_poly(f, p)
    fact = factor_mod_p(fp)
    gbar = ModPoly(p, (1,))
    for g, _ in fact.factors:
        gbar = gbar * g
    hbar = fp.monic() // gbar
    gl = gbar.to_int_poly()
    hl = hbar.to_int_poly()
    t = (gl * hl - f).exact_scale_div(p)
    tbar = ModPoly.from_int_poly(t, p)
    return mod_gcd(mod_gcd(tbar, gbar), hbar).degree == 0


def _p_radical_rows(f: IntPoly, o: Order, p: int) -> list[tuple[int, ...]]:
    """Generators (order coordinates) of the p-radical of O, including pO."""
    algebra = _order_algebra_mod_p(f, o, p)
    q = 1
    n = f.degree
    while q < n:
        q *= p
    cols = [algebra.pow_vec(algebra.basis_vector(i), q) for i in range(n)]
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    rad = kernel_mod(rows, p, n)
    gens = [tuple(int(c) for c in v) for v in rad]
    gens.extend(tuple(p if k == i else 0 for k in range(n)) for i in range(n))
    return gens


def _order_algebra_mod_p(f: IntPoly, o: Order, p: int) -> FpAlgebra:
    table = _structure_constants(f, o)
    n = f.degree
    one = _one_in_order(o)
    return FpAlgebra(p, n, table, one)


def _one_in_order(o: Order) -> tuple[int, ...]:
    n = len(o.num)
    target = [Fraction(o.den if k == 0 else 0) for k in range(n)]
    coords = _solve_in_basis(o.num, target)
    assert all(c.denominator == 1 for c in coords)
    return tuple(int(c) for c in coords)


def _enlarge_at_p(f: IntPoly, o: Order, p: int) -> Order | None:
    """One radical-idealizer step; None when O is already p-maximal."""
    n = f.degree
    rad_rows = _p_radical_rows(f, o, p)
    r = hnf(rad_rows, n)
    table = _structure_constants(f, o)

    def mult_coords(u: Sequence[int], v: Sequence[int]) -> list[int]:
        out = [0] * n
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        ab = a * b
                        for k in range(n):
                            out[k] += ab * table[i][j][k]
        return out

    # condition on u in O/pO: u * m_j lies in p * I for every radical basis m_j
    big_rows = []
    basis_u = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    rad_basis = [list(row) for row in r]
    for i in range(n):
        row_conditions: list[int] = []
        for m in rad_basis:
            prod = mult_coords(basis_u[i], m)
            coords = _solve_in_basis(r, [Fraction(c) for c in prod])
            assert all(c.denominator == 1 for c in coords), "radical is not an ideal"
            row_conditions.extend(int(c) % p for c in coords)
        big_rows.append(row_conditions)
    # kernel over u-coefficients: transpose conditions
    ncond = len(big_rows[0])
    mat = [[big_rows[i][c] for i in range(n)] for c in range(ncond)]
    kernel = kernel_mod(mat, p, n)
    if not kernel:
        return None
    new_rows = [tuple(p * c for c in row) for row in o.num]
    for v in kernel:
        combo = [0] * n
        for i, c in enumerate(v):
            if c:
                for k in range(n):
                    combo[k] += c * o.num[i][k]
        new_rows.append(tuple(combo))
    new = Order(hnf(new_rows, n), o.den * p).normalized()
    return new


def _p_maximal_order(f: IntPoly, p: int) -> Order:
    n = f.degree
    o = Order(tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n)), 1)
    while True:
        bigger = _enlarge_at_p(f, o, p)
        if bigger is None:
            return o
        o = bigger


# -- field construction --------------------------------------------------------


@lru_cache(maxsize=256)
def _make_field_cached(coeffs: tuple[int, ...]) -> NumberField:
    f = IntPoly(coeffs)
    n = f.degree
    if n == 1:
        identity = Order(((1,),), 1)
        return NumberField(
            poly=f,
            degree=1,
            max_order=identity,
            field_disc=1,
            signature=(1, 0),
            index=1,
            index_primes=frozenset(),
        )
    fact = factor_over_q(f)
    if not fact.is_irreducible:
        raise ReducibleError(f"{f} is reducible over Q")
    poly_disc = discriminant(f)
    orders = []
    for p in squarefull_primes(poly_disc):
        if not dedekind_p_maximal(f, p):
            orders.append(_p_maximal_order(f, p))
    if not orders:
        max_order = Order(
            tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n)), 1
        )
    else:
        den = math.lcm(*(o.den for o in orders))
        rows = []
        for o in orders:
            scale = den // o.den
            rows.extend(tuple(scale * c for c in row) for row in o.num)
        rows.extend(tuple(den if j == i else 0 for j in range(n)) for i in range(n))
        max_order = Order(hnf(rows, n), den).normalized()
    index = _order_index(max_order)
    field_disc, rem = divmod(poly_disc, index * index)
    assert rem == 0, "index squared must divide the polynomial discriminant"
    return NumberField(
        poly=f,
        degree=n,
        max_order=max_order,
        field_disc=field_disc,
        signature=sturm_signature(f),
        index=index,
        index_primes=frozenset(p for p, _ in factorint(index)) if index > 1 else frozenset(),
    )


def make_field(f: IntPoly) -> NumberField:
    """Validate a defining polynomial and build the field invariants."""
    if f.degree < 1:
        raise MonicError("defining polynomial must have degree >= 1")
    if not f.is_monic:
        raise MonicError("defining polynomial must be monic")
    return _make_field_cached(f.coeffs)


# -- decomposition --------------------------------------------------------------


def decompose(k: NumberField, p: int, method: str = "auto") -> DecompProfile:
    """(e, f) multiset of the places over p, sorted by (f, e).

    method="modp" forces the mod-p factorization path (valid away from
    index primes); method="algebra" forces the idempotent splitting of
    O/pO; "auto" picks the cheap path where it is valid.
    """
    pairs = [(pl.e, pl.f) for pl in places_over(k, p, method)]
    return DecompProfile(p=p, pairs=tuple(sorted(pairs, key=lambda ef: (ef[1], ef[0]))))


def decomposition_type(k: NumberField, p: int, method: str = "auto") -> tuple[int, ...]:
    """Ascending residue degrees over p."""
    return decompose(k, p, method).residue_degrees()


def places_over(k: NumberField, p: int, method: str = "auto") -> tuple[Place, ...]:
    """Places over p with deterministic ordinals.

    Ordering: ascending (f, e, tie-break by the deterministic factor or
    idempotent coordinates of the construction).
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if method not in ("auto", "modp", "algebra"):
        raise ValueError(f"unknown method {method!r}")
    key = ("places", p, method)
    if key in k._cache:
        return k._cache[key]
    if method == "modp" and p in k.index_primes:
        raise PlaceError(f"mod-p path is invalid at index prime {p}")
    use_modp = method == "modp" or (method == "auto" and p not in k.index_primes)
    if use_modp:
        fact = factor_mod_p(ModPoly.from_int_poly(k.poly, p))
        keyed = sorted(
            ((g.degree, mult, g.coeffs) for g, mult in fact.factors),
            key=lambda t: (t[0], t[1], t[2]),
        )
        places = [
            Place(p=p, e=mult, f=deg, ordinal=i)
            for i, (deg, mult, _) in enumerate(keyed)
        ]
    else:
        algebra = _order_algebra_mod_p(k.poly, k.max_order, p)
        comps = split_idempotents(algebra)
        for c in comps:
            # block of a maximal-order reduction: dimension e*f, residue f
            assert c.dim % c.residue_dim == 0, "component dim not divisible by f"
        keyed2 = sorted(
            ((c.residue_dim, c.dim // c.residue_dim, c.idempotent) for c in comps),
            key=lambda t: (t[0], t[1], t[2]),
        )
        places = [
            Place(p=p, e=e, f=f, ordinal=i) for i, (f, e, _) in enumerate(keyed2)
        ]
    total = sum(pl.e * pl.f for pl in places)
    assert total == k.degree, "sum of e*f must equal the field degree"
    k._cache[key] = tuple(places)
    return k._cache[key]
