"""Finite commutative algebras over prime fields.

The two operations that matter downstream are the nilradical and the
complete splitting into primitive idempotents.  For the quotient of a
maximal order by p, the idempotents correspond to the places over p and
the component dimensions encode ramification and residue degrees.

Radical: kernel of x -> x^q for the smallest p-power q >= dim (the map
is additive in characteristic p and catches exactly the nilpotents).
Splitting: recursive, via the fixed subalgebra of Frobenius, whose
elements have squarefree minimal polynomials splitting into linear
factors; Lagrange interpolation at the eigenvalues yields orthogonal
idempotents.  Idempotents lift from the semisimple quotient by Newton
iteration e <- 3e^2 - 2e^3.  All choices are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import AlgebraError, NotPrimeError
from .exact.modpoly import ModPoly, factor_mod_p
from .intutil import is_prime

Vector = tuple[int, ...]


# -- linear algebra over Z/p ------------------------------------------------


def rref_mod(rows: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Reduced row echelon form over Z/p; zero rows dropped."""
    mat = [[c % p for c in row] for row in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [(x - factor * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r]


def kernel_mod(rows: Sequence[Sequence[int]], p: int, ncols: int) -> list[Vector]:
    """Basis of the right kernel {v : M v = 0} over Z/p, RREF-canonical."""
    mat = rref_mod(rows, p)
    pivots = []
    for row in mat:
        pivots.append(next(i for i, x in enumerate(row) if x))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(mat, pivots):
            v[pc] = (-row[fc]) % p
        basis.append(tuple(v))
    return basis


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref_mod(rows, p))


def in_rowspace(v: Sequence[int], rref: Sequence[Sequence[int]], p: int) -> bool:
    """Whether v lies in the span of RREF rows."""
    v = [c % p for c in v]
    for row in rref:
        pc = next(i for i, x in enumerate(row) if x)
        if v[pc]:
            f = v[pc]
            v = [(a - f * b) % p for a, b in zip(v, row)]
    return not any(v)


# -- the algebra -------------------------------------------------------------


@dataclass(frozen=True)
class LocalComponent:
    """One block of the idempotent decomposition.

    dim is the F_p-dimension of the block; residue_dim the dimension of
    its image in the semisimple quotient.  For the reduction of a maximal
    order these are e*f and f of the corresponding place.
    """

    idempotent: Vector
    dim: int
    residue_dim: int


class FpAlgebra:
    """Commutative algebra over Z/p given by structure constants."""

    __slots__ = ("p", "dim", "mul", "one")

    def __init__(
        self,
        p: int,
        dim: int,
        mul: Sequence[Sequence[Sequence[int]]],
        one: Sequence[int],
    ):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(
            self,
            "mul",
            tuple(
                tuple(tuple(c % p for c in mul[i][j]) for j in range(dim))
                for i in range(dim)
            ),
        )
        object.__setattr__(self, "one", tuple(c % p for c in one))
        self._validate()

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("FpAlgebra is immutable")

    def _validate(self) -> None:
        d, p = self.dim, self.p
        if len(self.one) != d or any(len(self.mul[i][j]) != d for i in range(d) for j in range(d)):
            raise AlgebraError("structure constant table has wrong shape")
        for i in range(d):
            for j in range(i):
                if self.mul[i][j] != self.mul[j][i]:
                    raise AlgebraError("multiplication not commutative")
        for i in range(d):
            e = tuple(1 if k == i else 0 for k in range(d))
            if self.mul_vec(self.one, e) != e:
                raise AlgebraError("unit vector does not act as identity")
        # associativity spot check on basis triples
        for i in range(d):
            ei = tuple(1 if k == i else 0 for k in range(d))
            for j in range(d):
                ej = tuple(1 if k == j else 0 for k in range(d))
                for k in range(d):
                    ek = tuple(1 if l == k else 0 for l in range(d))
                    left = self.mul_vec(self.mul_vec(ei, ej), ek)
                    right = self.mul_vec(ei, self.mul_vec(ej, ek))
                    if left != right:
                        raise AlgebraError("multiplication not associative")

    @classmethod
    def quotient_ring(cls, f: ModPoly) -> FpAlgebra:
        """F_p[x]/(f) on the power basis, f monic of degree >= 1."""
        f = f.monic()
        d = f.degree
        p = f.p
        table = []
        for i in range(d):
            row = []
            for j in range(d):
                prod = ModPoly(p, (0,) * (i + j) + (1,)) % f
                row.append(tuple(prod[k] for k in range(d)))
            table.append(row)
        one = tuple(1 if k == 0 else 0 for k in range(d))
        return cls(p, d, table, one)

    # -- element operations -------------------------------------------------

    def mul_vec(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        p, d = self.p, self.dim
        out = [0] * d
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        ab = a * b
                        row = self.mul[i][j]
                        for k in range(d):
                            if row[k]:
                                out[k] = (out[k] + ab * row[k]) % p
        return tuple(out)

    def pow_vec(self, u: Sequence[int], e: int) -> Vector:
        result = self.one
        base = tuple(u)
        while e:
            if e & 1:
                result = self.mul_vec(result, base)
            base = self.mul_vec(base, base)
            e >>= 1
        return result

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if k == i else 0 for k in range(self.dim))

    def scale(self, u: Sequence[int], c: int) -> Vector:
        return tuple(c * x % self.p for x in u)

    def add(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        return tuple((a + b) % self.p for a, b in zip(u, v))

    def sub(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        return tuple((a - b) % self.p for a, b in zip(u, v))

    def min_poly(self, u: Sequence[int], unit: Sequence[int] | None = None) -> ModPoly:
        """Monic minimal polynomial of u over Z/p.

        With `unit` an idempotent e and u in the block e*A, this is the
        minimal polynomial of u as an element of that block (the power
        sequence starts at e instead of 1).
        """
        rows: list[Vector] = []
        power = tuple(unit) if unit is not None else self.one
        while True:
            rows.append(power)
            # look for a dependency among unit, u, u^2, ..., u^k
            coeffs = _dependency(rows, self.p)
            if coeffs is not None:
                return ModPoly(self.p, coeffs)
            power = self.mul_vec(power, u)


def _dependency(rows: list[Vector], p: int) -> list[int] | None:
    """Monic dependency of the last row on the previous ones, if any.

    Returns c_0..c_{k-1}, 1 with sum c_i rows[i] + rows[k] = 0, i.e. the
    minimal-polynomial coefficient vector once rows are powers.
    """
    k = len(rows) - 1
    # solve sum_{i<k} x_i rows[i] = -rows[k]
    ncols = len(rows[0])
    aug = [[rows[i][c] for i in range(k)] + [(-rows[k][c]) % p] for c in range(ncols)]
    mat = rref_mod(aug, p)
    sol = [0] * k
    for row in mat:
        pc = next(i for i, x in enumerate(row) if x)
        if pc == k:
            return None  # inconsistent: no dependency yet
        sol[pc] = row[k]
    return sol + [1]


def radical(a: FpAlgebra) -> list[Vector]:
    """RREF basis of the nilradical."""
    q = 1
    while q < a.dim:
        q *= a.p
    cols = [a.pow_vec(a.basis_vector(i), q) for i in range(a.dim)]
    # kernel of the matrix whose i-th column is basis_i^q
    rows = [[cols[j][i] for j in range(a.dim)] for i in range(a.dim)]
    basis = kernel_mod(rows, a.p, a.dim)
    return [tuple(r) for r in rref_mod(basis, a.p)]


@dataclass(frozen=True)
class _Block:
    """Internal: a subalgebra cut out by an idempotent of the quotient."""

    unit: Vector  # idempotent in the quotient algebra
    basis: tuple[Vector, ...]  # RREF basis of unit * B


def split_idempotents(a: FpAlgebra) -> list[LocalComponent]:
    """Complete orthogonal primitive idempotent decomposition.

    Components are sorted by (residue_dim, dim, idempotent coordinates);
    the same algebra always yields the identical sequence.
    """
    p = a.p
    rad = radical(a)
    quotient, project, lift = _quotient_algebra(a, rad)

    blocks = [_Block(quotient.one, tuple(quotient.basis_vector(i) for i in range(quotient.dim)))]
    final: list[_Block] = []
    while blocks:
        blk = blocks.pop()
        fixed = _frobenius_fixed(quotient, blk)
        if len(fixed) <= 1:
            final.append(blk)
            continue
        w = _pick_splitter(quotient, blk, fixed)
        mp = quotient.min_poly(w, unit=blk.unit)
        fact = factor_mod_p(mp)
        roots = sorted(
            (-g[0]) % p for g, _ in fact.factors
        )
        assert len(roots) == len(fact.factors) and all(
            g.degree == 1 for g, _ in fact.factors
        ), "Frobenius-fixed element with nonlinear minimal polynomial"
        for lam in roots:
            e = blk.unit
            denom = 1
            for mu in roots:
                if mu != lam:
                    e = quotient.mul_vec(e, quotient.sub(w, quotient.scale(blk.unit, mu)))
                    denom = denom * (lam - mu) % p
            e = quotient.scale(e, pow(denom, p - 2, p))
            basis = [quotient.mul_vec(e, b) for b in blk.basis]
            basis = [tuple(r) for r in rref_mod(basis, p)]
            blocks.append(_Block(e, tuple(basis)))
    components = []
    for blk in final:
        lifted = _lift_idempotent(a, lift(blk.unit))
        image = rref_mod([a.mul_vec(lifted, a.basis_vector(i)) for i in range(a.dim)], p)
        components.append(
            LocalComponent(idempotent=lifted, dim=len(image), residue_dim=len(blk.basis))
        )
    components.sort(key=lambda c: (c.residue_dim, c.dim, c.idempotent))
    total = sum(c.dim for c in components)
    if total != a.dim:
        raise AlgebraError("component dimensions do not sum to the algebra dimension")
    return components


def _quotient_algebra(a: FpAlgebra, rad: list[Vector]):
    """Quotient by the radical with projection and lift maps."""
    p = a.p
    pivots = [next(i for i, x in enumerate(row) if x) for row in rad]
    keep = [i for i in range(a.dim) if i not in pivots]

    def project(v: Sequence[int]) -> Vector:
        v = [c % p for c in v]
        for row, pc in zip(rad, pivots):
            if v[pc]:
                f = v[pc]
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return tuple(v[i] for i in keep)

    def lift(w: Sequence[int]) -> Vector:
        v = [0] * a.dim
        for coord, i in zip(w, keep):
            v[i] = coord
        return tuple(v)

    dim = len(keep)
    table = [
        [project(a.mul_vec(a.basis_vector(keep[i]), a.basis_vector(keep[j]))) for j in range(dim)]
        for i in range(dim)
    ]
    quotient = FpAlgebra(p, dim, table, project(a.one))
    return quotient, project, lift


def _frobenius_fixed(b: FpAlgebra, blk: _Block) -> list[Vector]:
    """Basis of {x in the block : x^p = x}, in block-spanning coordinates."""
    p = b.p
    rows_src = list(blk.basis)
    images = [b.sub(b.pow_vec(v, p), v) for v in rows_src]
    # kernel over coefficients c: sum c_i (v_i^p - v_i) = 0 -- valid since
    # x -> x^p is additive and F_p-linear
    mat = [[images[j][i] for j in range(len(images))] for i in range(b.dim)]
    coeff_kernel = kernel_mod(mat, p, len(images))
    fixed = []
    for coeffs in coeff_kernel:
        v = tuple(
            sum(c * rows_src[j][i] for j, c in enumerate(coeffs)) % p
            for i in range(b.dim)
        )
        fixed.append(v)
    return [tuple(r) for r in rref_mod(fixed, p)]


def _pick_splitter(b: FpAlgebra, blk: _Block, fixed: list[Vector]) -> Vector:
    """First Frobenius-fixed element independent of the block unit."""
    unit_row = rref_mod([blk.unit], b.p)
    for v in fixed:
        if not in_rowspace(v, unit_row, b.p):
            return v
    raise AlgebraError("no splitting element in a decomposable block")


def _lift_idempotent(a: FpAlgebra, e: Vector) -> Vector:
    """Newton-lift an idempotent of A/rad to an idempotent of A."""
    p = a.p
    for _ in range(a.dim.bit_length() + 2):
        e2 = a.mul_vec(e, e)
        if e2 == e:
            return e
        e3 = a.mul_vec(e2, e)
        e = tuple((3 * x - 2 * y) % p for x, y in zip(e2, e3))
    raise AlgebraError("idempotent lift did not converge")
