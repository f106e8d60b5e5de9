"""Arithmetical equivalence of number fields.

Three layers of evidence:

* an invariant battery (degree, discriminant, signature) whose mismatch
  disproves equivalence;
* decomposition-type sweeps over all primes up to a bound plus every
  prime dividing either polynomial discriminant, which can only certify
  *in*equivalence (via a witness prime);
* Perlis certification in prime degree: the fields are equivalent iff
  the compositum has degree < p^2, decided exactly by factoring the
  Trager norm of one defining polynomial over the other field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeError
from .exact.factorq import factor_over_q
from .exact.intpoly import IntPoly, poly_gcd, resultant
from .exact.modpoly import ModPoly, mod_gcd
from .intutil import factorint, is_prime, primes_upto
from .nf import NumberField, decomposition_type

CERTIFIED_EQUIVALENT = "CERTIFIED_EQUIVALENT"
CERTIFIED_DISTINCT = "CERTIFIED_DISTINCT"
EQUIVALENT_UP_TO_BOUND = "EQUIVALENT_UP_TO_BOUND"
DISTINCT = "DISTINCT"

DEFAULT_BOUND = 1000


@dataclass(frozen=True)
class InvariantBattery:
    degree_equal: bool
    disc_equal: bool
    signature_equal: bool

    @property
    def all_equal(self) -> bool:
        return self.degree_equal and self.disc_equal and self.signature_equal


@dataclass(frozen=True)
class TypeRecord:
    """Decomposition types of one swept prime on both sides."""

    p: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.left == self.right


@dataclass(frozen=True)
class EquivReport:
    """Outcome of an equivalence test with its evidence trail.

    witness is the smallest prime (within the sweep) with differing
    decomposition types, present exactly for DISTINCT verdicts; records
    hold the per-prime comparisons up to and including the witness.
    norm_factor_degrees carries the compositum evidence in prime degree
    (degrees of the irreducible factors of the norm polynomial).
    """

    verdict: str
    method: str
    bound: int | None = None
    witness: int | None = None
    compared: int = 0
    records: tuple[TypeRecord, ...] = ()
    battery: InvariantBattery | None = None
    norm_factor_degrees: tuple[int, ...] = ()
    shift: int | None = None


def invariant_battery(k: NumberField, l: NumberField) -> InvariantBattery:
    """Exact equality of degree, field discriminant, and signature."""
    return InvariantBattery(
        degree_equal=k.degree == l.degree,
        disc_equal=k.field_disc == l.field_disc,
        signature_equal=k.signature == l.signature,
    )


def _sweep_primes(k: NumberField, l: NumberField, bound: int) -> list[int]:
    from .exact.intpoly import discriminant

    ps = set(primes_upto(bound))
    for f in (k.poly, l.poly):
        if f.degree >= 2:
            ps.update(p for p, _ in factorint(discriminant(f)))
    return sorted(ps)


def compare_types(k: NumberField, l: NumberField, bound: int = DEFAULT_BOUND) -> EquivReport:
    """Sweep decomposition types; DISTINCT on the first mismatch."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    battery = invariant_battery(k, l)
    records: list[TypeRecord] = []
    for p in _sweep_primes(k, l, bound):
        rec = TypeRecord(p, decomposition_type(k, p), decomposition_type(l, p))
        records.append(rec)
        if not rec.equal:
            return EquivReport(
                verdict=DISTINCT,
                method="sweep",
                bound=bound,
                witness=p,
                compared=len(records),
                records=tuple(records),
                battery=battery,
            )
    return EquivReport(
        verdict=EQUIVALENT_UP_TO_BOUND,
        method="sweep",
        bound=bound,
        compared=len(records),
        records=tuple(records),
        battery=battery,
    )


# -- Trager norm ----------------------------------------------------------------


def _norm_of_shifted(f: IntPoly, g: IntPoly, s: int) -> IntPoly:
    """Res_y(f(y), g(x - s*y)) as a polynomial in x, by interpolation.

    For monic f this is the norm of g(x - s*theta) from K[x] to Q[x],
    a monic polynomial of degree deg(f)*deg(g).
    """
    n = f.degree * g.degree
    points = []
    values = []
    x0 = -(n // 2)
    while len(points) < n + 1:
        # coefficients of y -> g(x0 - s*y) by Horner in (x0 - s*y)
        acc = IntPoly((g[g.degree],))
        lin = IntPoly((x0, -s))
        for i in range(g.degree - 1, -1, -1):
            acc = acc * lin + IntPoly((g[i],))
        points.append(x0)
        values.append(resultant(f, acc))
        x0 += 1
    return _interpolate_integer(points, values)


def _interpolate_integer(xs: list[int], ys: list[int]) -> IntPoly:
    """Unique degree-<len(xs) integer polynomial through the given points."""
    coeffs = [Fraction(y) for y in ys]
    # Newton divided differences
    for j in range(1, len(xs)):
        for i in range(len(xs) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form
    poly = [Fraction(0)] * len(xs)
    poly[0] = coeffs[-1]
    for i in range(len(xs) - 2, -1, -1):
        # poly <- poly*(x - xs[i]) + coeffs[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * c for s, c in zip(shifted, poly)]
        poly[0] += coeffs[i]
    assert all(c.denominator == 1 for c in poly), "interpolation not integral"
    return IntPoly(int(c) for c in poly)


def _is_squarefree(f: IntPoly) -> bool:
    """Exact squarefreeness over Q, with a fast modular certificate."""
    for p in primes_upto(200):
        if p == 2 or f.lc % p == 0:
            continue
        fp = ModPoly.from_int_poly(f, p)
        if fp.degree == f.degree and mod_gcd(fp, fp.derivative()).degree == 0:
            return True
    return poly_gcd(f, f.derivative()).degree == 0


def perlis_certify(k: NumberField, l: NumberField) -> EquivReport:
    """Decide equivalence of prime-degree fields via the compositum degree.

    Searches shifts s = 0, 1, 2, ... for a squarefree norm
    Res_y(f_K(y), f_L(x - s*y)); the fields are arithmetically equivalent
    exactly when that degree-p^2 norm factors nontrivially over Q.
    """
    battery = invariant_battery(k, l)
    if k.degree != l.degree:
        return EquivReport(
            verdict=CERTIFIED_DISTINCT, method="degree", battery=battery
        )
    p = k.degree
    if not is_prime(p):
        raise DegreeError(f"Perlis certification needs prime degree, got {p}")
    s = 0
    while True:
        norm = _norm_of_shifted(k.poly, l.poly, s)
        assert norm.degree == p * p and norm.is_monic
        if _is_squarefree(norm):
            break
        s += 1
        if s > 4 * p * p:  # far beyond the number of bad shifts
            raise AssertionError("no squarefree shift found")
    fact = factor_over_q(norm)
    degrees = tuple(sorted(g.degree for g, _ in fact.factors))
    verdict = CERTIFIED_EQUIVALENT if len(degrees) > 1 else CERTIFIED_DISTINCT
    return EquivReport(
        verdict=verdict,
        method="perlis",
        battery=battery,
        norm_factor_degrees=degrees,
        shift=s,
    )


def arith_equiv(
    k: NumberField, l: NumberField, bound: int = DEFAULT_BOUND
) -> EquivReport:
    """Strongest obtainable verdict.

    Prime equal degrees get Perlis certification; anything else falls
    back to the sweep, whose positive outcome is explicitly only
    "no witness below the bound".
    """
    if k.degree == l.degree and is_prime(k.degree):
        return perlis_certify(k, l)
    return compare_types(k, l, bound)
