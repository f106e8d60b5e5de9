"""S-arithmetic triples and profinite commensurability checks.

A triple bundles a number field, a group scheme from a small catalog
(SL(n) or a spin group given by its real-place signatures), and a finite
set of finite places; the infinite places are always implicitly present.

The decision battery mirrors the theory exactly:

* necessary conditions: equal group dimension and field degree,
  arithmetical equivalence of the fields, equal sets of primes under the
  finite places, residue-degree matching of the chosen places at
  unramified primes, and equality of every p-algebra invariant (the
  multiset of dim G * e * f over places above p outside S);
* sufficient construction: equivalent fields, identical isotropic group
  data, finite places covering all ramified primes, and residue-degree
  bijections at the remaining (unramified) primes.

Failures of necessary conditions prove non-commensurability only under
the congruence subgroup property, so verdicts degrade to UNKNOWN when
CSP is not asserted or derivable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .equiv import (
    CERTIFIED_EQUIVALENT,
    DISTINCT,
    EQUIVALENT_UP_TO_BOUND,
    arith_equiv,
)
from .errors import FormError, NotPrimeError, PlaceError
from .intutil import is_prime, primes_upto
from .nf import NumberField, Place, places_over

COMMENSURABLE = "COMMENSURABLE"
NOT_COMMENSURABLE = "NOT_COMMENSURABLE"
UNKNOWN = "UNKNOWN"

CSP_ASSERTED = "ASSERTED"
CSP_AUTO = "AUTO"
CSP_UNKNOWN = "UNKNOWN"

DEFAULT_BOUND = 1000


# -- group catalog -------------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    """SL(n) or Spin of a quadratic form given by real-place signatures.

    For Spin, `signatures` lists one (p_i, q_i) per real place of the
    field (canonical infinite-place order) with constant p_i + q_i.
    local_rank_overrides assigns k_v-ranks at finite places (keyed by
    (p, ordinal)) where the split default would be a guess.
    """

    family: str  # "SL" | "Spin"
    n: int = 0  # SL size, or p+q for Spin
    signatures: tuple[tuple[int, int], ...] = ()
    local_rank_overrides: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.family == "SL":
            if self.n < 2:
                raise FormError("SL(n) needs n >= 2")
        elif self.family == "Spin":
            if self.n < 3:
                raise FormError("Spin needs a form of dimension >= 3")
            for pq in self.signatures:
                if pq[0] + pq[1] != self.n or min(pq) < 0:
                    raise FormError(f"signature {pq} does not match dimension {self.n}")
        else:
            raise FormError(f"unknown family {self.family!r}")

    @property
    def dim_g(self) -> int:
        """Absolute dimension of the group."""
        if self.family == "SL":
            return self.n * self.n - 1
        return self.n * (self.n - 1) // 2

    @property
    def rank_c(self) -> int:
        """Absolute (complex) rank."""
        if self.family == "SL":
            return self.n - 1
        return self.n // 2

    @property
    def split_at_finite_places(self) -> bool:
        """Whether the finite-place rank is known to equal rank_c.

        SL(n) is split over every field.  The five-dimensional form of
        signature (3, 2) everywhere is the split form of type B2 (two
        hyperbolic planes plus a line), hence split at all finite places.
        Anything else needs explicit local rank overrides.
        """
        if self.family == "SL":
            return True
        return self.n == 5 and bool(self.signatures) and all(
            pq == (3, 2) for pq in self.signatures
        )

    def describe(self) -> str:
        if self.family == "SL":
            return f"SL {self.n}"
        return "Spin " + " ".join(f"({p},{q})" for p, q in self.signatures)


def isotropic_over_k(spec: GroupSpec, k: NumberField) -> bool:
    """Catalog isotropy test.

    SL(n) is always isotropic.  A quadratic form of dimension >= 5 over a
    number field is isotropic iff it is indefinite at every real place
    (it is automatically isotropic at the finite places); smaller spin
    forms are out of catalog.
    """
    if spec.family == "SL":
        return True
    if spec.n < 5:
        raise FormError("isotropy undecided for spin forms of dimension < 5")
    _check_signature_count(spec, k)
    return all(min(pq) >= 1 for pq in spec.signatures)


def _check_signature_count(spec: GroupSpec, k: NumberField) -> None:
    if spec.family == "Spin" and len(spec.signatures) != k.signature[0]:
        raise FormError(
            f"{len(spec.signatures)} signatures given, field has {k.signature[0]} real places"
        )


# -- triples -------------------------------------------------------------------


@dataclass(frozen=True)
class Triple:
    """Ambient datum (field, group, finite part of S, CSP status).

    finite_s references places as (p, ordinal) pairs resolved against
    places_over; the infinite places are implicitly always in S.
    """

    field: NumberField
    group: GroupSpec
    finite_s: frozenset[tuple[int, int]] = frozenset()
    csp: str = CSP_AUTO

    def __post_init__(self):
        if self.csp not in (CSP_ASSERTED, CSP_AUTO, CSP_UNKNOWN):
            raise ValueError(f"bad csp flag {self.csp!r}")
        _check_signature_count(self.group, self.field)
        for p, ordinal in self.finite_s:
            if not is_prime(p):
                raise NotPrimeError(f"S entry {p}:{ordinal}: {p} is not prime")
            places = places_over(self.field, p)
            if not 0 <= ordinal < len(places):
                raise PlaceError(
                    f"S entry {p}:{ordinal} does not resolve (only "
                    f"{len(places)} places over {p})"
                )

    def resolved_place(self, p: int, ordinal: int) -> Place:
        return places_over(self.field, p)[ordinal]

    def s_primes(self) -> tuple[int, ...]:
        """Rational primes under the finite places of S, ascending."""
        return tuple(sorted({p for p, _ in self.finite_s}))

    def s_places_over(self, p: int) -> list[Place]:
        return [
            self.resolved_place(q, o) for q, o in sorted(self.finite_s) if q == p
        ]


def local_rank(t: Triple, p: int, ordinal: int) -> int:
    """k_v-rank of the group at a finite place.

    Uses an explicit override when present; otherwise the split default
    rank_c, refusing to guess for non-split spin data.
    """
    key = (p, ordinal)
    overrides = t.group.local_rank_overrides
    if key in overrides:
        return overrides[key]
    if t.group.split_at_finite_places:
        return t.group.rank_c
    raise FormError(
        f"finite-place rank at {p}:{ordinal} unknown for {t.group.describe()}; "
        "give a local_rank override"
    )


def _infinite_rank_sum(t: Triple) -> int:
    r, s = t.field.signature
    total = 0
    if t.group.family == "SL":
        total += r * (t.group.n - 1)
    else:
        total += sum(min(pq) for pq in t.group.signatures)
    total += s * t.group.rank_c
    return total


def s_rank(t: Triple) -> int:
    """Sum of local ranks over all places of S (infinite ones included)."""
    total = _infinite_rank_sum(t)
    for p, ordinal in sorted(t.finite_s):
        total += local_rank(t, p, ordinal)
    return total


@dataclass(frozen=True)
class RankCheck:
    ok: bool
    rank: int
    reasons: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def higher_rank_check(t: Triple) -> RankCheck:
    """rank_S >= 2 and no compact factor at the finite places of S."""
    reasons = []
    rank = s_rank(t)
    if rank < 2:
        reasons.append(f"rank_S = {rank} < 2")
    for p, ordinal in sorted(t.finite_s):
        if local_rank(t, p, ordinal) < 1:
            reasons.append(f"compact factor at finite place {p}:{ordinal}")
    return RankCheck(ok=not reasons, rank=rank, reasons=tuple(reasons))


# -- p-algebra invariants --------------------------------------------------------


@dataclass(frozen=True)
class PAlgebraInvariant:
    """Simple-ideal dimension multiset of the p-adic Lie algebra.

    One entry dim G * e_v * f_v per place v over p outside S; the p-adic
    factor group is trivial (empty multiset) when S contains all places
    over p.
    """

    p: int
    dims: tuple[int, ...]


def p_algebra_invariant(t: Triple, p: int) -> PAlgebraInvariant:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    in_s = {o for q, o in t.finite_s if q == p}
    dims = sorted(
        t.group.dim_g * pl.e * pl.f
        for pl in places_over(t.field, p)
        if pl.ordinal not in in_s
    )
    return PAlgebraInvariant(p=p, dims=tuple(dims))


# -- verdicts ---------------------------------------------------------------------


@dataclass(frozen=True)
class Condition:
    name: str
    status: str  # "pass" | "fail" | "skip"
    evidence: str = ""


@dataclass(frozen=True)
class Verdict:
    outcome: str
    conditions: tuple[Condition, ...]
    csp_caveat: str | None = None

    def failed(self) -> tuple[Condition, ...]:
        return tuple(c for c in self.conditions if c.status == "fail")


def resolve_csp(t: Triple) -> str:
    """ASSERTED, or AUTO upgraded via isotropy + higher rank, else UNKNOWN."""
    if t.csp == CSP_ASSERTED:
        return CSP_ASSERTED
    if t.csp == CSP_UNKNOWN:
        return CSP_UNKNOWN
    try:
        if isotropic_over_k(t.group, t.field) and higher_rank_check(t).ok:
            return CSP_ASSERTED
    except FormError:
        pass
    return CSP_UNKNOWN


def _ramified_primes(a: Triple, b: Triple) -> tuple[int, ...]:
    rams = set(a.field.ramified_primes()) | set(b.field.ramified_primes())
    return tuple(sorted(rams))


def check_necessary(a: Triple, b: Triple, bound: int = DEFAULT_BOUND) -> Verdict:
    """Evaluate the necessary-condition battery.

    Any failure proves non-commensurability when both sides have CSP;
    without CSP the outcome degrades to UNKNOWN.  All conditions passing
    is still only UNKNOWN (necessary, not sufficient).
    """
    conds: list[Condition] = []

    dim_ok = a.group.dim_g == b.group.dim_g
    conds.append(
        Condition(
            "dim_g",
            "pass" if dim_ok else "fail",
            f"{a.group.dim_g} vs {b.group.dim_g}",
        )
    )
    deg_ok = a.field.degree == b.field.degree
    conds.append(
        Condition(
            "field_degree",
            "pass" if deg_ok else "fail",
            f"{a.field.degree} vs {b.field.degree}",
        )
    )

    equiv_report = arith_equiv(a.field, b.field, bound)
    fields_equiv = equiv_report.verdict in (CERTIFIED_EQUIVALENT, EQUIVALENT_UP_TO_BOUND)
    evidence = equiv_report.verdict
    if equiv_report.verdict == DISTINCT:
        evidence += f" (witness prime {equiv_report.witness})"
    conds.append(
        Condition("fields_equivalent", "pass" if fields_equiv else "fail", evidence)
    )

    s_ok = a.s_primes() == b.s_primes()
    conds.append(
        Condition(
            "s_unrelated_primes",
            "pass" if s_ok else "fail",
            f"S-related primes {list(a.s_primes())} vs {list(b.s_primes())}",
        )
    )

    ram = set(_ramified_primes(a, b))
    res_fail = None
    for p in sorted(set(a.s_primes()) | set(b.s_primes())):
        if p in ram:
            continue
        fa = sorted(pl.f for pl in a.s_places_over(p))
        fb = sorted(pl.f for pl in b.s_places_over(p))
        if fa != fb:
            res_fail = (p, fa, fb)
            break
    if res_fail is None:
        conds.append(Condition("s_residue_degrees", "pass", "unramified S-places match"))
    else:
        p, fa, fb = res_fail
        conds.append(
            Condition("s_residue_degrees", "fail", f"at p={p}: {fa} vs {fb}")
        )

    palg_fail = None
    sweep = sorted(
        set(primes_upto(bound)) | set(a.s_primes()) | set(b.s_primes()) | ram
    )
    for p in sweep:
        ia = p_algebra_invariant(a, p)
        ib = p_algebra_invariant(b, p)
        if ia.dims != ib.dims:
            palg_fail = (p, ia.dims, ib.dims)
            break
    if palg_fail is None:
        conds.append(
            Condition("p_algebras", "pass", f"all p <= {sweep[-1] if sweep else bound}")
        )
    else:
        p, da, db = palg_fail
        conds.append(
            Condition("p_algebras", "fail", f"at p={p}: {list(da)} vs {list(db)}")
        )

    failures = [c for c in conds if c.status == "fail"]
    if not failures:
        return Verdict(outcome=UNKNOWN, conditions=tuple(conds))
    csp_a, csp_b = resolve_csp(a), resolve_csp(b)
    if csp_a == CSP_ASSERTED and csp_b == CSP_ASSERTED:
        return Verdict(outcome=NOT_COMMENSURABLE, conditions=tuple(conds))
    return Verdict(
        outcome=UNKNOWN,
        conditions=tuple(conds),
        csp_caveat=(
            "necessary conditions failed but CSP is not established "
            f"(csp: {csp_a}/{csp_b}); failures are not conclusive"
        ),
    )


@dataclass(frozen=True)
class SufficientReport:
    ok: bool
    reasons: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def check_sufficient(a: Triple, b: Triple, bound: int = DEFAULT_BOUND) -> SufficientReport:
    """Match against the known sufficient construction.

    Requires: equivalent fields, identical isotropic group data, finite
    places covering all ramified primes on both sides, and residue-degree
    preserving bijections between the S-places at unramified primes.
    """
    reasons = []

    same_group = (
        a.group.family == b.group.family
        and a.group.n == b.group.n
        and sorted(a.group.signatures) == sorted(b.group.signatures)
    )
    if not same_group:
        reasons.append("group data differ")
    else:
        try:
            if not (isotropic_over_k(a.group, a.field) and isotropic_over_k(b.group, b.field)):
                reasons.append("group is not isotropic over the field")
        except FormError as exc:
            reasons.append(f"isotropy undecided: {exc}")

    equiv_report = arith_equiv(a.field, b.field, bound)
    if equiv_report.verdict not in (CERTIFIED_EQUIVALENT, EQUIVALENT_UP_TO_BOUND):
        reasons.append("fields are not arithmetically equivalent")

    ram = set(_ramified_primes(a, b))
    for t, tag in ((a, "first"), (b, "second")):
        for p in sorted(ram):
            got = {o for q, o in t.finite_s if q == p}
            want = set(range(len(places_over(t.field, p))))
            if got != want:
                reasons.append(
                    f"{tag} triple misses places over ramified prime {p}"
                )
    for p in sorted(set(a.s_primes()) | set(b.s_primes())):
        if p in ram:
            continue
        fa = sorted(pl.f for pl in a.s_places_over(p))
        fb = sorted(pl.f for pl in b.s_places_over(p))
        if fa != fb:
            reasons.append(f"no residue-degree bijection of S-places at p={p}")
    return SufficientReport(ok=not reasons, reasons=tuple(reasons))


def decide_commensurability(
    a: Triple, b: Triple, bound: int = DEFAULT_BOUND
) -> Verdict:
    """Full pipeline: higher-rank gate, necessary battery, sufficient upgrade."""
    rank_a = higher_rank_check(a)
    rank_b = higher_rank_check(b)
    gate = Condition(
        "higher_rank",
        "pass" if rank_a.ok and rank_b.ok else "fail",
        "; ".join(rank_a.reasons + rank_b.reasons) or f"ranks {rank_a.rank}, {rank_b.rank}",
    )
    if not (rank_a.ok and rank_b.ok):
        return Verdict(
            outcome=UNKNOWN,
            conditions=(gate,),
            csp_caveat="outside the higher-rank regime; the theory does not apply",
        )
    verdict = check_necessary(a, b, bound)
    conds = (gate,) + verdict.conditions
    if verdict.outcome == NOT_COMMENSURABLE:
        return Verdict(NOT_COMMENSURABLE, conds, verdict.csp_caveat)
    sufficient = check_sufficient(a, b, bound)
    conds = conds + (
        Condition(
            "sufficient_construction",
            "pass" if sufficient.ok else "skip",
            "; ".join(sufficient.reasons) or "matched",
        ),
    )
    if sufficient.ok and not verdict.failed():
        return Verdict(COMMENSURABLE, conds, verdict.csp_caveat)
    return Verdict(verdict.outcome, conds, verdict.csp_caveat)


# -- l2-Betti profile ---------------------------------------------------------------


@dataclass(frozen=True)
class L2Profile:
    """Concentration degree of the l2-Betti numbers and the Euler sign.

    kind is ALL_ZERO or CONCENTRATED; a concentrated profile sits in the
    single degree `degree` and has euler_sign (-1)^degree, while the
    all-zero profile has Euler characteristic 0.
    """

    kind: str
    degree: int | None
    euler_sign: int


ALL_ZERO = "ALL_ZERO"
CONCENTRATED = "CONCENTRATED"


def l2_profile(t: Triple) -> L2Profile:
    """Where the l2-Betti numbers live.

    Every noncompact archimedean factor must carry discrete series: the
    fundamental-rank defect (complex rank of the Lie algebra minus
    complex rank of a maximal compact) must vanish, and complex places
    always have positive defect.  If any factor fails, everything
    vanishes.  Otherwise the profile concentrates in half the
    archimedean symmetric-space dimension plus the sum of the finite
    local ranks (the Steinberg degrees), and the Euler characteristic
    has sign (-1)^degree.
    """
    r, s = t.field.signature
    _check_signature_count(t.group, t.field)
    if s > 0:
        return L2Profile(kind=ALL_ZERO, degree=None, euler_sign=0)
    degree = 0
    if t.group.family == "SL":
        n = t.group.n
        defect = (n - 1) - n // 2  # sl(n,R): rank n-1, compact so(n) rank n//2
        if r > 0 and defect > 0:
            return L2Profile(kind=ALL_ZERO, degree=None, euler_sign=0)
        dim = n * (n + 1) // 2 - 1  # SL(n,R)/SO(n)
        degree += r * (dim // 2)
    else:
        for p, q in t.group.signatures:
            if min(p, q) == 0:
                continue  # compact factor: the symmetric space is a point
            defect = (p + q) // 2 - p // 2 - q // 2
            if defect > 0:
                return L2Profile(kind=ALL_ZERO, degree=None, euler_sign=0)
            dim = p * q  # Spin(p,q)/(Spin(p) x Spin(q))
            assert dim % 2 == 0, "discrete series force even dimension"
            degree += dim // 2
    for p, ordinal in sorted(t.finite_s):
        degree += local_rank(t, p, ordinal)
    return L2Profile(kind=CONCENTRATED, degree=degree, euler_sign=(-1) ** degree)
