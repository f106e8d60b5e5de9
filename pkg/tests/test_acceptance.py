"""Acceptance suite: one test per criterion, numbered, with the stated
tolerances (exact values throughout) and runtime limits.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.
"""

import io
import itertools
import random
import sys
import time
from pathlib import Path

from arithmeq.cli import main as cli_main
from arithmeq.equiv import (
    CERTIFIED_EQUIVALENT,
    EQUIVALENT_UP_TO_BOUND,
    compare_types,
    perlis_certify,
)
from arithmeq.errors import MonicError, ReducibleError
from arithmeq.exact.intpoly import IntPoly, discriminant
from arithmeq.gassmann import (
    decomposition_from_frobenius,
    frobenius_fix_counts,
    gassmann_equal,
    gassmann_implies_types,
)
from arithmeq.intutil import primes_upto
from arithmeq.nf import decompose, make_field

from conftest import MANTILLA_A, MANTILLA_B, octic
from smallgroups import all_subgroups, catalog
from test_gassmann import fano_group

INPUTS = Path(__file__).resolve().parent.parent / "inputs"


def report(criterion: str, elapsed: float, limit: float) -> None:
    print(f"ACCEPTANCE {criterion}: PASS ({elapsed:.2f}s / limit {limit:.0f}s)")
    assert elapsed < limit, f"{criterion} exceeded {limit}s ({elapsed:.2f}s)"


def test_criterion_1_discriminants():
    t0 = time.time()
    assert make_field(octic(97)).field_disc == -(2**10) * 97**7
    assert make_field(octic(1552)).field_disc == -(2**10) * 97**7
    assert make_field(MANTILLA_A).field_disc == 2**6 * 13**4 * 191**2
    assert make_field(MANTILLA_B).field_disc == 2**6 * 13**4 * 191**2
    report("1 discriminants", time.time() - t0, 10)


def test_criterion_2_ramification_vectors():
    t0 = time.time()
    k97 = make_field(octic(97))
    k1552 = make_field(octic(1552))
    assert decompose(k97, 2).pairs == ((1, 1), (1, 1), (2, 1), (4, 1))
    assert decompose(k1552, 2).pairs == ((2, 1), (2, 1), (2, 1), (2, 1))
    assert decompose(k97, 97).pairs == ((8, 1),)
    assert decompose(k1552, 97).pairs == ((8, 1),)
    report("2 ramification vectors", time.time() - t0, 10)


def test_criterion_3_perlis_certification():
    t0 = time.time()
    ka, kb = make_field(MANTILLA_A), make_field(MANTILLA_B)
    rep = perlis_certify(ka, kb)
    assert rep.verdict == CERTIFIED_EQUIVALENT
    assert ka.signature == (7, 0) and kb.signature == (7, 0)
    report("3 perlis certification", time.time() - t0, 60)


def test_criterion_4_example_sweep():
    t0 = time.time()
    k, l = make_field(octic(3)), make_field(octic(48))
    rep = compare_types(k, l, 1000)
    assert rep.verdict == EQUIVALENT_UP_TO_BOUND
    assert rep.witness is None
    swept = {p for p in primes_upto(1000)} | {2, 3}
    assert rep.compared >= len(swept)
    report("4 example sweep to 1000 incl. ramified", time.time() - t0, 60)


def _run_cli(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = cli_main([str(a) for a in argv])
    finally:
        sys.stdout = old
    return code, buf.getvalue()


def test_criterion_5_profinite_verdicts(tmp_path):
    t0 = time.time()
    code, out = _run_cli(
        "check", INPUTS / "oct3_sl3.triple", INPUTS / "oct48_sl3.triple"
    )
    assert code == 0 and "outcome = COMMENSURABLE" in out
    code, out = _run_cli(
        "check", INPUTS / "oct97_sl3.triple", INPUTS / "oct1552_sl3.triple"
    )
    assert code == 0 and "outcome = COMMENSURABLE" in out
    # perturb: drop the place over 3 from the second triple
    perturbed = tmp_path / "oct48_missing3.triple"
    perturbed.write_text(
        "poly = -48, 0, 0, 0, 0, 0, 0, 0, 1\ngroup = SL 3\nS = 2:0\ncsp = auto\n"
    )
    code, out = _run_cli("check", INPUTS / "oct3_sl3.triple", perturbed)
    assert code == 1 and "outcome = NOT_COMMENSURABLE" in out
    assert "cond.p_algebras = fail" in out
    assert "evidence.p_algebras = at p=3" in out
    report("5 profinite verdicts", time.time() - t0, 60)


def test_criterion_6_l2_degrees():
    t0 = time.time()
    from arithmeq.nf import places_over
    from arithmeq.sarith import (
        ALL_ZERO,
        CONCENTRATED,
        GroupSpec,
        Triple,
        l2_profile,
    )

    k7 = make_field(MANTILLA_A)
    spin32 = GroupSpec("Spin", 5, tuple([(3, 2)] * 7))
    finite = sorted(
        (p, pl.ordinal) for p in [3, 5, 11] for pl in places_over(k7, p)
    )
    for m in range(4):
        prof = l2_profile(Triple(k7, spin32, frozenset(finite[:m])))
        assert prof.kind == CONCENTRATED and prof.degree == 21 + 2 * m
    quad = make_field(IntPoly([-5, 0, 1]))
    prof61 = l2_profile(Triple(quad, GroupSpec("Spin", 7, ((6, 1), (6, 1)))))
    prof52 = l2_profile(Triple(quad, GroupSpec("Spin", 7, ((5, 2), (5, 2)))))
    assert prof61.degree == 6 and prof52.degree == 10
    for field in (quad, k7, make_field(IntPoly([1, 0, 1]))):
        prof = l2_profile(Triple(field, GroupSpec("SL", 3)))
        assert prof.kind == ALL_ZERO and prof.euler_sign == 0
    report("6 l2 degrees", time.time() - t0, 1)


def test_criterion_7_gassmann_oracle():
    t0 = time.time()
    checked = 0
    for order, groups in catalog().items():
        for name, group in groups:
            subs = all_subgroups(group)
            by_size: dict[int, list] = {}
            for s in subs:
                by_size.setdefault(len(s), []).append(sorted(s))
            for size, bucket in by_size.items():
                for u, v in itertools.combinations(bucket, 2):
                    equal, _ = gassmann_equal(group, u, v)
                    types_agree = gassmann_implies_types(group, u, v)
                    assert equal == types_agree, (name, size)
                    checked += 1
    assert checked > 2500  # exhaustive scan really covered the catalog
    g, u, v = fano_group()
    equal, _ = gassmann_equal(g, u, v)
    assert equal and gassmann_implies_types(g, u, v)
    report(f"7 gassmann oracle ({checked} subgroup pairs)", time.time() - t0, 120)


def _random_field_corpus(count=20, seed=20240809):
    rng = random.Random(seed)
    fields = []
    while len(fields) < count:
        degree = rng.randint(2, 6)
        coeffs = [rng.randint(-20, 20) for _ in range(degree)] + [1]
        try:
            fields.append(make_field(IntPoly(coeffs)))
        except (ReducibleError, MonicError):
            continue
    return fields


def test_criterion_8_property_suites():
    t0 = time.time()
    corpus = _random_field_corpus()
    for k in corpus:
        for p in primes_upto(50):
            profile_fast = None
            if p not in k.index_primes:
                profile_fast = decompose(k, p, method="modp").pairs
            profile_alg = decompose(k, p, method="algebra").pairs
            if profile_fast is not None:
                assert profile_fast == profile_alg  # (a) path agreement
            assert sum(e * f for e, f in profile_alg) == k.degree  # (b) sum rule
            ramified = any(e > 1 for e, f in profile_alg)
            assert ramified == (k.field_disc % p == 0)  # (b) ramified iff p | disc
        assert k.field_disc * k.index**2 == discriminant(k.poly)  # (d)
    # (c) frobenius inversion round-trips every multiset with sum <= 10
    count = 0
    for n in range(1, 11):
        for parts in _multisets_summing_to(n):
            counts = frobenius_fix_counts(parts)
            assert decomposition_from_frobenius(counts, n) == tuple(sorted(parts))
            count += 1
    assert count == sum(_partition_count(n) for n in range(1, 11))
    report("8 property suites", time.time() - t0, 300)


def _multisets_summing_to(n, smallest=1):
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in _multisets_summing_to(n - first, first):
            yield (first,) + rest


def _partition_count(n):
    return sum(1 for _ in _multisets_summing_to(n))


def test_criterion_9_cli_determinism(tmp_path):
    t0 = time.time()
    perturbed = tmp_path / "oct48_missing3.triple"
    perturbed.write_text(
        "poly = -48, 0, 0, 0, 0, 0, 0, 0, 1\ngroup = SL 3\nS = 2:0\ncsp = auto\n"
    )
    commands = [
        ("field", INPUTS / "oct97.field"),
        ("field", INPUTS / "oct1552.field"),
        ("field", INPUTS / "deg7a.field"),
        ("field", INPUTS / "deg7b.field"),
        ("decompose", INPUTS / "oct97.field", "2"),
        ("decompose", INPUTS / "oct1552.field", "2"),
        ("decompose", INPUTS / "oct97.field", "97"),
        ("equiv", INPUTS / "deg7a.field", INPUTS / "deg7b.field"),
        ("equiv", INPUTS / "oct3.field", INPUTS / "oct48.field", "--bound", "200"),
        ("check", INPUTS / "oct3_sl3.triple", INPUTS / "oct48_sl3.triple"),
        ("check", INPUTS / "oct97_sl3.triple", INPUTS / "oct1552_sl3.triple"),
        ("check", INPUTS / "oct3_sl3.triple", perturbed),
        ("l2", INPUTS / "deg7a_spin32.triple"),
        ("l2", INPUTS / "quad5_spin61.triple"),
        ("l2", INPUTS / "quad5_spin52.triple"),
        ("l2", INPUTS / "oct3_sl3.triple"),
        ("gassmann", INPUTS / "fano.group"),
    ]
    for cmd in commands:
        first = _run_cli(*cmd)
        second = _run_cli(*cmd)
        assert first == second, f"nondeterministic output for {cmd}"
    report("9 cli determinism", time.time() - t0, 600)
