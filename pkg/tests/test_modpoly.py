import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithmeq.errors import NotPrimeError
from arithmeq.exact.modpoly import ModPoly, factor_mod_p, mod_gcd, mod_xgcd

from oracles import linear_factors_by_trial_division, roots_mod_p

primes = st.sampled_from([2, 3, 5, 7, 11, 13])


def poly_strategy(p):
    return st.lists(st.integers(0, p - 1), min_size=1, max_size=9).map(
        lambda cs: ModPoly(p, cs)
    )


def test_reduction_and_normalization():
    f = ModPoly(5, [7, -1, 10])
    assert f.coeffs == (2, 4)


def test_factor_x2_plus_1_mod_5():
    fact = factor_mod_p(ModPoly(5, [1, 0, 1]))
    assert fact.content == 1
    assert [g.coeffs for g, m in fact.factors] == [(2, 1), (3, 1)]
    # oracle: exhaustive root search
    assert roots_mod_p([1, 0, 1], 5) == [2, 3]


def test_factor_x2_plus_1_mod_2():
    fact = factor_mod_p(ModPoly(2, [1, 0, 1]))
    assert fact.factors == ((ModPoly(2, [1, 1]), 2),)


def test_factor_x3_minus_2_mod_5():
    fact = factor_mod_p(ModPoly(5, [-2, 0, 0, 1]))
    # oracle: trial division by every monic linear polynomial mod 5
    roots, rest = linear_factors_by_trial_division([-2, 0, 0, 1], 5)
    assert roots == [3]  # 3^3 = 27 = 2 mod 5
    assert [g.coeffs for g, _ in fact.factors] == [(2, 1), (4, 3, 1)]


def test_composite_modulus_rejected():
    with pytest.raises(NotPrimeError):
        factor_mod_p(ModPoly(6, [1, 1]))


@given(st.data())
def test_factorization_rebuilds_input(data):
    p = data.draw(primes)
    f = data.draw(poly_strategy(p).filter(lambda g: not g.is_zero))
    fact = factor_mod_p(f)
    rebuilt = ModPoly(p, [fact.content])
    for g, mult in fact.factors:
        for _ in range(mult):
            rebuilt = rebuilt * g
    assert rebuilt == f


@given(st.data())
def test_factor_degrees_sum(data):
    p = data.draw(primes)
    f = data.draw(poly_strategy(p).filter(lambda g: g.degree >= 1))
    fact = factor_mod_p(f)
    assert sum(g.degree * m for g, m in fact.factors) == f.degree


@given(st.data())
def test_factors_are_irreducible(data):
    p = data.draw(primes)
    f = data.draw(poly_strategy(p).filter(lambda g: g.degree >= 1))
    for g, _ in factor_mod_p(f).factors:
        # an irreducible of degree d divides x^(p^d) - x and shares no
        # factor with x^(p^e) - x for e < d
        d = g.degree
        x = ModPoly(p, (0, 1))
        frob = x.pow_mod(p**d, g)
        assert frob == x % g
        for e in range(1, d):
            frob_e = x.pow_mod(p**e, g)
            assert mod_gcd(frob_e - x, g).degree == 0


@given(st.data())
def test_xgcd_bezout(data):
    p = data.draw(primes)
    f = data.draw(poly_strategy(p).filter(lambda g: not g.is_zero))
    g = data.draw(poly_strategy(p).filter(lambda h: not h.is_zero))
    d, s, t = mod_xgcd(f, g)
    assert s * f + t * g == d
    assert d == mod_gcd(f, g)


def test_determinism_of_factor_sequence():
    f = ModPoly(7, [3, 1, 4, 1, 5, 9, 2, 6, 1])
    runs = [factor_mod_p(f) for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]
