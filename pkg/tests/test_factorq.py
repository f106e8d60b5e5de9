import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithmeq.errors import DegreeError
from arithmeq.exact.factorq import factor_over_q
from arithmeq.exact.intpoly import IntPoly

from conftest import octic

small_polys = st.lists(st.integers(-20, 20), min_size=2, max_size=9).map(IntPoly)


def rebuild(fact):
    out = IntPoly([fact.content])
    for g, mult in fact.factors:
        out = out * g**mult
    return out


def test_cyclotomic_like_example():
    fact = factor_over_q(IntPoly([-1, 0, 0, 0, 1]))
    assert [g.coeffs for g, m in fact.factors] == [(-1, 1), (1, 1), (1, 0, 1)]
    assert all(m == 1 for _, m in fact.factors)


def test_sqrt2_irreducible():
    assert factor_over_q(IntPoly([-2, 0, 1])).is_irreducible


def test_eisenstein_octic():
    f = octic(97)
    # Eisenstein at 97 certifies irreducibility; the routine must agree
    assert all(c % 97 == 0 for c in f.coeffs[:-1])
    assert f.coeffs[0] % (97 * 97) != 0
    assert factor_over_q(f).is_irreducible


def test_zero_rejected():
    with pytest.raises(DegreeError):
        factor_over_q(IntPoly([]))


def test_content_and_sign():
    fact = factor_over_q(IntPoly([6, 0, -6]))  # -6x^2 + 6 = -6(x-1)(x+1)
    assert fact.content == -6
    assert rebuild(fact) == IntPoly([6, 0, -6])


def test_non_monic_factors():
    f = IntPoly([1, 5]) * IntPoly([-3, 2]) * IntPoly([7])
    fact = factor_over_q(f)
    assert rebuild(fact) == f
    assert sorted(g.coeffs for g, _ in fact.factors) == [(-3, 2), (1, 5)]


def test_power_multiplicities():
    f = IntPoly([1, 1]) ** 3 * IntPoly([1, 0, 1]) ** 2
    fact = factor_over_q(f)
    assert dict((g.coeffs, m) for g, m in fact.factors) == {
        (1, 1): 3,
        (1, 0, 1): 2,
    }


def test_x_power_factor():
    f = IntPoly([0, 0, 0, 2, 2])
    fact = factor_over_q(f)
    assert rebuild(fact) == f
    assert ((0, 1) in [g.coeffs for g, _ in fact.factors])


@settings(max_examples=40)
@given(small_polys, small_polys)
def test_product_is_union_of_factorizations(f, g):
    if f.degree < 1 or g.degree < 1:
        return
    fact = factor_over_q(f * g)
    assert rebuild(fact) == f * g
    # unique factorization: factors of f*g = multiset union of the pieces
    combined: dict = {}
    for part in (f, g):
        for h, m in factor_over_q(part).factors:
            combined[h] = combined.get(h, 0) + m
    assert dict(fact.factors) == combined


@settings(max_examples=40)
@given(small_polys)
def test_factors_are_irreducible_and_primitive(f):
    if f.degree < 1:
        return
    fact = factor_over_q(f)
    assert rebuild(fact) == f
    for g, _ in fact.factors:
        assert g.lc > 0
        assert g.content() == 1
        assert factor_over_q(g).is_irreducible


def test_against_sympy_on_fixed_inputs():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    for coeffs in [
        [-1, 0, 0, 0, 0, 0, 1],
        [2, 3, -5, 7, -11, 1],
        [4, 0, -4, 0, 1],
        [-48, 0, 0, 0, 0, 0, 0, 0, 1],
    ]:
        expr = sum(c * x**i for i, c in enumerate(coeffs))
        _, sympy_factors = sympy.factor_list(expr)
        ours = factor_over_q(IntPoly(coeffs))
        ours_degs = sorted(
            g.degree for g, m in ours.factors for _ in range(m)
        )
        sympy_degs = sorted(
            sympy.degree(base, x)
            for base, mult in sympy_factors
            for _ in range(mult)
        )
        assert ours_degs == sympy_degs
