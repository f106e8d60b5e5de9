import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithmeq.errors import SquarefreeError
from arithmeq.exact.intpoly import IntPoly, from_roots, poly_gcd
from arithmeq.exact.sturm import count_real_roots, sturm_signature

from conftest import MANTILLA_A
from oracles import count_real_roots_bisection


def test_signature_examples():
    assert sturm_signature(IntPoly([1, 0, 1])) == (0, 1)
    assert sturm_signature(IntPoly([-2, 0, 0, 1])) == (1, 1)
    assert sturm_signature(IntPoly([-5, 0, 1])) == (2, 0)
    assert sturm_signature(IntPoly([3, 1])) == (1, 0)


def test_totally_real_degree_seven():
    assert sturm_signature(MANTILLA_A) == (7, 0)


def test_non_squarefree_rejected():
    with pytest.raises(SquarefreeError):
        sturm_signature(IntPoly([1, 2, 1]))


@given(st.lists(st.integers(-12, 12), min_size=1, max_size=6, unique=True))
def test_split_polynomials(roots):
    f = from_roots(roots)
    assert count_real_roots(f) == len(roots)


@settings(max_examples=120)
@given(st.lists(st.integers(-20, 20), min_size=3, max_size=9))
def test_against_bisection_oracle(coeffs):
    f = IntPoly(coeffs)
    if f.degree < 1 or poly_gcd(f, f.derivative()).degree > 0:
        return
    r, s = sturm_signature(f)
    assert r + 2 * s == f.degree
    assert r == count_real_roots_bisection(f)
