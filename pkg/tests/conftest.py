import hypothesis
import pytest

from arithmeq.exact.intpoly import IntPoly
from arithmeq.nf import make_field

hypothesis.settings.register_profile(
    "default", max_examples=60, deadline=None
)
hypothesis.settings.load_profile("default")


MANTILLA_A = IntPoly([-2, 0, 24, 10, -28, -18, 0, 1])
MANTILLA_B = IntPoly([11, 13, -41, -19, 51, -15, -3, 1])


def octic(a: int) -> IntPoly:
    return IntPoly([-a] + [0] * 7 + [1])


@pytest.fixture(scope="session")
def field_gauss():
    return make_field(IntPoly([1, 0, 1]))


@pytest.fixture(scope="session")
def field_sqrt5():
    return make_field(IntPoly([-5, 0, 1]))


@pytest.fixture(scope="session")
def field_oct3():
    return make_field(octic(3))


@pytest.fixture(scope="session")
def field_oct48():
    return make_field(octic(48))


@pytest.fixture(scope="session")
def field_oct97():
    return make_field(octic(97))


@pytest.fixture(scope="session")
def field_oct1552():
    return make_field(octic(1552))


@pytest.fixture(scope="session")
def field_deg7a():
    return make_field(MANTILLA_A)


@pytest.fixture(scope="session")
def field_deg7b():
    return make_field(MANTILLA_B)


@pytest.fixture(scope="session")
def field_rationals():
    return make_field(IntPoly([0, 1]))
