import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithmeq.errors import (
    ElementNotInGroup,
    GroupTooLarge,
    InconsistencyError,
    ParseError,
)
from arithmeq.gassmann import (
    CosetAction,
    PermGroup,
    cycle_type,
    decomposition_from_frobenius,
    format_permutation,
    frobenius_fix_counts,
    gassmann_equal,
    gassmann_implies_types,
    identity,
    parse_generators,
    parse_permutation,
    perm_character,
)


def fano_group():
    """The simple group of order 168 on the seven points of the projective
    plane over the field of two elements, with a point and a line stabilizer."""

    def vecmul(m, v):
        return tuple(sum(m[i][k] * v[k] for k in range(3)) % 2 for i in range(3))

    def enc(v):
        return (v[0] | v[1] << 1 | v[2] << 2) - 1

    def dec(i):
        i += 1
        return (i & 1, (i >> 1) & 1, (i >> 2) & 1)

    def perm_of(m):
        return tuple(enc(vecmul(m, dec(i))) for i in range(7))

    g = PermGroup(7, [perm_of(((1, 1, 0), (0, 1, 0), (0, 0, 1))),
                      perm_of(((0, 0, 1), (1, 0, 0), (0, 1, 0)))])
    point_stab = [h for h in g if h[0] == 0]
    line = frozenset({0, 1, 2})  # the vectors 100, 010, 110
    line_stab = [h for h in g if frozenset(h[x] for x in line) == line]
    return g, point_stab, line_stab


def test_fano_triple_is_gassmann():
    g, u, v = fano_group()
    assert len(g) == 168 and len(u) == 24 and len(v) == 24
    equal, witness = gassmann_equal(g, u, v)
    assert equal and witness is None
    assert gassmann_implies_types(g, u, v)


def test_fano_stabilizers_not_conjugate_check_is_nontrivial():
    g, u, v = fano_group()
    # sanity: the two actions are genuinely different subgroups
    assert set(u) != set(v)


def test_character_at_identity_is_index():
    g, u, _ = fano_group()
    action = CosetAction(g, u)
    assert perm_character(action, identity(7)) == 7


def test_s3_point_stabilizer_character():
    s3 = PermGroup(3, [(1, 0, 2), (1, 2, 0)])
    action = CosetAction(s3, [(0, 2, 1)])
    assert perm_character(action, (1, 0, 2)) == 1
    assert perm_character(action, identity(3)) == 3


def test_klein_four_counterexample():
    k4 = PermGroup(4, [(1, 0, 3, 2), (2, 3, 0, 1)])
    a, b = (1, 0, 3, 2), (2, 3, 0, 1)
    equal, witness = gassmann_equal(k4, [a], [b])
    assert not equal
    action_a = CosetAction(k4, [a])
    action_b = CosetAction(k4, [b])
    assert perm_character(action_a, witness) != perm_character(action_b, witness)
    assert perm_character(action_b, a) == 0
    assert perm_character(action_a, a) == 2


def test_conjugate_subgroups_trivially_gassmann():
    g, u, _ = fano_group()
    t = sorted(g.elements)[5]
    from arithmeq.gassmann import compose, inverse

    conj = [compose(compose(t, x), inverse(t)) for x in u]
    equal, _ = gassmann_equal(g, u, conj)
    assert equal
    assert gassmann_implies_types(g, u, conj)


def test_burnside_orbit_count():
    g, u, _ = fano_group()
    action = CosetAction(g, u)
    total = sum(perm_character(action, x) for x in g)
    # transitive action: average number of fixed points is 1
    assert total == len(g)


def test_foreign_element_rejected():
    s3 = PermGroup(3, [(1, 0, 2), (1, 2, 0)])
    action = CosetAction(s3, [(0, 2, 1)])
    with pytest.raises(ElementNotInGroup):
        perm_character(action, (2, 1, 0, 3))


def test_cap_enforced():
    with pytest.raises(GroupTooLarge):
        PermGroup(9, [tuple(range(1, 9)) + (0,), (1, 0) + tuple(range(2, 9))], cap=100)


def test_recursion_examples():
    assert decomposition_from_frobenius({1: 1, 2: 3, 4: 7}, 7) == (1, 2, 4)
    assert decomposition_from_frobenius({s: 4 for s in range(1, 5)}, 4) == (1, 1, 1, 1)
    counts = {s: 0 for s in range(1, 6)}
    counts[5] = 5
    assert decomposition_from_frobenius(counts, 5) == (5,)


def test_recursion_inconsistency():
    with pytest.raises(InconsistencyError):
        decomposition_from_frobenius({1: 2, 2: 1}, 4)
    with pytest.raises(InconsistencyError):
        decomposition_from_frobenius({1: 1}, 5)


@settings(max_examples=200)
@given(
    st.lists(st.integers(1, 10), min_size=1, max_size=10).filter(
        lambda fs: sum(fs) <= 10
    )
)
def test_recursion_inverts_forward_map(degrees):
    n = sum(degrees)
    counts = frobenius_fix_counts(degrees)
    assert decomposition_from_frobenius(counts, n) == tuple(sorted(degrees))


def test_fix_counts_match_real_frobenius_action():
    # cycle type of a permutation acting on points = residue degrees; the
    # fixed points of g^s on the points realize the divisor sums
    g = (1, 2, 0, 4, 3, 5, 6)  # cycle type (1, 1, 2, 3)
    n = 7
    from arithmeq.gassmann import compose

    power = identity(n)
    for s in range(1, n + 1):
        power = compose(power, g)
        fixed = sum(1 for i in range(n) if power[i] == i)
        assert fixed == sum(f for f in cycle_type(g) if s % f == 0)


def test_parse_and_format_roundtrip():
    gens = parse_generators("(1 2 3)(4 5) (6 7)", 7)
    assert [format_permutation(g) for g in gens] == ["(1 2 3)(4 5)", "(6 7)"]
    assert parse_permutation("()", 4) == identity(4)
    with pytest.raises(ParseError):
        parse_generators("(1 2", 4)
    with pytest.raises(ParseError):
        parse_generators("(1 9)", 4)
    with pytest.raises(ParseError):
        parse_generators("(1 1)", 4)
