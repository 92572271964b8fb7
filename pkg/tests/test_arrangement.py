from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crosscut.arrangement import Arrangement, negate, parse_signs, separation, sign_string
from crosscut.catalog import (
    PRISM_CHAMBER,
    braid,
    braid_fundamental,
    fig2,
    hexagon,
    prism4,
    random_arrangements,
    weak_order,
)
from crosscut.checks import chamber_poset_violation_all
from crosscut.errors import DimensionMismatch, InvalidInput, NotSubarrangement
from crosscut.lattice import is_crosscut_simplicial, is_semidistributive, try_lattice
from crosscut.poset import chain, is_isomorphic
from oracles import lp_feasible


def test_invalid_arrangements():
    with pytest.raises(InvalidInput):
        Arrangement([[0, 0]])
    with pytest.raises(InvalidInput):
        Arrangement([[1, 1], [2, 2]])
    with pytest.raises(DimensionMismatch):
        Arrangement([[1, 0], [1, 0, 0]])


def test_labels_and_rational_input():
    A = prism4()
    assert [A.label(i) for i in range(4)] == ["x", "y", "x+y+z", "x+y-z"]
    B = Arrangement([["1/2", "1/3"]])
    assert B.vectors == ((3, 2),)


def test_chamber_counts():
    assert len(Arrangement([[1]]).chambers()) == 2
    assert len(fig2().chambers()) == 6
    assert len(braid(4).chambers()) == 24


def test_separation_sets():
    A = fig2()
    c = A.chambers()[0]
    assert separation(c, c) == frozenset()
    assert separation(c, negate(c)) == frozenset(range(len(A)))
    for d in A.chambers():
        s1, s2 = separation(c, d), separation(c, negate(d))
        assert s1 | s2 == frozenset(range(len(A))) and not s1 & s2


def test_adjacent_chambers_differ_in_one_sign():
    A = fig2()
    for c in A.chambers():
        for h in A.walls(c):
            d = c[:h] + (-c[h],) + c[h + 1 :]
            assert A.is_chamber(d)
            assert len(separation(c, d)) == 1


def test_chamber_posets():
    one = Arrangement([[1, 0]])
    assert is_isomorphic(one.chamber_poset((1,)), chain(2))
    A = fig2()
    for c0 in A.chambers():
        assert is_isomorphic(A.chamber_poset(c0), hexagon())
    B = braid(4)
    assert is_isomorphic(B.chamber_poset(braid_fundamental(4)), weak_order(4))


def test_chamber_poset_needs_chamber():
    with pytest.raises(InvalidInput):
        prism4().chamber_poset(parse_signs("++--"))


def test_walls():
    A = fig2()
    assert all(len(A.walls(c)) == 2 for c in A.chambers())
    c0 = A.chambers()[0]
    assert A.upper_walls(c0, c0) == A.walls(c0)
    P = prism4()
    assert P.walls(PRISM_CHAMBER) == (0, 1, 2, 3)
    assert not P.is_simplicial_chamber(PRISM_CHAMBER)


def test_incidence():
    A = fig2()
    for c in A.chambers():
        for h in A.walls(c):
            assert A.incident(c, [h])
        assert A.incident(c, A.walls(c))
    P = prism4()
    assert not P.incident(PRISM_CHAMBER, [2, 3])


def test_bineighborly_examples():
    A = fig2()
    assert all(A.is_bineighborly(c) for c in A.chambers())
    assert braid(4).is_bineighborly(braid_fundamental(4))
    P = prism4()
    failures = P.bineighborly_failures(PRISM_CHAMBER)
    assert (PRISM_CHAMBER, 2, 3) in failures
    assert P.bineighborly_violation(PRISM_CHAMBER) == failures[0]


def test_restriction():
    A = fig2()
    c = A.chambers()[2]
    assert A.restrict(range(len(A)), c) == c
    with pytest.raises(NotSubarrangement):
        A.restrict([0, 0], c)


def test_restriction_is_order_preserving():
    A = fig2()
    for sub in combinations(range(3), 2):
        B = A.subarrangement(sub)
        for c0 in A.chambers():
            b0 = A.restrict(sub, c0)
            for c in A.chambers():
                for d in A.chambers():
                    if separation(c0, c) <= separation(c0, d):
                        assert separation(b0, A.restrict(sub, c)) <= separation(b0, A.restrict(sub, d))
                        assert B.is_chamber(A.restrict(sub, d))


def test_sign_strings_round_trip():
    assert sign_string(parse_signs("+-+")) == "+-+"
    with pytest.raises(InvalidInput):
        parse_signs("+0")


def test_chamber_poset_properties_on_small_arrangements():
    for A in (fig2(), prism4(), braid(3)):
        assert chamber_poset_violation_all(A) is None


def test_random_arrangements_are_reproducible():
    a = [A.to_json() for A in random_arrangements(3, 5)]
    b = [A.to_json() for A in random_arrangements(3, 5)]
    assert a == b
    assert all(A.rank == 3 and len(A) <= 6 for A in random_arrangements(3, 5))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_chambers_match_lp_enumeration(seed):
    A = random_arrangements(seed, 1, max_hyperplanes=5)[0]
    found = set(A.chambers())
    for signs in product((1, -1), repeat=len(A)):
        rows = [[s * a for a in v] for s, v in zip(signs, A.vectors)]
        assert (signs in found) == lp_feasible(rows)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_three_verdicts_coincide(seed):
    A = random_arrangements(seed, 1, max_hyperplanes=5)[0]
    for c0 in A.chambers():
        L = try_lattice(A.chamber_poset(c0))
        bn = A.is_bineighborly(c0)
        if L is None:
            assert not bn
        else:
            assert is_crosscut_simplicial(L) == is_semidistributive(L) == bn
