import pytest
from hypothesis import given, settings

from crosscut.catalog import boolean, chain, hexagon, m3, n5, tamari, weak_order
from crosscut.congruence import (
    Congruence,
    all_congruences,
    congruence_lattice,
    congruence_normal_violation,
    is_congruence,
    is_congruence_normal,
    principal_congruence,
    quotient,
    restrict,
)
from crosscut.errors import InvalidInput
from crosscut.lattice import is_crosscut_simplicial, is_distributive, mobius_range_violation
from crosscut.poset import bits, is_isomorphic
from oracles import congruences, ref_of
from strategies import lattices


def blocks(theta):
    return sorted(sorted(b) for b in theta.to_json()["blocks"])


def test_principal_congruences_of_n5():
    L = n5()
    assert blocks(principal_congruence(L, "b", "c")) == [["0"], ["1"], ["a"], ["b", "c"]]
    assert blocks(principal_congruence(L, "a", "1")) == [["0", "b", "c"], ["1", "a"]]


def test_principal_congruence_of_hexagon():
    theta = principal_congruence(hexagon(), "a", "A")
    assert blocks(theta) == [["0"], ["1"], ["A", "a"], ["B"], ["b"]]


def test_non_congruence_partition_rejected():
    L = m3()
    assert not is_congruence(L, [["0", "a"], ["b"], ["c"], ["1"]])
    with pytest.raises(InvalidInput):
        Congruence.from_blocks(L, [["0", "a"], ["b"], ["c"], ["1"]])


def test_congruence_counts():
    assert len(all_congruences(chain(2))) == 2
    assert len(all_congruences(boolean(2))) == 4
    assert len(all_congruences(n5())) == 5
    assert len(all_congruences(m3())) == 2


def test_congruence_lattice_of_b2_is_b2():
    C, _ = congruence_lattice(boolean(2))
    assert is_isomorphic(C, boolean(2))


def test_projections():
    L = n5()
    ident = Congruence.identity(L)
    assert all(ident.project_up(x) == x == ident.project_down(x) for x in range(L.n))
    theta = principal_congruence(L, "a", "1")
    assert L.names[theta.project_up("0")] == "c"
    assert L.names[theta.project_down("1")] == "a"
    full = Congruence.full(L)
    assert all(full.project_up(x) == L.top for x in range(L.n))


def test_quotients():
    L = n5()
    Q, _ = quotient(L, Congruence.identity(L))
    assert is_isomorphic(Q, L)
    Q, _ = quotient(L, Congruence.full(L))
    assert Q.n == 1
    H = hexagon()
    Q, _ = quotient(H, principal_congruence(H, "a", "A"))
    assert is_isomorphic(Q, n5())


def test_congruence_normality_examples():
    assert is_congruence_normal(n5())
    assert is_congruence_normal(chain(4))
    M = m3()
    w = congruence_normal_violation(M)
    assert w is not None
    assert M.leq(w.join_irreducible, w.meet_irreducible)


def test_families_are_congruence_normal():
    for n in (2, 3, 4):
        assert is_congruence_normal(weak_order(n))
        assert is_congruence_normal(tamari(n))


def test_join_and_meet_of_congruences():
    L = boolean(2)
    a = principal_congruence(L, "0", "a")
    b = principal_congruence(L, "0", "b")
    assert a.join(b) == Congruence.full(L)
    assert a.meet(b) == Congruence.identity(L)


@settings(max_examples=40, deadline=None)
@given(lattices(7))
def test_all_congruences_match_partition_enumeration(L):
    got = sorted(blocks(t) for t in all_congruences(L))
    want = sorted(congruences(ref_of(L)))
    assert got == want


@settings(max_examples=40, deadline=None)
@given(lattices(8))
def test_congruence_lattice_is_distributive(L):
    C, _ = congruence_lattice(L)
    assert is_distributive(C)


@settings(max_examples=30, deadline=None)
@given(lattices(8))
def test_quotients_preserve_crosscut_simpliciality(L):
    if not is_crosscut_simplicial(L):
        return
    for theta in all_congruences(L):
        Q, _ = quotient(L, theta)
        assert is_crosscut_simplicial(Q)


@settings(max_examples=30, deadline=None)
@given(lattices(8))
def test_restriction_to_interval_is_congruence(L):
    for theta in all_congruences(L)[:4]:
        for x in range(L.n):
            for y in range(L.n):
                if L.lt(x, y):
                    sub, rho = restrict(theta, x, y)
                    assert is_congruence(sub, rho.blocks)


@settings(max_examples=30, deadline=None)
@given(lattices(8))
def test_blocks_are_intervals(L):
    for theta in all_congruences(L):
        for b in theta.blocks:
            lo, hi = theta.project_down(b[0]), theta.project_up(b[0])
            assert set(b) == set(bits(L.interval_mask(lo, hi)))


@settings(max_examples=30, deadline=None)
@given(lattices(8))
def test_congruence_normal_lattices_have_small_mobius(L):
    if is_congruence_normal(L):
        assert mobius_range_violation(L) is None
