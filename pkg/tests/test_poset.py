import pytest
from hypothesis import given, settings

from crosscut.catalog import boolean, fig1_right, hexagon, m3, n5
from crosscut.errors import CycleDetected, InvalidInput, NonHasseCover, NotComparable, UnknownElement
from crosscut.poset import FinitePoset, antichain, chain, find_isomorphism, is_isomorphic, product
from oracles import ref_of, saturated_chains
from strategies import posets


def b2():
    return FinitePoset.from_covers("0ab1", [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def test_from_covers_builds_b2():
    p = b2()
    assert p.n == 4
    assert p.leq("0", "1") and p.leq("a", "1")
    assert not p.comparable("a", "b")
    assert p.bounds() == (p.elem("0"), p.elem("1"))


def test_two_chain_order():
    p = chain(2)
    assert p.leq("0", "1") and not p.leq("1", "0")


def test_antichain_has_no_bounds():
    assert antichain(2).bounds() is None


def test_boolean_intervals():
    B = boolean(3)
    assert is_isomorphic(B.closed_interval("0", "a"), chain(2))
    assert is_isomorphic(B.closed_interval("0", "1"), B)


def test_singletons_are_convex():
    L = n5()
    assert all(L.is_order_convex([x]) for x in L.names)


def test_cycle_rejected():
    with pytest.raises(CycleDetected):
        FinitePoset.from_covers("ab", [("a", "b"), ("b", "a")])


def test_self_cover_rejected():
    with pytest.raises(CycleDetected):
        FinitePoset.from_covers("a", [("a", "a")])


def test_transitive_cover_rejected():
    with pytest.raises(NonHasseCover):
        FinitePoset.from_covers("abc", [("a", "b"), ("b", "c"), ("a", "c")])


def test_unknown_name_rejected():
    with pytest.raises(UnknownElement):
        FinitePoset.from_covers("ab", [("a", "z")])


def test_duplicate_names_rejected():
    with pytest.raises(InvalidInput):
        FinitePoset(["a", "a"], [])


def test_from_up_masks_rejects_non_transitive():
    # a<b, b<c but not a<c
    with pytest.raises(InvalidInput):
        FinitePoset.from_up_masks("abc", [0b011, 0b110, 0b100])


def test_dual_of_n5_is_n5():
    assert is_isomorphic(n5().dual(), n5())


def test_dual_of_chain_reverses_order():
    p = chain(3).dual()
    assert p.leq("2", "0")


def test_closed_interval_in_n5():
    L = n5()
    sub = L.closed_interval("0", "c")
    assert sorted(sub.names) == ["0", "b", "c"]
    assert is_isomorphic(sub, chain(3))


def test_convexity_and_filters():
    assert not n5().is_order_convex(["0", "c"])
    p = b2()
    assert p.is_order_filter(["a", "1"])
    assert not p.is_order_filter(["a"])
    assert p.is_order_ideal(["0", "a"])


def test_interval_needs_comparable_endpoints():
    with pytest.raises(NotComparable):
        b2().interval_mask("a", "b")


def test_mobius_values():
    assert m3().mobius("0", "1") == 2
    assert chain(3).mobius("0", "2") == 0
    assert b2().mobius("0", "1") == 1
    assert boolean(3).mobius("0", "1") == -1
    assert fig1_right().mobius("0", "1") == 0


def test_order_complex_of_antichain_is_two_points():
    delta = antichain(2).order_complex()
    assert len(delta.vertices) == 2
    assert sorted(len(f) for f in delta.facets) == [1, 1]


def test_order_complex_of_hexagon_proper_part():
    L = hexagon()
    inner = L.open_interval("0", "1")
    delta = L.order_complex(inner)
    assert len(delta.vertices) == 4
    assert sorted(len(f) for f in delta.facets) == [2, 2]
    assert delta.reduced_euler() == 1
    assert L.mobius("0", "1") == 1


def test_saturated_chains_of_n5():
    L = n5()
    chains = [[L.names[i] for i in c] for c in L.saturated_chains("0", "1")]
    assert sorted(chains) == [["0", "a", "1"], ["0", "b", "c", "1"]]


def test_saturated_chains_are_lazy_and_lexicographic():
    L = boolean(3)
    it = L.saturated_chains("0", "1")
    first = next(it)
    assert [L.names[i] for i in first] == ["0", "a", "ab", "1"]
    assert len(list(it)) == 5


def test_rank_function():
    assert boolean(3).rank_function() is not None
    assert n5().rank_function() is None


def test_product_of_chains_is_b2():
    assert is_isomorphic(product(chain(2), chain(2)), b2())


def test_isomorphism_detects_difference():
    assert find_isomorphism(n5(), m3()) is None
    assert not is_isomorphic(antichain(3), chain(3))


def test_subposet_keeps_order():
    L = boolean(3)
    sub = L.subposet(["0", "a", "ab"])
    assert sub.leq("0", "ab")


@settings(max_examples=60, deadline=None)
@given(posets(max_size=7))
def test_order_matches_bruteforce_closure(p):
    ref = ref_of(p)
    for a in p.names:
        for b in p.names:
            assert p.leq(a, b) == ref.leq(a, b)


@settings(max_examples=60, deadline=None)
@given(posets(max_size=6, bounded=True))
def test_mobius_matches_recursion_and_order_complex(p):
    ref = ref_of(p)
    for x in p.names:
        for y in p.names:
            if p.leq(x, y):
                mu = p.mobius(x, y)
                assert mu == ref.mobius(x, y)
                if x != y:
                    inner = ref.open_interval(x, y)
                    assert mu == ref.order_complex_euler(inner)
                    assert mu == p.order_complex_euler(p.open_interval_mask(x, y))


@settings(max_examples=40, deadline=None)
@given(posets(max_size=7))
def test_chain_counts_match_order_complex(p):
    delta = p.order_complex()
    assert p.chain_counts(p.full) == delta.f_vector()[1:]


@settings(max_examples=40, deadline=None)
@given(posets(max_size=6, bounded=True))
def test_saturated_chain_count_matches_bruteforce(p):
    ref = ref_of(p)
    got = sorted(tuple(p.names[i] for i in c) for c in p.saturated_chains(p.bottom, p.top))
    want = sorted(tuple(c) for c in saturated_chains(ref, p.names[p.bottom], p.names[p.top]))
    assert got == want


@settings(max_examples=40, deadline=None)
@given(posets(max_size=6))
def test_relabelled_copy_is_isomorphic(p):
    perm = list(reversed(range(p.n)))
    q = FinitePoset([f"q{i}" for i in range(p.n)], [(perm[a], perm[b]) for a, b in p.covers])
    f = find_isomorphism(p, q)
    assert f is not None
    for a, b in p.covers:
        assert q.covers_pair(f[a], f[b])


@settings(max_examples=40, deadline=None)
@given(posets(max_size=6))
def test_mobius_of_dual_swaps_endpoints(p):
    d = p.dual()
    for x in range(p.n):
        for y in range(p.n):
            if p.leq(x, y):
                assert p.mobius(x, y) == d.mobius(y, x)
