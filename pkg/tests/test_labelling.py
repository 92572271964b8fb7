import pytest
from hypothesis import given, settings

from crosscut.catalog import boolean, chain, fig3, fig3_labelling, m3, n5
from crosscut.errors import IncompleteLabelling, InvalidInput, SearchBudgetExceeded
from crosscut.labelling import SB, SB_PRIME, check_sb, sb_violation, search_sb
from crosscut.lattice import is_crosscut_simplicial
from oracles import ref_of, sb_holds
from strategies import lattices


def b2_labels(L):
    e = L.elem
    return {(e("0"), e("a")): 1, (e("0"), e("b")): 2, (e("a"), e("1")): 2, (e("b"), e("1")): 1}


def test_two_chain_single_label():
    L = chain(2)
    assert check_sb(L, {(0, 1): "x"})


def test_b2_labelling_is_sb():
    B = boolean(2)
    assert check_sb(B, b2_labels(B))
    assert check_sb(B, b2_labels(B), SB_PRIME)


def test_repeated_label_breaks_sb1():
    B = boolean(2)
    lab = b2_labels(B)
    lab[B.elem("0"), B.elem("b")] = 1
    v = sb_violation(B, lab)
    assert v.condition == "SB1"


def test_chain_with_foreign_label_breaks_sb2():
    B = boolean(2)
    lab = b2_labels(B)
    lab[B.elem("b"), B.elem("1")] = 3
    assert not check_sb(B, lab)


def test_missing_cover_rejected():
    with pytest.raises(IncompleteLabelling):
        check_sb(boolean(2), {})


def test_unknown_variant_rejected():
    with pytest.raises(InvalidInput):
        check_sb(chain(2), {(0, 1): 0}, "sb3")


def test_m3_has_no_small_sb_labelling():
    for k in (1, 2, 3):
        assert search_sb(m3(), k) is None


def test_search_finds_labelling_for_n5():
    L = n5()
    lab = search_sb(L, 3)
    assert lab is not None and check_sb(L, lab)


def test_search_budget():
    with pytest.raises(SearchBudgetExceeded):
        search_sb(boolean(3), 3, node_limit=2)


def test_fig3_labelling_is_sb_prime_but_not_sb():
    L = fig3()
    lab = fig3_labelling(L)
    assert check_sb(L, lab, SB_PRIME)
    assert not check_sb(L, lab, SB)


@settings(max_examples=40, deadline=None)
@given(lattices(7))
def test_search_is_sound_and_agrees_with_chain_enumeration(L):
    lab = search_sb(L, 3)
    if lab is None:
        return
    assert check_sb(L, lab)
    named = {(L.names[a], L.names[b]): v for (a, b), v in lab.items()}
    assert sb_holds(ref_of(L), named, "sb")
    assert is_crosscut_simplicial(L)


@settings(max_examples=40, deadline=None)
@given(lattices(7))
def test_verifier_matches_chain_enumeration_on_greedy_labels(L):
    # label each cover by the target's index: SB1 always holds, SB2 varies
    lab = {(a, b): b for a, b in L.covers}
    named = {(L.names[a], L.names[b]): v for (a, b), v in lab.items()}
    for variant in (SB, SB_PRIME):
        assert check_sb(L, lab, variant) == sb_holds(ref_of(L), named, variant)
