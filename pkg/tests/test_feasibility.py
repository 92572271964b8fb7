from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crosscut.errors import DimensionMismatch, GuardExceeded
from crosscut.feasibility import MAX_CONSTRAINTS, MAX_DIM, feasible
from oracles import lp_feasible


def test_opposite_half_lines():
    assert not feasible([[1], [-1]])


def test_open_quadrant():
    assert feasible([[1, 0], [0, 1]])


def test_equality_substitution():
    strict = [[1, 0, 0], [0, 1, 0], [1, 1, 1], [1, 1, -1]]
    assert not feasible(strict, [[1, 1, 0]])
    assert feasible(strict)


def test_rational_rows_are_rescaled():
    assert feasible([[Fraction(1, 3), Fraction(-1, 2)]])
    assert not feasible([[Fraction(1, 3), Fraction(-1, 2)], [Fraction(-2, 3), 1]])


def test_zero_row_is_infeasible():
    assert not feasible([[0, 0]])


def test_no_rows_is_feasible():
    assert feasible([], dim=2)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        feasible([[1, 0], [1, 0, 0]])


def test_guard():
    with pytest.raises(GuardExceeded):
        feasible([[1] * (MAX_DIM + 1)])
    with pytest.raises(GuardExceeded):
        feasible([[1, 0]] * (MAX_CONSTRAINTS + 1))
    assert feasible([[1] * (MAX_DIM + 1)], guard=False)


rows = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@settings(max_examples=150, deadline=None)
@given(st.lists(rows, min_size=1, max_size=7), st.lists(rows, max_size=2))
def test_agrees_with_linear_programming(strict, eqs):
    assert feasible(strict, eqs) == lp_feasible(strict, eqs)
