"""Exact finite lattice theory, poset topology and chamber posets of
hyperplane arrangements."""

from .arrangement import Arrangement, negate, separation, sign_string
from .congruence import (
    Congruence,
    all_congruences,
    congruence_lattice,
    is_congruence,
    is_congruence_normal,
    principal_congruence,
    quotient,
)
from .doubling import DoubledLattice, classify_doubled_interval, double
from .errors import CrosscutError, InvalidInput
from .feasibility import feasible
from .labelling import SB, SB_PRIME, check_sb, sb_violation, search_sb
from .lattice import (
    Lattice,
    as_lattice,
    crosscut_simplicial_violation,
    is_crosscut_simplicial,
    is_distributive,
    is_join_semidistributive,
    is_lattice,
    is_meet_semidistributive,
    is_semidistributive,
    try_lattice,
)
from .poset import FinitePoset, find_isomorphism, is_isomorphic
from .simplicial import SimplicialComplex

__version__ = "0.1.0"
