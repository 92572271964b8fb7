"""Doubling a lattice at an order-convex subset.

``L[C]`` is the induced subposet of ``L × {0, 1}`` on
``((L - L≥C) ∪ C) × {0}  ∪  L≥C × {1}``; element ``(x, ε)`` is named
``"<x>.<ε>"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .congruence import Congruence
from .errors import GuardExceeded, NotComparable, NotOrderConvex
from .lattice import Lattice
from .poset import FinitePoset, bits, mask_of
from .simplicial import SimplicialComplex

APEX = "v"


@dataclass(frozen=True)
class DoubledLattice:
    base: Lattice
    subset: int  # mask of C in base
    above: int  # mask of L≥C in base
    lattice: Lattice
    pairs: tuple[tuple[int, int], ...]  # doubled index -> (x, ε)

    @property
    def index(self) -> dict[tuple[int, int], int]:
        return {p: i for i, p in enumerate(self.pairs)}

    def element(self, x, eps: int) -> int:
        return self.index[self.base.elem(x), eps]

    def project(self, i) -> int:
        return self.pairs[self.lattice.elem(i)][0]

    def in_subset(self, x: int) -> bool:
        return bool(self.subset >> x & 1)

    def lower_part(self) -> int:
        """Mask of ``(L - L≥C) ∪ C``: elements that keep a 0-copy."""
        return (self.base.full & ~self.above) | self.subset


def double(L: Lattice, subset: Iterable) -> DoubledLattice:
    C = L.elems(subset)
    if not L.is_order_convex(C):
        raise NotOrderConvex(f"{[L.names[c] for c in C]} is not order-convex")
    cmask = mask_of(C)
    above = L.upset_of(C)
    lower = (L.full & ~above) | cmask
    pairs = [(x, 0) for x in range(L.n) if lower >> x & 1]
    pairs += [(x, 1) for x in range(L.n) if above >> x & 1]
    names = [f"{L.names[x]}.{e}" for x, e in pairs]
    up = []
    for x, e in pairs:
        up.append(
            mask_of(
                j for j, (y, f) in enumerate(pairs) if L.up[x] >> y & 1 and e <= f
            )
        )
    poset = FinitePoset.from_up_masks(names, up)
    return DoubledLattice(L, cmask, above, Lattice.from_poset(poset), tuple(pairs))


def doubled_join(D: DoubledLattice, a, b) -> int:
    """Join in ``L[C]`` by the closed formula, without using D's tables."""
    (x, e), (y, f) = D.pairs[D.lattice.elem(a)], D.pairs[D.lattice.elem(b)]
    z = D.base.join(x, y)
    if D.lower_part() >> z & 1:
        return D.element(z, max(e, f))
    return D.element(z, 1)


def projection_congruence(D: DoubledLattice) -> Congruence:
    """The fibres of ``(x, ε) ↦ x`` as a congruence of ``L[C]``."""
    return Congruence(D.lattice, [x for x, _ in D.pairs])


class DoublingCase(NamedTuple):
    case: int
    predicted: SimplicialComplex


def base_crosscut(L: Lattice, x: int, y: int) -> SimplicialComplex:
    """Crosscut complex of ``[x, y]`` on its atoms, void when ``x == y``."""
    if x == y:
        return SimplicialComplex.void()
    return L.crosscut_complex(x, y)


def classify_doubled_interval(D: DoubledLattice, lo, hi) -> DoublingCase:
    """Case tag and predicted crosscut complex of the interval ``(lo, hi)``.

    Cases follow the split ``ε = ε′ or x, y ∉ C`` / ``x ∉ C, y ∈ C`` /
    ``x ∈ C, y ∉ C`` / ``x, y ∈ C`` (the last three with ``ε < ε′``).  The
    apex of the cones is the fresh vertex ``"v"``.
    """
    L = D.base
    lo, hi = D.lattice.elem(lo), D.lattice.elem(hi)
    if lo == hi or not D.lattice.leq(lo, hi):
        raise NotComparable("classification needs lo < hi")
    (x, e), (y, f) = D.pairs[lo], D.pairs[hi]
    in_c = D.in_subset
    atoms = L.atoms(x, y) if x != y else []
    if e == f or (not in_c(x) and not in_c(y)):
        return DoublingCase(1, base_crosscut(L, x, y))
    if not in_c(x) and in_c(y):
        return DoublingCase(2, SimplicialComplex.simplex(atoms))
    gamma = base_crosscut(L, x, y)
    if in_c(x) and not in_c(y):
        kept = [a for a in atoms if in_c(a)]
        return DoublingCase(3, gamma.induced(kept).cone(APEX))
    return DoublingCase(4, SimplicialComplex.simplex(atoms).union(gamma.cone(APEX)))


def doubled_crosscut(D: DoubledLattice, lo, hi) -> SimplicialComplex:
    return D.lattice.crosscut_complex(lo, hi)


def satisfies_atom_condition(L: Lattice, subset: Iterable) -> bool:
    """Whether every ``[x, y]`` with ``x ∈ C``, ``y ∉ C``, ``x ≤ y`` has an
    atom outside ``C`` (holds vacuously for order filters)."""
    cmask = mask_of(L.elems(subset))
    for x in bits(cmask):
        for y in bits(L.up[x] & ~cmask):
            if all(cmask >> a & 1 for a in L.atoms(x, y)):
                return False
    return True


def convex_subsets(L, max_size: int = 8) -> list[tuple[int, ...]]:
    """All nonempty order-convex subsets, by filtering every subset.

    Refuses posets with more than ``max_size`` elements.
    """
    if L.n > max_size:
        raise GuardExceeded(f"convex-subset enumeration is limited to {max_size} elements")
    out = []
    for m in range(1, 1 << L.n):
        members = list(bits(m))
        if L.is_order_convex(members):
            out.append(tuple(members))
    return out


def principal_filter(L: Lattice, x) -> tuple[int, ...]:
    return tuple(bits(L.up[L.elem(x)]))
