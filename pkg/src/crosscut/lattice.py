"""Finite lattices: join/meet tables, crosscut complexes and the standard
lattice-theoretic property checks.

Property checks come in pairs: ``*_violation(L)`` returns the first witness
in lexicographic index order (or ``None``) and ``is_*(L)`` is its negation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import NotALattice, NotBounded, TrivialInterval
from .poset import FinitePoset, bits
from .simplicial import SimplicialComplex


class Lattice(FinitePoset):
    """A bounded poset in which every pair has a join and a meet.

    Joins and meets are tabulated at construction; ``NotALattice`` carries the
    first pair lacking a least upper (or greatest lower) bound together with
    its minimal upper (maximal lower) bounds.
    """

    def __init__(self, names: Sequence[str], covers):
        super().__init__(names, covers)
        if self.bounds() is None:
            raise NotBounded("a lattice needs a least and a greatest element")
        n = self.n
        by_up = {m: x for x, m in enumerate(self.up)}
        by_down = {m: x for x, m in enumerate(self.down)}
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                ub = self.up[x] & self.up[y]
                z = by_up.get(ub)
                if z is None:
                    mins = self.minimal(ub)
                    raise NotALattice(
                        f"{self.names[x]} and {self.names[y]} have minimal upper bounds "
                        f"{[self.names[m] for m in mins]}",
                        pair=(x, y),
                        bounds=mins,
                    )
                join[x][y] = join[y][x] = z
                lb = self.down[x] & self.down[y]
                z = by_down.get(lb)
                if z is None:
                    maxs = self.maximal(lb)
                    raise NotALattice(
                        f"{self.names[x]} and {self.names[y]} have maximal lower bounds "
                        f"{[self.names[m] for m in maxs]}",
                        pair=(x, y),
                        bounds=maxs,
                    )
                meet[x][y] = meet[y][x] = z
        self.join_table = tuple(tuple(r) for r in join)
        self.meet_table = tuple(tuple(r) for r in meet)

    @classmethod
    def from_poset(cls, p: FinitePoset) -> "Lattice":
        return cls(p.names, p.covers)

    def join(self, x, y) -> int:
        return self.join_table[self.elem(x)][self.elem(y)]

    def meet(self, x, y) -> int:
        return self.meet_table[self.elem(x)][self.elem(y)]

    def join_all(self, elements: Iterable, start=None) -> int:
        """Join of ``elements``; the empty join is ``start`` (default 0̂)."""
        acc = self.bottom if start is None else self.elem(start)
        for x in elements:
            acc = self.join_table[acc][self.elem(x)]
        return acc

    def meet_all(self, elements: Iterable, start=None) -> int:
        """Meet of ``elements``; the empty meet is ``start`` (default 1̂)."""
        acc = self.top if start is None else self.elem(start)
        for x in elements:
            acc = self.meet_table[acc][self.elem(x)]
        return acc

    def atoms(self, x=None, y=None) -> list[int]:
        """Elements covering ``x`` that lie below ``y`` (atoms of ``[x, y]``)."""
        x = self.bottom if x is None else self.elem(x)
        y = self.top if y is None else self.elem(y)
        self._check_leq(x, y)
        return [a for a in self.upper_covers[x] if self.down[y] >> a & 1]

    def coatoms(self, x=None, y=None) -> list[int]:
        x = self.bottom if x is None else self.elem(x)
        y = self.top if y is None else self.elem(y)
        self._check_leq(x, y)
        return [c for c in self.lower_covers[y] if self.up[x] >> c & 1]

    def is_atomic(self, x=None, y=None) -> bool:
        x = self.bottom if x is None else self.elem(x)
        y = self.top if y is None else self.elem(y)
        return self.join_all(self.atoms(x, y), start=x) == y

    def interval_lattice(self, x, y) -> "Lattice":
        return Lattice.from_poset(self.closed_interval(x, y))

    def crosscut_complex(self, x=None, y=None) -> SimplicialComplex:
        """Crosscut complex on the atoms of the interval ``[x, y]``.

        A set ``B`` of atoms is a face iff ``x ∨ ⋁B < y``.  For ``x < y`` with
        ``y`` not covering ``x`` this is the crosscut complex of the open
        interval; when ``x ⋖ y`` it is ``{∅}`` on the single ghost vertex
        ``y``, matching the empty open interval.
        """
        x = self.bottom if x is None else self.elem(x)
        y = self.top if y is None else self.elem(y)
        self._check_leq(x, y)
        if x == y:
            raise TrivialInterval(f"[{self.names[x]}, {self.names[x]}] has no open part")
        atoms = self.atoms(x, y)
        return SimplicialComplex(atoms, _crosscut_facets(self, x, y, atoms))

    def crosscut_complex_of_atoms(self, x: int, y: int, atoms: Sequence[int]) -> SimplicialComplex:
        """Faces ``B ⊆ atoms`` with ``x ∨ ⋁B < y``; void when ``x == y``."""
        return SimplicialComplex(atoms, _crosscut_facets(self, x, y, atoms))


def _crosscut_facets(L: Lattice, x: int, y: int, atoms: Sequence[int]) -> list[tuple[int, ...]]:
    # Maximal B with x ∨ ⋁B < y, found top-down by size; joins are monotone so
    # every subset of a face is a face.
    if x == y:
        return []
    faces = []
    for k in range(len(atoms), -1, -1):
        for b in combinations(atoms, k):
            if any(set(b) <= f for f in faces):
                continue
            if L.join_all(b, start=x) != y:
                faces.append(set(b))
    return [tuple(sorted(f)) for f in faces]


def as_lattice(p: FinitePoset) -> Lattice:
    if isinstance(p, Lattice):
        return p
    return Lattice.from_poset(p)


def try_lattice(p: FinitePoset) -> Lattice | None:
    try:
        return as_lattice(p)
    except (NotALattice, NotBounded):
        return None


def is_lattice(p: FinitePoset) -> bool:
    return try_lattice(p) is not None


def is_lattice_bez(p: FinitePoset) -> bool:
    """Local lattice test: joins of pairs covering a common element exist.

    For a bounded poset this local condition already forces every pair to
    have a join, so it decides lattice-ness.
    """
    if p.bounds() is None:
        raise NotBounded("the local criterion applies to bounded posets")
    by_up = set(p.up)
    for x in range(p.n):
        for y, z in combinations(p.upper_covers[x], 2):
            if (p.up[y] & p.up[z]) not in by_up:
                return False
    return True


# -- crosscut-simpliciality -------------------------------------------------


@dataclass(frozen=True)
class IntervalWitness:
    """An interval ``[x, y]`` and a proper set of its atoms joining to ``y``."""

    x: int
    y: int
    subset: tuple[int, ...]

    def as_dict(self, p: FinitePoset) -> dict:
        return {
            "interval": [p.names[self.x], p.names[self.y]],
            "subset": [p.names[a] for a in self.subset],
        }


def crosscut_simplicial_violation(L: Lattice) -> IntervalWitness | None:
    for x in range(L.n):
        for y in bits(L.up[x] & ~(1 << x)):
            atoms = L.atoms(x, y)
            if len(atoms) < 2 or L.join_all(atoms, start=x) != y:
                continue
            # a proper subset joins to y iff some A - {a} does
            for a in atoms:
                rest = [b for b in atoms if b != a]
                if L.join_all(rest, start=x) == y:
                    return IntervalWitness(x, y, _minimize(L, x, y, rest))
    return None


def _minimize(L: Lattice, x: int, y: int, subset: list[int]) -> tuple[int, ...]:
    current = list(subset)
    changed = True
    while changed:
        changed = False
        for a in current:
            rest = [b for b in current if b != a]
            if L.join_all(rest, start=x) == y:
                current = rest
                changed = True
                break
    return tuple(current)


def is_crosscut_simplicial(L: Lattice) -> bool:
    return crosscut_simplicial_violation(L) is None


# -- semidistributivity and distributivity ----------------------------------


@dataclass(frozen=True)
class TripleWitness:
    law: str
    x: int
    y: int
    z: int

    def as_dict(self, p: FinitePoset) -> dict:
        return {"law": self.law, "triple": [p.names[self.x], p.names[self.y], p.names[self.z]]}


def meet_sd_violation(L: Lattice) -> TripleWitness | None:
    """First ``(x, y, z)`` with ``x∧z = y∧z`` but ``(x∨y)∧z ≠ x∧z``."""
    J, M = L.join_table, L.meet_table
    n = L.n
    for x in range(n):
        Mx, Jx = M[x], J[x]
        for y in range(n):
            My = M[y]
            Mxy = M[Jx[y]]
            for z in range(n):
                if Mx[z] == My[z] and Mxy[z] != Mx[z]:
                    return TripleWitness("meet-semidistributive", x, y, z)
    return None


def join_sd_violation(L: Lattice) -> TripleWitness | None:
    """First ``(x, y, z)`` with ``x∨z = y∨z`` but ``(x∧y)∨z ≠ x∨z``."""
    J, M = L.join_table, L.meet_table
    n = L.n
    for x in range(n):
        Jx, Mx = J[x], M[x]
        for y in range(n):
            Jy = J[y]
            Jxy = J[Mx[y]]
            for z in range(n):
                if Jx[z] == Jy[z] and Jxy[z] != Jx[z]:
                    return TripleWitness("join-semidistributive", x, y, z)
    return None


def semidistributive_violation(L: Lattice) -> TripleWitness | None:
    return meet_sd_violation(L) or join_sd_violation(L)


def is_meet_semidistributive(L: Lattice) -> bool:
    return meet_sd_violation(L) is None


def is_join_semidistributive(L: Lattice) -> bool:
    return join_sd_violation(L) is None


def is_semidistributive(L: Lattice) -> bool:
    return semidistributive_violation(L) is None


def distributive_violation(L: Lattice) -> TripleWitness | None:
    """First triple breaking ``x∧(y∨z) = (x∧y)∨(x∧z)``."""
    J, M = L.join_table, L.meet_table
    n = L.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if M[x][J[y][z]] != J[M[x][y]][M[x][z]]:
                    return TripleWitness("distributive", x, y, z)
    return None


def is_distributive(L: Lattice) -> bool:
    return distributive_violation(L) is None


def mobius_range_violation(L: Lattice, bound: int = 1) -> tuple[int, int] | None:
    """First interval ``(x, y)`` with ``|μ(x, y)| > bound``."""
    for x in range(L.n):
        for y in bits(L.up[x]):
            if abs(L.mobius(x, y)) > bound:
                return (x, y)
    return None


# -- irreducibles -------------------------------------------------------------


def join_irreducibles(L: Lattice) -> dict[int, int]:
    """Map each join-irreducible ``x`` to the unique element it covers."""
    return {x: L.lower_covers[x][0] for x in range(L.n) if len(L.lower_covers[x]) == 1}


def meet_irreducibles(L: Lattice) -> dict[int, int]:
    """Map each meet-irreducible ``x`` to the unique element covering it."""
    return {x: L.upper_covers[x][0] for x in range(L.n) if len(L.upper_covers[x]) == 1}


def irreducibles(L: Lattice) -> tuple[dict[int, int], dict[int, int]]:
    return join_irreducibles(L), meet_irreducibles(L)
