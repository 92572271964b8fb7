"""Lattice congruences, quotients and congruence-normality."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInput, NotAPartition
from .lattice import Lattice, join_irreducibles, meet_irreducibles
from .poset import FinitePoset, bits, mask_of


def _canonical(labels: Sequence[int]) -> tuple[int, ...]:
    """Renumber block labels by first occurrence."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(b, len(seen)) for b in labels)


class Congruence:
    """A partition of a lattice's elements compatible with join and meet.

    Blocks are stored as a canonical label per element; ``blocks`` lists them
    as sorted index tuples ordered by smallest member.  The constructor checks
    compatibility and raises ``InvalidInput`` for partitions that are not
    congruences.
    """

    def __init__(self, lattice: Lattice, labels: Sequence[int], *, check: bool = True):
        if len(labels) != lattice.n:
            raise NotAPartition("one block label per element is required")
        self.lattice = lattice
        self.labels = _canonical(labels)
        nblocks = max(self.labels) + 1
        members: list[list[int]] = [[] for _ in range(nblocks)]
        for x, b in enumerate(self.labels):
            members[b].append(x)
        self.blocks = tuple(tuple(m) for m in members)
        self.masks = tuple(mask_of(m) for m in members)
        if check:
            bad = compatibility_violation(lattice, self.labels)
            if bad:
                raise InvalidInput(f"partition is not a congruence: {bad}")
        self._down = tuple(lattice.meet_all(m) for m in members)
        self._up = tuple(lattice.join_all(m) for m in members)

    @classmethod
    def from_blocks(cls, lattice: Lattice, blocks: Iterable[Iterable]) -> "Congruence":
        return cls(lattice, partition_labels(lattice, blocks))

    @classmethod
    def identity(cls, lattice: Lattice) -> "Congruence":
        return cls(lattice, range(lattice.n), check=False)

    @classmethod
    def full(cls, lattice: Lattice) -> "Congruence":
        return cls(lattice, [0] * lattice.n, check=False)

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        names = self.lattice.names
        return "Congruence(" + " | ".join(
            ",".join(names[x] for x in b) for b in self.blocks
        ) + ")"

    def __len__(self):
        return len(self.blocks)

    def block(self, x) -> tuple[int, ...]:
        return self.blocks[self.labels[self.lattice.elem(x)]]

    def equiv(self, x, y) -> bool:
        L = self.lattice
        return self.labels[L.elem(x)] == self.labels[L.elem(y)]

    def project_up(self, x) -> int:
        """Largest element of the block of ``x``."""
        return self._up[self.labels[self.lattice.elem(x)]]

    def project_down(self, x) -> int:
        """Smallest element of the block of ``x``."""
        return self._down[self.labels[self.lattice.elem(x)]]

    def refines(self, other: "Congruence") -> bool:
        """True iff every block of ``self`` lies inside a block of ``other``."""
        return all(
            other.labels[x] == other.labels[b[0]] for b in self.blocks for x in b
        )

    def join(self, other: "Congruence") -> "Congruence":
        """Smallest congruence containing both (transitive closure of the union)."""
        uf = _UnionFind(self.lattice.n)
        for b in self.blocks + other.blocks:
            for x in b[1:]:
                uf.union(b[0], x)
        return Congruence(self.lattice, [uf.find(x) for x in range(self.lattice.n)], check=False)

    def meet(self, other: "Congruence") -> "Congruence":
        ids: dict[tuple[int, int], int] = {}
        labels = [ids.setdefault(p, len(ids)) for p in zip(self.labels, other.labels)]
        return Congruence(self.lattice, labels, check=False)

    def to_json(self) -> dict:
        names = self.lattice.names
        return {"blocks": [[names[x] for x in b] for b in self.blocks]}


def partition_labels(lattice: Lattice, blocks: Iterable[Iterable]) -> list[int]:
    labels = [-1] * lattice.n
    for i, block in enumerate(blocks):
        for x in lattice.elems(block):
            if labels[x] != -1:
                raise NotAPartition(f"{lattice.names[x]} appears in two blocks")
            labels[x] = i
    missing = [lattice.names[x] for x in range(lattice.n) if labels[x] == -1]
    if missing:
        raise NotAPartition(f"elements {missing} are in no block")
    return labels


def compatibility_violation(L: Lattice, labels: Sequence[int]) -> str | None:
    J, M = L.join_table, L.meet_table
    n = L.n
    for x in range(n):
        for y in range(x + 1, n):
            if labels[x] != labels[y]:
                continue
            for z in range(n):
                if labels[J[x][z]] != labels[J[y][z]]:
                    return f"{L.names[x]}≡{L.names[y]} but not after joining {L.names[z]}"
                if labels[M[x][z]] != labels[M[y][z]]:
                    return f"{L.names[x]}≡{L.names[y]} but not after meeting {L.names[z]}"
    return None


def is_congruence(L: Lattice, partition: Iterable[Iterable]) -> bool:
    """``partition`` is a list of blocks (element names or indices)."""
    return compatibility_violation(L, partition_labels(L, partition)) is None


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx > ry:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


def principal_congruence(L: Lattice, x, y) -> Congruence:
    """Least congruence identifying ``x`` and ``y``.

    Each newly merged pair ``(a, b)`` enqueues ``(a∨z, b∨z)`` and
    ``(a∧z, b∧z)`` for every ``z``; the union-find supplies transitivity.
    """
    x, y = L.elem(x), L.elem(y)
    uf = _UnionFind(L.n)
    J, M = L.join_table, L.meet_table
    work = []
    if uf.union(x, y):
        work.append((x, y))
    while work:
        a, b = work.pop()
        for z in range(L.n):
            for c, d in ((J[a][z], J[b][z]), (M[a][z], M[b][z])):
                if uf.union(c, d):
                    work.append((c, d))
    return Congruence(L, [uf.find(v) for v in range(L.n)], check=False)


def cover_congruences(L: Lattice) -> dict[tuple[int, int], Congruence]:
    return {c: principal_congruence(L, *c) for c in L.covers}


def all_congruences(L: Lattice) -> list[Congruence]:
    """Every congruence of ``L``, sorted by number of blocks (descending)
    and then by canonical labels.

    Every congruence is a join of principal congruences of covers, so the
    set is closed up from those generators.
    """
    found = {Congruence.identity(L)}
    gens = set(cover_congruences(L).values())
    frontier = set(gens) - found
    found |= frontier
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                c = a.join(g)
                if c not in found:
                    new.add(c)
        found |= new
        frontier = new
    return sorted(found, key=lambda c: (-len(c), c.labels))


def congruence_lattice(L: Lattice, congruences: Sequence[Congruence] | None = None):
    """Con(L) ordered by refinement, as ``(Lattice, list of congruences)``."""
    cons = list(all_congruences(L) if congruences is None else congruences)
    names = [str(i) for i in range(len(cons))]
    poset = FinitePoset.from_leq(names, lambda i, j: cons[i].refines(cons[j]))
    return Lattice.from_poset(poset), cons


def quotient(L: Lattice, theta: Congruence) -> tuple[Lattice, list[int]]:
    """Quotient lattice ``L/Θ`` and the map element -> block index.

    Block ``X ≤ Y`` iff some member of ``X`` lies below some member of ``Y``.
    Blocks are named by their members joined with ``~``.
    """
    names = ["~".join(L.names[x] for x in b) for b in theta.blocks]
    up = []
    for i, bi in enumerate(theta.blocks):
        reach = 0
        for x in bi:
            reach |= L.up[x]
        up.append(mask_of(j for j, m in enumerate(theta.masks) if reach & m))
    poset = FinitePoset.from_up_masks(names, up)
    return Lattice.from_poset(poset), list(theta.labels)


def restrict(theta: Congruence, x, y) -> tuple[Lattice, Congruence]:
    """Restriction of ``Θ`` to the interval lattice ``[x, y]``."""
    L = theta.lattice
    x, y = L.elem(x), L.elem(y)
    members = list(bits(L.interval_mask(x, y)))
    sub = Lattice.from_poset(L.subposet(members))
    labels = [theta.labels[m] for m in members]
    return sub, Congruence(sub, labels)


@dataclass(frozen=True)
class NormalityWitness:
    meet_irreducible: int
    join_irreducible: int

    def as_dict(self, p) -> dict:
        return {
            "meet_irreducible": p.names[self.meet_irreducible],
            "join_irreducible": p.names[self.join_irreducible],
        }


def congruence_normal_violation(L: Lattice) -> NormalityWitness | None:
    """First (x, y), x meet-irreducible and y join-irreducible, with
    ``Cg(x, x*) = Cg(y_*, y)`` and ``x ≥ y``."""
    cg = cover_congruences(L)
    mi = meet_irreducibles(L)
    ji = join_irreducibles(L)
    for x, x_star in mi.items():
        for y, y_low in ji.items():
            if L.up[y] >> x & 1 and cg[x, x_star] == cg[y_low, y]:
                return NormalityWitness(x, y)
    return None


def is_congruence_normal(L: Lattice) -> bool:
    return congruence_normal_violation(L) is None
