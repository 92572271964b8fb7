"""Abstract simplicial complexes on a finite ground set.

A complex is stored as its ground set plus the set of facets (maximal
faces); the full face family is generated on demand.  The void complex has
no faces at all, while ``{∅}`` has exactly the empty face.  Ground-set
elements need not be faces.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Mapping

from .errors import GroundSetOverlap, InvalidInput, NotAFace, TooLarge
from .linalg import rank

DEFAULT_ISO_BOUND = 16


def _maximal(sets: Iterable[frozenset]) -> frozenset:
    by_size = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset] = []
    for s in by_size:
        if not any(s <= t for t in kept):
            kept.append(s)
    return frozenset(kept)


class SimplicialComplex:
    def __init__(self, vertices: Iterable[Hashable], faces: Iterable[Iterable[Hashable]] = ()):
        verts = tuple(dict.fromkeys(vertices))
        ground = frozenset(verts)
        fs = [frozenset(f) for f in faces]
        for f in fs:
            if not f <= ground:
                raise InvalidInput(f"face {sorted(map(str, f))} leaves the ground set")
        self.vertices = verts
        self.ground = ground
        self.facets = _maximal(fs)

    @classmethod
    def simplex(cls, vertices: Iterable[Hashable]) -> "SimplicialComplex":
        verts = list(dict.fromkeys(vertices))
        return cls(verts, [verts])

    @classmethod
    def boundary(cls, vertices: Iterable[Hashable]) -> "SimplicialComplex":
        """Boundary of the simplex on ``vertices`` (all proper subsets)."""
        verts = list(dict.fromkeys(vertices))
        if not verts:
            return cls([], [])
        return cls(verts, [[v for v in verts if v != w] for w in verts])

    @classmethod
    def void(cls, vertices: Iterable[Hashable] = ()) -> "SimplicialComplex":
        return cls(vertices, [])

    def __repr__(self):
        return f"SimplicialComplex(vertices={len(self.vertices)}, facets={len(self.facets)})"

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ground == other.ground and self.facets == other.facets

    def __hash__(self):
        return hash((self.ground, self.facets))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def faces(self) -> frozenset:
        out = set()
        for f in self.facets:
            items = list(f)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return frozenset(out)

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    @property
    def dim(self) -> int:
        """Dimension; ``-1`` for ``{∅}`` and ``-2`` for the void complex."""
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    def f_vector(self) -> list[int]:
        """Face counts by dimension, starting at dimension -1."""
        if self.is_void:
            return []
        counts = [0] * (self.dim + 2)
        for f in self.faces:
            counts[len(f)] += 1
        return counts

    # -- operations ------------------------------------------------------

    def _require_face(self, face) -> frozenset:
        face = frozenset(face)
        if face not in self:
            raise NotAFace(f"{sorted(map(str, face))} is not a face")
        return face

    def deletion(self, face) -> "SimplicialComplex":
        """Faces disjoint from ``face``."""
        face = self._require_face(face)
        return SimplicialComplex(
            [v for v in self.vertices if v not in face], [f - face for f in self.facets]
        )

    def star(self, face) -> "SimplicialComplex":
        """Faces whose union with ``face`` is again a face."""
        face = self._require_face(face)
        return SimplicialComplex(self.vertices, [f for f in self.facets if face <= f])

    def link(self, face) -> "SimplicialComplex":
        """Faces of the star that are disjoint from ``face``."""
        face = self._require_face(face)
        return SimplicialComplex(
            [v for v in self.vertices if v not in face],
            [f - face for f in self.facets if face <= f],
        )

    def induced(self, subset: Iterable[Hashable]) -> "SimplicialComplex":
        """Induced subcomplex on ``subset`` of the ground set."""
        keep = frozenset(subset)
        if not keep <= self.ground:
            raise InvalidInput("induced subcomplex needs a subset of the ground set")
        if self.is_void:
            return SimplicialComplex([v for v in self.vertices if v in keep], [])
        return SimplicialComplex(
            [v for v in self.vertices if v in keep], [f & keep for f in self.facets]
        )

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(
            list(self.vertices) + list(other.vertices), list(self.facets) + list(other.facets)
        )

    def cone(self, apex: Hashable) -> "SimplicialComplex":
        return join(SimplicialComplex([apex], [[apex]]), self)

    def suspension(self, north: Hashable, south: Hashable) -> "SimplicialComplex":
        return join(SimplicialComplex([north, south], [[north], [south]]), self)

    def relabel(self, mapping: Mapping) -> "SimplicialComplex":
        return SimplicialComplex(
            [mapping[v] for v in self.vertices],
            [[mapping[v] for v in f] for f in self.facets],
        )

    # -- shape recognition -----------------------------------------------

    def is_full_simplex(self) -> bool:
        return self.facets == frozenset([self.ground])

    def is_simplex_boundary(self) -> bool:
        if not self.ground:
            return False
        return self.facets == frozenset(self.ground - {v} for v in self.ground)

    def is_pure(self, d: int | None = None) -> bool:
        """True iff every facet has dimension ``d`` (default: ``self.dim``)."""
        if self.is_void:
            return False
        if d is None:
            d = self.dim
        return all(len(f) - 1 == d for f in self.facets)

    # -- invariants ------------------------------------------------------

    def reduced_euler(self) -> int:
        if self.is_void:
            return 0
        return sum((-1) ** (k + 1) * c for k, c in enumerate(self.f_vector()))

    def betti_rational(self) -> list[int]:
        """Reduced Betti numbers over Q in dimensions ``0..dim``.

        The reduced class in dimension -1 (present only for ``{∅}``) is
        reflected by :meth:`reduced_euler` rather than in this list.
        """
        if self.dim < 0:
            return []
        by_dim: list[list[frozenset]] = [[] for _ in range(self.dim + 2)]
        for f in self.faces:
            by_dim[len(f)].append(f)
        order = {v: i for i, v in enumerate(self.vertices)}
        for group in by_dim:
            group.sort(key=lambda f: sorted(order[v] for v in f))
        ranks = [0] * (self.dim + 3)
        # ranks[k] = rank of the boundary map from (k-1)-faces to (k-2)-faces
        for k in range(1, self.dim + 2):
            rows_index = {f: i for i, f in enumerate(by_dim[k - 1])}
            cols = []
            for f in by_dim[k]:
                verts = sorted(f, key=order.__getitem__)
                col = [0] * len(by_dim[k - 1])
                for i, v in enumerate(verts):
                    col[rows_index[f - {v}]] = (-1) ** i
                cols.append(col)
            ranks[k] = rank(cols)
        return [
            len(by_dim[d + 1]) - ranks[d + 1] - ranks[d + 2] for d in range(self.dim + 1)
        ]

    # -- serialization ---------------------------------------------------

    def to_json(self, label=str) -> dict:
        order = {v: i for i, v in enumerate(self.vertices)}
        facets = sorted(
            (sorted(f, key=order.__getitem__) for f in self.facets),
            key=lambda f: [order[v] for v in f],
        )
        return {
            "vertices": [label(v) for v in self.vertices],
            "facets": [[label(v) for v in f] for f in facets],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SimplicialComplex":
        return cls(data["vertices"], data["facets"])


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join ``a * b``: faces ``F ⊔ G`` with ``F ∈ a`` and ``G ∈ b``."""
    if a.ground & b.ground:
        raise GroundSetOverlap(f"shared vertices {sorted(map(str, a.ground & b.ground))}")
    return SimplicialComplex(
        list(a.vertices) + list(b.vertices), [f | g for f in a.facets for g in b.facets]
    )


def find_isomorphism(
    a: SimplicialComplex, b: SimplicialComplex, max_vertices: int = DEFAULT_ISO_BOUND
) -> dict | None:
    """A vertex bijection mapping faces of ``a`` exactly onto faces of ``b``."""
    if len(a.vertices) > max_vertices or len(b.vertices) > max_vertices:
        raise TooLarge(f"isomorphism search is limited to {max_vertices} vertices")
    if len(a.vertices) != len(b.vertices) or len(a.facets) != len(b.facets):
        return None
    if sorted(map(len, a.facets)) != sorted(map(len, b.facets)):
        return None

    def signatures(c: SimplicialComplex) -> dict:
        return {v: tuple(sorted(len(f) for f in c.facets if v in f)) for v in c.vertices}

    sig_a, sig_b = signatures(a), signatures(b)
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return None
    faces_b = b.faces
    edges_a = {f for f in a.faces if len(f) == 2}
    order = sorted(a.vertices, key=lambda v: (-len(sig_a[v]), sig_a[v]))
    mapping: dict = {}
    used: set = set()

    def search(i: int) -> bool:
        if i == len(order):
            return {frozenset(mapping[v] for v in f) for f in a.facets} == set(b.facets)
        v = order[i]
        for w in b.vertices:
            if w in used or sig_b[w] != sig_a[v]:
                continue
            if any(
                (frozenset((u, v)) in edges_a) != (frozenset((mapping[u], w)) in faces_b)
                for u in order[:i]
            ):
                continue
            mapping[v] = w
            used.add(w)
            if search(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if search(0) else None


def isomorphic(
    a: SimplicialComplex, b: SimplicialComplex, max_vertices: int = DEFAULT_ISO_BOUND
) -> bool:
    return find_isomorphism(a, b, max_vertices) is not None
