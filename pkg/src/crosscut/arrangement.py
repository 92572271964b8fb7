"""Central hyperplane arrangements over the rationals and their chamber posets.

A chamber is a tuple of signs (``+1``/``-1``), one per hyperplane in input
order, whose open cone is nonempty.  Every geometric predicate reduces to an
exact call of :func:`crosscut.feasibility.feasible`.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidInput, NotSubarrangement
from .feasibility import feasible
from .linalg import in_span, integral, rank
from .poset import FinitePoset

Chamber = tuple[int, ...]


def parse_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise InvalidInput(f"cannot read {value!r} as an exact rational")


def sign_string(c: Chamber) -> str:
    return "".join("+" if s > 0 else "-" for s in c)


def parse_signs(text: str) -> Chamber:
    if set(text) - set("+-"):
        raise InvalidInput(f"sign vector {text!r} may only contain '+' and '-'")
    return tuple(1 if ch == "+" else -1 for ch in text)


def negate(c: Chamber) -> Chamber:
    return tuple(-s for s in c)


def separation(c: Chamber, d: Chamber) -> frozenset[int]:
    """Indices of the hyperplanes separating ``c`` and ``d``."""
    return frozenset(i for i, (a, b) in enumerate(zip(c, d)) if a != b)


class Arrangement:
    """Central arrangement given by pairwise non-parallel nonzero normals.

    Wall and incidence results are memoised per chamber on the instance.
    """

    def __init__(self, normals: Iterable[Sequence], dim: int | None = None):
        vecs = [tuple(parse_rational(a) for a in v) for v in normals]
        if dim is None:
            if not vecs:
                raise InvalidInput("an empty arrangement needs an explicit dimension")
            dim = len(vecs[0])
        for v in vecs:
            if len(v) != dim:
                raise DimensionMismatch(f"normal {v} does not have {dim} coordinates")
            if not any(v):
                raise InvalidInput("zero normal vector")
        ints = [integral(v) for v in vecs]
        for (i, a), (j, b) in combinations(enumerate(ints), 2):
            if a == b or a == tuple(-x for x in b):
                raise InvalidInput(f"hyperplanes {i} and {j} are parallel")
        self.dim = dim
        self.normals = tuple(vecs)
        self.vectors = tuple(ints)
        self._walls: dict[Chamber, tuple[int, ...]] = {}
        self._incident: dict[tuple[Chamber, frozenset], bool] = {}
        self._chambers: list[Chamber] | None = None
        self._localization: dict[frozenset, frozenset[int]] = {}

    def __len__(self):
        return len(self.normals)

    def __repr__(self):
        return f"Arrangement(dim={self.dim}, hyperplanes={len(self)})"

    @property
    def rank(self) -> int:
        return rank(self.vectors)

    def label(self, i: int) -> str:
        """Readable linear form, e.g. ``x+y-z`` (``x_1..x_n`` beyond 3 coordinates)."""
        names = ["x", "y", "z"] if self.dim <= 3 else [f"x{k + 1}" for k in range(self.dim)]
        terms = []
        for a, var in zip(self.normals[i], names):
            if a == 0:
                continue
            coef = "" if abs(a) == 1 else str(abs(a))
            sign = "-" if a < 0 else "+"
            terms.append((sign, coef + var))
        text = "".join(s + t for s, t in terms)
        return text[1:] if text.startswith("+") else text

    def to_json(self) -> dict:
        return {"dim": self.dim, "normals": [[str(a) for a in v] for v in self.normals]}

    # -- chambers ----------------------------------------------------------

    def generic_chamber(self) -> Chamber:
        """Sign vector of the first point ``(1, t, t², …)``, ``t = 2, 3, …``,
        lying on no hyperplane."""
        t = 2
        while True:
            point = [t**k for k in range(self.dim)]
            signs = [sum(a * p for a, p in zip(v, point)) for v in self.vectors]
            if all(signs):
                return tuple(1 if s > 0 else -1 for s in signs)
            t += 1

    def is_chamber(self, c: Chamber) -> bool:
        return len(c) == len(self) and feasible(
            [[s * a for a in v] for s, v in zip(c, self.vectors)], dim=self.dim
        )

    def walls(self, c: Chamber) -> tuple[int, ...]:
        """Hyperplanes supporting a facet of ``c``."""
        c = tuple(c)
        if c not in self._walls:
            found = []
            for h in range(len(self)):
                rest = [[s * a for a in v] for i, (s, v) in enumerate(zip(c, self.vectors)) if i != h]
                if feasible(rest, [self.vectors[h]], dim=self.dim):
                    found.append(h)
            self._walls[c] = tuple(found)
        return self._walls[c]

    def chambers(self) -> list[Chamber]:
        """All chambers, in breadth-first order from :meth:`generic_chamber`."""
        if self._chambers is None:
            start = self.generic_chamber()
            seen = {start}
            order = [start]
            queue = deque([start])
            while queue:
                c = queue.popleft()
                for h in self.walls(c):
                    d = c[:h] + (-c[h],) + c[h + 1 :]
                    if d not in seen:
                        seen.add(d)
                        order.append(d)
                        queue.append(d)
            self._chambers = order
        return list(self._chambers)

    def upper_walls(self, c0: Chamber, c: Chamber) -> tuple[int, ...]:
        """Walls of ``c`` not separating it from the base chamber ``c0``."""
        return tuple(h for h in self.walls(c) if c[h] == c0[h])

    def lower_walls(self, c0: Chamber, c: Chamber) -> tuple[int, ...]:
        return tuple(h for h in self.walls(c) if c[h] != c0[h])

    def chamber_order(self, c0: Chamber) -> list[Chamber]:
        """Chambers sorted by distance from ``c0``, then by sign string."""
        return sorted(self.chambers(), key=lambda c: (len(separation(c0, c)), sign_string(c)))

    def chamber_poset(self, c0: Chamber) -> FinitePoset:
        """Chambers ordered by inclusion of separation sets from ``c0``.

        Element ``i`` is ``self.chamber_order(c0)[i]``; names are sign strings.
        """
        c0 = tuple(c0)
        if not self.is_chamber(c0):
            raise InvalidInput(f"{sign_string(c0)} is not a chamber")
        chambers = self.chamber_order(c0)
        seps = [separation(c0, c) for c in chambers]
        return FinitePoset.from_leq(
            [sign_string(c) for c in chambers], lambda i, j: seps[i] <= seps[j]
        )

    # -- localisations and incidence ----------------------------------------

    def localization(self, subset: Iterable[int]) -> frozenset[int]:
        """Hyperplanes containing the intersection of those in ``subset``."""
        key = frozenset(subset)
        if key not in self._localization:
            basis = [self.vectors[i] for i in sorted(key)]
            self._localization[key] = frozenset(
                h for h, v in enumerate(self.vectors) if basis and in_span(v, basis)
            )
        return self._localization[key]

    def flats(self) -> list[frozenset[int]]:
        """Distinct localizations ``A_X`` over all intersection subspaces."""
        found = {frozenset()}
        for k in range(1, self.rank + 1):
            for subset in combinations(range(len(self)), k):
                found.add(self.localization(subset))
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def incident(self, c: Chamber, subset: Iterable[int]) -> bool:
        """Whether the closure of ``c`` meets the relative interior of the
        face lying on ``X = ⋂ subset`` on ``c``'s side of every other plane."""
        c = tuple(c)
        loc = self.localization(subset)
        key = (c, loc)
        if key not in self._incident:
            strict = [
                [s * a for a in v] for h, (s, v) in enumerate(zip(c, self.vectors)) if h not in loc
            ]
            eqs = [self.vectors[h] for h in loc]
            self._incident[key] = feasible(strict, eqs, dim=self.dim)
        return self._incident[key]

    def is_simplicial_chamber(self, c: Chamber) -> bool:
        w = self.walls(c)
        r = self.rank
        return len(w) == r and rank([self.vectors[h] for h in w]) == r

    def is_simplicial(self) -> bool:
        return all(self.is_simplicial_chamber(c) for c in self.chambers())

    # -- bineighborliness -----------------------------------------------------

    def bineighborly_failures(self, c0: Chamber) -> list[tuple[Chamber, int, int]]:
        """Every ``(c, H, H′)`` with ``H, H′`` upper walls of ``c`` and ``c``
        not incident to ``H ∩ H′``; chambers in :meth:`chamber_order`."""
        out = []
        for c in self.chamber_order(tuple(c0)):
            for h, k in combinations(self.upper_walls(c0, c), 2):
                if not self.incident(c, (h, k)):
                    out.append((c, h, k))
        return out

    def bineighborly_violation(self, c0: Chamber) -> tuple[Chamber, int, int] | None:
        for c in self.chamber_order(tuple(c0)):
            for h, k in combinations(self.upper_walls(c0, c), 2):
                if not self.incident(c, (h, k)):
                    return (c, h, k)
        return None

    def is_bineighborly(self, c0: Chamber) -> bool:
        return self.bineighborly_violation(c0) is None

    # -- sub-arrangements -------------------------------------------------------

    def _check_subset(self, subset: Iterable[int]) -> tuple[int, ...]:
        idx = tuple(subset)
        if len(set(idx)) != len(idx) or any(not 0 <= i < len(self) for i in idx):
            raise NotSubarrangement(f"{idx} does not index distinct hyperplanes")
        return idx

    def subarrangement(self, subset: Iterable[int]) -> "Arrangement":
        idx = self._check_subset(subset)
        return Arrangement([self.normals[i] for i in idx], dim=self.dim)

    def restrict(self, subset: Iterable[int], c: Chamber) -> Chamber:
        """The chamber of the sub-arrangement on ``subset`` containing ``c``."""
        idx = self._check_subset(subset)
        return tuple(c[i] for i in idx)


def witness_dict(A: Arrangement, witness: tuple[Chamber, int, int]) -> dict:
    c, h, k = witness
    return {"chamber": sign_string(c), "walls": [A.label(h), A.label(k)]}
