"""Finite posets stored as Hasse diagrams.

Elements are dense indices ``0..n-1`` with a display-name table.  The order
relation is kept as one bitmask per element (``up[x]`` has bit ``y`` set iff
``x <= y``), so interval and filter queries are bitwise operations.

Methods accept an element either as its index (``int``) or its display name
(``str``).
"""

from __future__ import annotations

import heapq
from collections import deque
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleDetected,
    InvalidInput,
    NonHasseCover,
    NotComparable,
    UnknownElement,
)
from .simplicial import SimplicialComplex


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class FinitePoset:
    """An immutable finite poset given by its cover relation.

    The constructor validates the cover list: indices must be in range, the
    relation must be acyclic and no listed cover may be implied by a longer
    chain of covers.
    """

    def __init__(self, names: Sequence[str], covers: Iterable[tuple[int, int]]):
        names = tuple(str(s) for s in names)
        if not names:
            raise InvalidInput("a poset needs at least one element")
        if len(set(names)) != len(names):
            raise InvalidInput("element names must be distinct")
        n = len(names)
        cover_set = set()
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n):
                raise UnknownElement(f"cover ({a}, {b}) references an unknown index")
            if a == b:
                raise CycleDetected(f"self-cover on {names[a]!r}")
            cover_set.add((a, b))

        upper = [[] for _ in range(n)]
        lower = [[] for _ in range(n)]
        for a, b in sorted(cover_set):
            upper[a].append(b)
            lower[b].append(a)

        # Kahn's algorithm, smallest index first so the linear extension is
        # deterministic.
        indeg = [len(lower[x]) for x in range(n)]
        ready = [x for x in range(n) if indeg[x] == 0]
        order = []
        heapq.heapify(ready)
        while ready:
            x = heapq.heappop(ready)
            order.append(x)
            for y in upper[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(ready, y)
        if len(order) != n:
            stuck = [names[x] for x in range(n) if indeg[x] > 0]
            raise CycleDetected(f"cover relation has a cycle through {stuck}")

        up = [0] * n
        for x in reversed(order):
            m = 1 << x
            for y in upper[x]:
                m |= up[y]
            up[x] = m
        down = [0] * n
        for x in order:
            m = 1 << x
            for y in lower[x]:
                m |= down[y]
            down[x] = m

        for a, b in cover_set:
            between = (up[a] & down[b]) & ~((1 << a) | (1 << b))
            if between:
                z = next(bits(between))
                raise NonHasseCover(
                    f"cover ({names[a]}, {names[b]}) is implied via {names[z]}"
                )

        self.names = names
        self.n = n
        self.index = {s: i for i, s in enumerate(names)}
        self.covers = tuple(sorted(cover_set))
        self.upper_covers = tuple(tuple(u) for u in upper)
        self.lower_covers = tuple(tuple(l) for l in lower)
        self.up = tuple(up)
        self.down = tuple(down)
        self.order = tuple(order)
        self.full = (1 << n) - 1

    # -- construction -----------------------------------------------------

    @classmethod
    def from_covers(cls, names: Sequence[str], cover_pairs: Iterable[tuple[str, str]]):
        """Build a poset from display names and cover pairs given by name."""
        names = [str(s) for s in names]
        index = {s: i for i, s in enumerate(names)}
        covers = []
        for a, b in cover_pairs:
            try:
                covers.append((index[str(a)], index[str(b)]))
            except KeyError as exc:
                raise UnknownElement(f"unknown element {exc.args[0]!r}") from None
        return cls(names, covers)

    @classmethod
    def from_up_masks(cls, names: Sequence[str], up: Sequence[int]):
        """Build a poset from its full order relation given as up-set masks.

        The relation is checked to be reflexive, antisymmetric and transitive.
        """
        n = len(up)
        for x in range(n):
            if not up[x] >> x & 1:
                raise InvalidInput("relation is not reflexive")
        for x in range(n):
            for y in bits(up[x]):
                if y != x and up[y] >> x & 1:
                    raise CycleDetected(f"{names[x]} and {names[y]} are mutually related")
                if up[y] & ~up[x]:
                    raise InvalidInput("relation is not transitive")
        covers = []
        for x in range(n):
            strict = up[x] & ~(1 << x)
            above = 0
            for z in bits(strict):
                above |= up[z] & ~(1 << z)
            covers.extend((x, y) for y in bits(strict & ~above))
        return cls(names, covers)

    @classmethod
    def from_leq(cls, names: Sequence[str], leq):
        """Build a poset from a predicate ``leq(i, j)`` on indices."""
        n = len(names)
        up = [mask_of(j for j in range(n) if leq(i, j)) for i in range(n)]
        return cls.from_up_masks(names, up)

    # -- element handling -------------------------------------------------

    def elem(self, x) -> int:
        if isinstance(x, str):
            try:
                return self.index[x]
            except KeyError:
                raise UnknownElement(f"unknown element {x!r}") from None
        x = int(x)
        if not 0 <= x < self.n:
            raise UnknownElement(f"index {x} out of range")
        return x

    def elems(self, xs: Iterable) -> list[int]:
        return [self.elem(x) for x in xs]

    def name_of(self, x) -> str:
        return self.names[self.elem(x)]

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, covers={len(self.covers)})"

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.names == other.names and self.covers == other.covers

    def __hash__(self):
        return hash((self.names, self.covers))

    # -- order queries ----------------------------------------------------

    def leq(self, x, y) -> bool:
        return bool(self.up[self.elem(x)] >> self.elem(y) & 1)

    def lt(self, x, y) -> bool:
        x, y = self.elem(x), self.elem(y)
        return x != y and bool(self.up[x] >> y & 1)

    def covers_pair(self, x, y) -> bool:
        return self.elem(y) in self.upper_covers[self.elem(x)]

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.names, [(b, a) for a, b in self.covers])

    @cached_property
    def _bounds(self):
        bottom = next((x for x in range(self.n) if self.up[x] == self.full), None)
        top = next((x for x in range(self.n) if self.down[x] == self.full), None)
        return bottom, top

    def bounds(self) -> tuple[int, int] | None:
        """``(bottom, top)`` when both exist, else ``None``."""
        bottom, top = self._bounds
        if bottom is None or top is None:
            return None
        return bottom, top

    @property
    def bottom(self) -> int | None:
        return self._bounds[0]

    @property
    def top(self) -> int | None:
        return self._bounds[1]

    def is_bounded(self) -> bool:
        return self.bounds() is not None

    def minimal(self, mask: int | None = None) -> list[int]:
        """Minimal elements of the subset ``mask`` (default: everything)."""
        if mask is None:
            mask = self.full
        return [x for x in bits(mask) if self.down[x] & mask == 1 << x]

    def maximal(self, mask: int | None = None) -> list[int]:
        if mask is None:
            mask = self.full
        return [x for x in bits(mask) if self.up[x] & mask == 1 << x]

    # -- intervals and subsets -------------------------------------------

    def _check_leq(self, x: int, y: int):
        if not self.up[x] >> y & 1:
            raise NotComparable(f"{self.names[x]} is not below {self.names[y]}")

    def interval_mask(self, x, y) -> int:
        x, y = self.elem(x), self.elem(y)
        self._check_leq(x, y)
        return self.up[x] & self.down[y]

    def open_interval(self, x, y) -> list[int]:
        x, y = self.elem(x), self.elem(y)
        m = self.interval_mask(x, y) & ~((1 << x) | (1 << y))
        return list(bits(m))

    def closed_interval(self, x, y) -> "FinitePoset":
        return self.subposet(bits(self.interval_mask(x, y)))

    def subposet(self, elements: Iterable) -> "FinitePoset":
        """Induced subposet on ``elements`` (kept in increasing index order)."""
        idx = sorted(set(self.elems(elements)))
        pos = {x: i for i, x in enumerate(idx)}
        up = []
        for x in idx:
            m = 0
            for y in bits(self.up[x]):
                if y in pos:
                    m |= 1 << pos[y]
            up.append(m)
        return FinitePoset.from_up_masks([self.names[x] for x in idx], up)

    def is_order_convex(self, subset: Iterable) -> bool:
        c = mask_of(self.elems(subset))
        for x in bits(c):
            for y in bits(self.up[x] & c):
                between = self.up[x] & self.down[y]
                if between & ~c:
                    return False
        return True

    def is_order_filter(self, subset: Iterable) -> bool:
        c = mask_of(self.elems(subset))
        return all(self.up[x] & ~c == 0 for x in bits(c))

    def is_order_ideal(self, subset: Iterable) -> bool:
        c = mask_of(self.elems(subset))
        return all(self.down[x] & ~c == 0 for x in bits(c))

    def upset_of(self, subset: Iterable) -> int:
        """Mask of elements lying above some element of ``subset``."""
        m = 0
        for x in self.elems(subset):
            m |= self.up[x]
        return m

    # -- Möbius function and chains --------------------------------------

    @cached_property
    def _mobius_table(self) -> tuple[dict[int, int], ...]:
        rows = []
        rank_of = {x: i for i, x in enumerate(self.order)}
        for x in range(self.n):
            row = {x: 1}
            for z in sorted(bits(self.up[x] & ~(1 << x)), key=rank_of.__getitem__):
                row[z] = -sum(row[w] for w in bits(self.up[x] & self.down[z] & ~(1 << z)))
            rows.append(row)
        return tuple(rows)

    def mobius(self, x, y) -> int:
        x, y = self.elem(x), self.elem(y)
        self._check_leq(x, y)
        return self._mobius_table[x][y]

    def chain_counts(self, mask: int) -> list[int]:
        """f-vector of the order complex of the subposet ``mask``.

        Entry ``k`` counts chains with ``k + 1`` elements.  Computed by
        dynamic programming over chain tops, without listing the chains.
        """
        rank_of = {x: i for i, x in enumerate(self.order)}
        elems = sorted(bits(mask), key=rank_of.__getitem__)
        # ending[z][k] = number of chains with k+1 elements whose top is z
        ending: dict[int, list[int]] = {}
        counts: list[int] = []
        for z in elems:
            vec = [1]
            for w in bits(self.down[z] & mask & ~(1 << z)):
                for k, c in enumerate(ending[w]):
                    if k + 1 == len(vec):
                        vec.append(0)
                    vec[k + 1] += c
            ending[z] = vec
            for k, c in enumerate(vec):
                if k == len(counts):
                    counts.append(0)
                counts[k] += c
        return counts

    def order_complex_euler(self, mask: int) -> int:
        """Reduced Euler characteristic of the order complex of ``mask``."""
        return -1 + sum((-1) ** k * c for k, c in enumerate(self.chain_counts(mask)))

    def open_interval_mask(self, x, y) -> int:
        x, y = self.elem(x), self.elem(y)
        return self.interval_mask(x, y) & ~((1 << x) | (1 << y))

    def order_complex(self, elements: Iterable | None = None):
        """Order complex of the subposet on ``elements`` (default: all).

        Vertices are element indices; faces are the chains.
        """
        mask = self.full if elements is None else mask_of(self.elems(elements))
        return SimplicialComplex(list(bits(mask)), self.maximal_chains(mask))

    def maximal_chains(self, mask: int | None = None) -> list[tuple[int, ...]]:
        """All maximal chains of the subposet ``mask``."""
        if mask is None:
            mask = self.full
        if not mask:
            return []
        out = []

        def extend(chain, x):
            above = self.up[x] & mask & ~(1 << x)
            nxt = self.minimal(above)
            if not nxt:
                out.append(tuple(chain))
                return
            for y in nxt:
                chain.append(y)
                extend(chain, y)
                chain.pop()

        for x in self.minimal(mask):
            extend([x], x)
        return out

    def saturated_chains(self, x, y) -> Iterator[tuple[int, ...]]:
        """Lazily yield every saturated chain from ``x`` to ``y``.

        Chains come out in lexicographic order of their cover steps.
        """
        x, y = self.elem(x), self.elem(y)
        self._check_leq(x, y)
        below_y = self.down[y]
        stack = [(x, iter(self.upper_covers[x]))]
        chain = [x]
        if x == y:
            yield (x,)
            return
        while stack:
            _, it = stack[-1]
            for z in it:
                if not below_y >> z & 1:
                    continue
                chain.append(z)
                if z == y:
                    yield tuple(chain)
                    chain.pop()
                    continue
                stack.append((z, iter(self.upper_covers[z])))
                break
            else:
                stack.pop()
                chain.pop()

    def rank_function(self) -> list[int] | None:
        """Rank of every element if the poset is graded from its minima."""
        r = [None] * self.n
        for x in self.order:
            lows = self.lower_covers[x]
            if not lows:
                r[x] = 0
                continue
            vals = {r[w] + 1 for w in lows}
            if len(vals) != 1:
                return None
            r[x] = vals.pop()
        tops = {r[x] for x in self.maximal()}
        if len(tops) > 1:
            return None
        return r


def find_isomorphism(p: FinitePoset, q: FinitePoset) -> list[int] | None:
    """An order isomorphism ``p -> q`` as an index list, or ``None``.

    Plain backtracking over a linear extension of ``p``; candidates are
    restricted to elements with the same cover degrees and up/down-set sizes.
    Intended for posets of a few dozen elements.
    """
    if p.n != q.n or len(p.covers) != len(q.covers):
        return None

    def signature(r: FinitePoset, x: int):
        return (
            len(r.lower_covers[x]),
            len(r.upper_covers[x]),
            bin(r.down[x]).count("1"),
            bin(r.up[x]).count("1"),
        )

    sig_p = [signature(p, x) for x in range(p.n)]
    sig_q = [signature(q, x) for x in range(q.n)]
    if sorted(sig_p) != sorted(sig_q):
        return None
    by_sig: dict = {}
    for y in range(q.n):
        by_sig.setdefault(sig_q[y], []).append(y)

    order = list(p.order)
    f = [-1] * p.n
    used = 0

    def consistent(x: int, y: int) -> bool:
        for k in range(len(assigned)):
            u = assigned[k]
            v = f[u]
            if (p.up[u] >> x & 1) != (q.up[v] >> y & 1):
                return False
            if (p.up[x] >> u & 1) != (q.up[y] >> v & 1):
                return False
        return True

    assigned: list[int] = []

    def search(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        x = order[i]
        for y in by_sig[sig_p[x]]:
            if used >> y & 1 or not consistent(x, y):
                continue
            f[x] = y
            used |= 1 << y
            assigned.append(x)
            if search(i + 1):
                return True
            assigned.pop()
            used &= ~(1 << y)
            f[x] = -1
        return False

    return f if search(0) else None


def is_isomorphic(p: FinitePoset, q: FinitePoset) -> bool:
    return find_isomorphism(p, q) is not None


def chain(n: int) -> FinitePoset:
    """The ``n``-element chain ``0 < 1 < ... < n-1``."""
    return FinitePoset([str(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> FinitePoset:
    return FinitePoset([str(i) for i in range(n)], [])


def product(p: FinitePoset, q: FinitePoset, sep: str = ",") -> FinitePoset:
    """Cartesian product with the componentwise order."""
    pairs = [(a, b) for a in range(p.n) for b in range(q.n)]
    names = [f"{p.names[a]}{sep}{q.names[b]}" for a, b in pairs]
    pos = {ab: i for i, ab in enumerate(pairs)}
    covers = []
    for a, b in pairs:
        for a2 in p.upper_covers[a]:
            covers.append((pos[a, b], pos[a2, b]))
        for b2 in q.upper_covers[b]:
            covers.append((pos[a, b], pos[a, b2]))
    return FinitePoset(names, covers)


def _bfs_path(p: FinitePoset, x: int, y: int, allowed) -> list[int] | None:
    """Shortest upward path from ``x`` to ``y`` along allowed covers."""
    prev = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            path = []
            while u is not None:
                path.append(u)
                u = prev[u]
            return path[::-1]
        for v in p.upper_covers[u]:
            if v not in prev and allowed(u, v):
                prev[v] = u
                queue.append(v)
    return None
