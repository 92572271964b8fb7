"""Edge labellings of covering relations: SB and SB′ verification and search.

Both variants are checked without enumerating saturated chains.  For an
element ``x`` and a set ``B`` of covers of ``x`` with ``j = ⋁B``:

* every cover of ``[x, j]`` lies on some saturated chain from ``x`` to ``j``,
  so "chains use only labels in S" is a condition on the covers of ``[x, j]``;
* "every chain uses label ℓ" fails iff ``j`` is reachable from ``x`` along
  covers of ``[x, j]`` whose label is not ℓ.

SB2 and SB2′ are quantified over every element ``x`` (atoms of ``(x, 1̂)``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Mapping

from .errors import IncompleteLabelling, InvalidInput, SearchBudgetExceeded
from .lattice import Lattice
from .poset import _bfs_path, bits

SB = "sb"
SB_PRIME = "sb-prime"
VARIANTS = (SB, SB_PRIME)

Labelling = Mapping[tuple[int, int], Hashable]


@dataclass(frozen=True)
class SBViolation:
    condition: str
    x: int
    subset: tuple[int, ...] = ()
    chain: tuple[int, ...] = ()
    label: Hashable = None

    def as_dict(self, p) -> dict:
        out = {
            "condition": self.condition,
            "x": p.names[self.x],
            "subset": [p.names[a] for a in self.subset],
        }
        if self.chain:
            out["chain"] = [p.names[c] for c in self.chain]
        if self.label is not None:
            out["label"] = str(self.label)
        return out


def _check_variant(variant: str):
    if variant not in VARIANTS:
        raise InvalidInput(f"variant must be one of {VARIANTS}, got {variant!r}")


def _complete(L: Lattice, labels: Labelling) -> dict[tuple[int, int], Hashable]:
    missing = [c for c in L.covers if c not in labels]
    if missing:
        a, b = missing[0]
        raise IncompleteLabelling(f"cover {L.names[a]} ⋖ {L.names[b]} has no label")
    return {c: labels[c] for c in L.covers}


def _chain_through(L: Lattice, x: int, u: int, v: int, j: int) -> tuple[int, ...]:
    lower = _bfs_path(L, x, u, lambda a, b: True)
    upper = _bfs_path(L, v, j, lambda a, b: True)
    return tuple(lower + upper)


def _subset_violation(
    L: Lattice, lab: Mapping, x: int, subset: tuple[int, ...], variant: str
) -> SBViolation | None:
    j = L.join_all(subset, start=x)
    inside = L.up[x] & L.down[j]
    required = {lab[x, b] for b in subset}
    forbidden = {lab[x, z] for z in L.upper_covers[x] if z not in subset}
    for u in bits(inside):
        for v in L.upper_covers[u]:
            if not inside >> v & 1:
                continue
            ell = lab[u, v]
            if (variant == SB and ell not in required) or (
                variant == SB_PRIME and ell in forbidden
            ):
                return SBViolation(
                    "SB2" if variant == SB else "SB2'",
                    x,
                    subset,
                    _chain_through(L, x, u, v, j),
                    ell,
                )
    for ell in sorted(required, key=repr):
        path = _bfs_path(
            L, x, j, lambda a, b: inside >> b & 1 and lab[a, b] != ell
        )
        if path is not None:
            return SBViolation(
                "SB2" if variant == SB else "SB2'", x, subset, tuple(path), ell
            )
    return None


def _sb1_violation(L: Lattice, lab: Mapping, x: int) -> SBViolation | None:
    seen = {}
    for y in L.upper_covers[x]:
        ell = lab[x, y]
        if ell in seen:
            return SBViolation("SB1", x, (seen[ell], y), (), ell)
        seen[ell] = y
    return None


def sb_violation(L: Lattice, labels: Labelling, variant: str = SB) -> SBViolation | None:
    """First violation of (SB1) or the chosen (SB2)/(SB2′) condition."""
    _check_variant(variant)
    lab = _complete(L, labels)
    for x in range(L.n):
        v = _sb1_violation(L, lab, x)
        if v:
            return v
    for x in range(L.n):
        ups = L.upper_covers[x]
        for k in range(2, len(ups) + 1):
            for subset in combinations(ups, k):
                v = _subset_violation(L, lab, x, subset, variant)
                if v:
                    return v
    return None


def check_sb(L: Lattice, labels: Labelling, variant: str = SB) -> bool:
    return sb_violation(L, labels, variant) is None


@dataclass
class _Constraint:
    x: int
    subset: tuple[int, ...]
    covers: frozenset = field(default_factory=frozenset)


def search_sb(
    L: Lattice,
    max_labels: int,
    variant: str = SB,
    node_limit: int = 10**7,
) -> dict[tuple[int, int], int] | None:
    """Backtracking search for a labelling with labels ``0..max_labels-1``.

    Labels are introduced in first-use order, which removes the symmetry of
    permuting label names.  Covers are assigned from the top of the lattice
    downwards so that each (x, B) condition is tested as soon as the last
    cover it depends on receives a label.  Returns ``None`` when the search
    space is exhausted; raises ``SearchBudgetExceeded`` past ``node_limit``
    label trials.
    """
    _check_variant(variant)
    if max_labels < 1:
        raise InvalidInput("max_labels must be at least 1")
    rank_of = {x: i for i, x in enumerate(L.order)}
    covers = sorted(L.covers, key=lambda c: (-rank_of[c[0]], c[1]))
    pos = {c: i for i, c in enumerate(covers)}

    checks_at: list[list[_Constraint]] = [[] for _ in covers]
    for x in range(L.n):
        ups = L.upper_covers[x]
        for k in range(2, len(ups) + 1):
            for subset in combinations(ups, k):
                j = L.join_all(subset, start=x)
                inside = L.up[x] & L.down[j]
                deps = {(u, v) for u in bits(inside) for v in L.upper_covers[u] if inside >> v & 1}
                deps.update((x, z) for z in ups)
                last = max(pos[c] for c in deps)
                checks_at[last].append(_Constraint(x, subset, frozenset(deps)))

    lab: dict[tuple[int, int], int] = {}
    nodes = 0

    def search(i: int, used: int) -> bool:
        nonlocal nodes
        if i == len(covers):
            return True
        x, y = covers[i]
        taken = {lab[x, z] for z in L.upper_covers[x] if (x, z) in lab}
        for ell in range(min(used + 1, max_labels)):
            nodes += 1
            if nodes > node_limit:
                raise SearchBudgetExceeded(f"more than {node_limit} nodes explored")
            if ell in taken:
                continue
            lab[x, y] = ell
            if all(
                _subset_violation(L, lab, c.x, c.subset, variant) is None for c in checks_at[i]
            ):
                if search(i + 1, max(used, ell + 1)):
                    return True
            del lab[x, y]
        return False

    if search(0, 0):
        return dict(lab)
    return None
