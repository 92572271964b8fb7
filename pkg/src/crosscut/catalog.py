"""Named fixtures and exhaustive enumeration of small lattices.

``named(name, *params)`` is the single entry point used by the command line;
the individual generators are also importable.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations
from string import ascii_lowercase
from typing import Iterator

from .arrangement import Arrangement
from .congruence import Congruence
from .doubling import double
from .errors import ParamOutOfRange, UnknownName
from .lattice import Lattice
from .poset import FinitePoset, bits, mask_of

MAX_ENUMERATION = 7


def _lattice(names, covers) -> Lattice:
    return Lattice.from_covers(names, covers)


def _check_range(name: str, n: int, lo: int, hi: int):
    if not isinstance(n, int) or not lo <= n <= hi:
        raise ParamOutOfRange(f"{name} takes a parameter in [{lo}, {hi}], got {n!r}")


# -- small lattices -----------------------------------------------------------


def boolean(n: int) -> Lattice:
    """Subsets of ``{a, b, …}``; the empty set is ``0`` and the full set ``1``."""
    _check_range("boolean", n, 0, 6)
    letters = ascii_lowercase[:n]

    def name(m: int) -> str:
        if m == 0:
            return "0"
        if m == (1 << n) - 1:
            return "1"
        return "".join(letters[i] for i in bits(m))

    masks = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), [-(m >> i & 1) for i in range(n)]))
    names = [name(m) for m in masks]
    pos = {m: i for i, m in enumerate(masks)}
    covers = [(pos[m], pos[m | 1 << i]) for m in masks for i in range(n) if not m >> i & 1]
    return Lattice(names, covers)


def chain(n: int) -> Lattice:
    _check_range("chain", n, 1, 64)
    return Lattice([str(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def m3() -> Lattice:
    return _lattice("0abc1", [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])


def n5() -> Lattice:
    """Pentagon ``0 < b < c < 1`` with ``a`` beside the chain."""
    return _lattice("0abc1", [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")])


def hexagon() -> Lattice:
    return _lattice(
        ["0", "a", "b", "A", "B", "1"],
        [("0", "a"), ("0", "b"), ("a", "A"), ("b", "B"), ("A", "1"), ("B", "1")],
    )


def fig1_left() -> Lattice:
    """Seven elements; the atoms join to ``m`` below the top, and every
    atomic interval is Boolean."""
    return _lattice(
        ["0", "a", "b", "l", "m", "r", "1"],
        [("0", "a"), ("0", "b"), ("a", "l"), ("a", "m"), ("b", "m"), ("b", "r"),
         ("l", "1"), ("m", "1"), ("r", "1")],
    )


def fig1_right() -> Lattice:
    """Three atoms ``a, m, b`` where ``a ∨ b = 1`` though ``{a, b}`` misses ``m``."""
    return _lattice(
        ["0", "a", "m", "b", "L", "R", "1"],
        [("0", "a"), ("0", "m"), ("0", "b"), ("a", "L"), ("m", "L"), ("m", "R"),
         ("b", "R"), ("L", "1"), ("R", "1")],
    )


_FIG3_COVERS = [
    ("0", "r", "solid"), ("0", "p", "dashed"),
    ("p", "q", "solid"), ("p", "s", "dashed"), ("p", "u", "snake"),
    ("s", "t", "solid"), ("s", "v", "snake"),
    ("q", "t", "dashed"), ("q", "w", "snake"),
    ("u", "w", "solid"), ("u", "v", "dashed"),
    ("w", "1", "dashed"), ("v", "1", "solid"), ("t", "1", "snake"),
    ("r", "1", "dashed"),
]


def fig3() -> Lattice:
    """Ten-element lattice carrying a three-label cover labelling that meets
    the relaxed chain condition but not the strict one.

    The lower interval ``[p, 1]`` is a cube, and ``r`` sits beside it.
    """
    names = ["0", "r", "p", "q", "s", "u", "t", "v", "w", "1"]
    return _lattice(names, [(a, b) for a, b, _ in _FIG3_COVERS])


def fig3_labelling(L: Lattice | None = None) -> dict[tuple[int, int], str]:
    L = fig3() if L is None else L
    return {(L.elem(a), L.elem(b)): lab for a, b, lab in _FIG3_COVERS}


_FIG4_NAMES = [
    "0", "A", "C", "E", "AB", "AD", "BC", "CE", "DE", "ABC", "ABD", "ADE",
    "BCE", "CDE", "ABCD", "ABDE", "BCDE", "T",
]
_FIG4_COVERS = [
    ("0", "A"), ("A", "AB"), ("AB", "ABC"), ("ABC", "ABCD"), ("ABCD", "T"),
    ("BCDE", "T"), ("CDE", "BCDE"), ("DE", "CDE"), ("E", "DE"), ("0", "E"),
    ("0", "C"), ("C", "BC"), ("BC", "ABC"), ("BC", "BCE"), ("BCE", "BCDE"),
    ("C", "CE"), ("CE", "BCE"), ("E", "CE"), ("CE", "CDE"), ("ABDE", "T"),
    ("ADE", "ABDE"), ("DE", "ADE"), ("AD", "ADE"), ("A", "AD"),
    ("ABD", "ABDE"), ("AD", "ABD"), ("ABD", "ABCD"), ("AB", "ABD"),
]
_FIG4_BLOCKS = [("C", "BC"), ("CE", "BCE"), ("CDE", "BCDE")]


def fig4() -> Lattice:
    """Eighteen-element lattice with a congruence whose quotient has 15."""
    return _lattice(_FIG4_NAMES, _FIG4_COVERS)


def fig4_congruence(L: Lattice | None = None) -> Congruence:
    """Collapses ``C≡BC``, ``CE≡BCE`` and ``CDE≡BCDE``."""
    L = fig4() if L is None else L
    merged = {x for b in _FIG4_BLOCKS for x in b}
    blocks = [list(b) for b in _FIG4_BLOCKS] + [[x] for x in L.names if x not in merged]
    return Congruence.from_blocks(L, blocks)


def fig6_final() -> Lattice:
    names = ["0", "A", "E", "F", "AB", "AD", "DE", "FE", "ABC", "ABD", "ADE",
             "DEF", "ABCD", "ABDE", "T"]
    covers = [
        ("0", "A"), ("A", "AB"), ("AB", "ABC"), ("ABC", "ABCD"), ("ABCD", "T"),
        ("DEF", "T"), ("DE", "DEF"), ("E", "DE"), ("0", "E"), ("0", "F"),
        ("F", "ABC"), ("F", "FE"), ("FE", "DEF"), ("E", "FE"), ("ABDE", "T"),
        ("ADE", "ABDE"), ("DE", "ADE"), ("AD", "ADE"), ("A", "AD"),
        ("ABD", "ABDE"), ("AD", "ABD"), ("ABD", "ABCD"), ("AB", "ABD"),
    ]
    return _lattice(names, covers)


def fig6_doublings() -> list[Lattice]:
    """Lattices of a six-step doubling sequence starting from one element.

    Steps: double everything (2-chain), everything again (B2), both atoms
    (hexagon), everything (hexagon × 2-chain), then the 3-chain formed by an
    atom, its cover and the top inside the lower copy.
    """
    L = Lattice(["0"], [])
    out = [L]
    for _ in range(2):
        L = double(L, range(L.n)).lattice
        out.append(L)
    L = double(L, L.atoms()).lattice
    out.append(L)
    hexa = L
    L = double(L, range(L.n)).lattice
    out.append(L)
    a = hexa.atoms()[0]
    cover = hexa.upper_covers[a][0]
    subset = [f"{hexa.names[x]}.0" for x in (a, cover, hexa.top)]
    out.append(double(L, subset).lattice)
    return out


# -- families ------------------------------------------------------------------


def weak_order(n: int) -> Lattice:
    """Permutations of ``1..n`` (one-line notation) with covers swapping an
    adjacent ascent."""
    _check_range("weak_order", n, 1, 4)
    perms = sorted(permutations(range(1, n + 1)), key=lambda w: (_inversions(w), w))
    pos = {w: i for i, w in enumerate(perms)}
    covers = []
    for w in perms:
        for i in range(n - 1):
            if w[i] < w[i + 1]:
                v = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                covers.append((pos[w], pos[v]))
    return Lattice(["".join(map(str, w)) for w in perms], covers)


def _inversions(w) -> int:
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


def _trees(n: int):
    if n == 0:
        return [None]
    out = []
    for k in range(n):
        for left in _trees(k):
            for right in _trees(n - 1 - k):
                out.append((left, right))
    return out


def _tree_name(t) -> str:
    # binary tree -> Dyck word: "(" left ")" right
    return "" if t is None else "(" + _tree_name(t[0]) + ")" + _tree_name(t[1])


def _right_rotations(t):
    if t is None:
        return
    left, right = t
    if left is not None:
        a, b = left
        yield (a, (b, right))
    for l2 in _right_rotations(left):
        yield (l2, right)
    for r2 in _right_rotations(right):
        yield (left, r2)


def tamari(n: int) -> Lattice:
    """Binary trees with ``n`` nodes under right rotation, named by Dyck words.

    The order is the reflexive-transitive closure of rotation, computed and
    validated before covers are extracted.
    """
    _check_range("tamari", n, 1, 5)
    trees = _trees(n)
    trees.sort(key=_tree_name, reverse=True)
    pos = {t: i for i, t in enumerate(trees)}
    step = [mask_of(pos[r] for r in _right_rotations(t)) for t in trees]
    up = [1 << i for i in range(len(trees))]
    changed = True
    while changed:
        changed = False
        for i in range(len(trees)):
            m = up[i] | step[i]
            for j in bits(step[i]):
                m |= up[j]
            if m != up[i]:
                up[i] = m
                changed = True
    p = FinitePoset.from_up_masks([_tree_name(t) for t in trees], up)
    return Lattice.from_poset(p)


# -- arrangements ----------------------------------------------------------------


def braid(n: int) -> Arrangement:
    """Normals ``e_i − e_j`` for ``i < j`` in ``n`` coordinates."""
    _check_range("braid", n, 2, 4)
    normals = []
    for i, j in combinations(range(n), 2):
        v = [0] * n
        v[i], v[j] = 1, -1
        normals.append(v)
    return Arrangement(normals, dim=n)


def braid_fundamental(n: int) -> tuple[int, ...]:
    """The chamber ``x_1 < x_2 < … < x_n``: every normal is negative there."""
    return tuple([-1] * (n * (n - 1) // 2))


def fig2() -> Arrangement:
    """Three lines through the origin of the plane."""
    return Arrangement([[0, 1], [4, -3], [4, 3]])


def prism4() -> Arrangement:
    """Planes ``x, y, x+y+z, x+y−z``; the all-positive chamber has four walls."""
    return Arrangement([[1, 0, 0], [0, 1, 0], [1, 1, 1], [1, 1, -1]])


PRISM_CHAMBER = (1, 1, 1, 1)


def random_arrangements(
    seed: int, count: int = 20, max_hyperplanes: int = 6, entry_bound: int = 2
) -> list[Arrangement]:
    """Seeded rank-3 arrangements in 3 coordinates with integer normals.

    Each has between 3 and ``max_hyperplanes`` pairwise non-parallel normals
    with entries in ``[-entry_bound, entry_bound]``.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        size = rng.randint(3, max_hyperplanes)
        normals: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        while len(normals) < size:
            v = tuple(rng.randint(-entry_bound, entry_bound) for _ in range(3))
            if not any(v):
                continue
            a = Arrangement([v])
            key = a.vectors[0]
            neg = tuple(-x for x in key)
            if key in seen or neg in seen:
                continue
            seen.add(key)
            normals.append(v)
        A = Arrangement(normals)
        if A.rank == 3:
            out.append(A)
    return out


# -- enumeration ------------------------------------------------------------------


def _proper_parts(m: int) -> Iterator[list[int]]:
    """Naturally labelled posets on ``0..m-1`` as strict up-set masks.

    Element ``k`` is added above an order ideal of ``0..k-1``; every labelled
    poset with a natural labelling arises exactly once.
    """

    def ideals(strict_up: list[int], k: int) -> Iterator[int]:
        down = [mask_of(i for i in range(k) if strict_up[i] >> j & 1) for j in range(k)]
        for m_ in range(1 << k):
            if all(down[j] & ~m_ == 0 for j in bits(m_)):
                yield m_

    def grow(strict_up: list[int], k: int):
        if k == m:
            yield list(strict_up)
            return
        for ideal in ideals(strict_up, k):
            nxt = [u | (1 << k) if ideal >> i & 1 else u for i, u in enumerate(strict_up)]
            nxt.append(0)
            yield from grow(nxt, k + 1)

    yield from grow([], 0)


def _is_lattice_part(strict_up: list[int], m: int) -> bool:
    # with bounds added, every pair needs a least upper bound
    top = 1 << m
    ups = [u | (1 << i) | top for i, u in enumerate(strict_up)]
    known = set(ups) | {top}
    for i in range(m):
        for j in range(i + 1, m):
            if (ups[i] & ups[j]) not in known:
                return False
    return True


def _canonical_key(strict_up: list[int], m: int) -> tuple:
    pairs = [(i, j) for i in range(m) for j in bits(strict_up[i])]
    best = None
    for perm in permutations(range(m)):
        key = tuple(sorted((perm[i], perm[j]) for i, j in pairs))
        if best is None or key < best:
            best = key
    return best


def enumerate_lattices(n: int, max_n: int = MAX_ENUMERATION) -> list[Lattice]:
    """All lattices with ``n`` elements up to isomorphism.

    Bounds are named ``0`` and ``1`` (a single element is just ``0``), the
    proper part ``a, b, c, …``.  Output is sorted by canonical form.
    """
    if not isinstance(n, int) or not 1 <= n <= max_n:
        raise ParamOutOfRange(f"enumerate_lattices takes 1 <= n <= {max_n}, got {n!r}")
    if n == 1:
        return [Lattice(["0"], [])]
    m = n - 2
    keys = set()
    for strict_up in _proper_parts(m):
        if _is_lattice_part(strict_up, m):
            keys.add(_canonical_key(strict_up, m))
    out = []
    for key in sorted(keys):
        names = ["0"] + list(ascii_lowercase[:m]) + ["1"]
        up = [0] * n
        up[0] = (1 << n) - 1
        up[n - 1] = 1 << (n - 1)
        for i in range(m):
            up[i + 1] = (1 << (i + 1)) | (1 << (n - 1))
        for i, j in key:
            up[i + 1] |= 1 << (j + 1)
        out.append(Lattice.from_poset(FinitePoset.from_up_masks(names, up)))
    return out


def small_lattices(max_n: int = 6) -> list[Lattice]:
    """Every lattice with at most ``max_n`` elements, up to isomorphism."""
    return [L for n in range(1, max_n + 1) for L in enumerate_lattices(n)]


# -- dispatcher --------------------------------------------------------------------

_NO_PARAM = {
    "M3": m3,
    "N5": n5,
    "hexagon": hexagon,
    "fig1_left": fig1_left,
    "fig1_right": fig1_right,
    "fig3": fig3,
    "fig4": fig4,
    "fig6_final": fig6_final,
    "fig2": fig2,
    "prism4": prism4,
}
_ONE_PARAM = {
    "boolean": boolean,
    "chain": chain,
    "weak_order": weak_order,
    "tamari": tamari,
    "braid": braid,
}
NAMES = tuple(sorted(_NO_PARAM) + sorted(_ONE_PARAM))


def named(name: str, *params):
    """Build the fixture ``name``; families take one integer parameter."""
    if name in _NO_PARAM:
        if params:
            raise ParamOutOfRange(f"{name} takes no parameters")
        return _NO_PARAM[name]()
    if name in _ONE_PARAM:
        if len(params) != 1:
            raise ParamOutOfRange(f"{name} takes exactly one integer parameter")
        try:
            n = int(params[0])
        except (TypeError, ValueError):
            raise ParamOutOfRange(f"{name} needs an integer, got {params[0]!r}") from None
        return _ONE_PARAM[name](n)
    raise UnknownName(f"unknown catalog entry {name!r}; known: {', '.join(NAMES)}")


def lattice_fixtures() -> dict[str, Lattice]:
    """Every named lattice at a size suited to exhaustive checks."""
    out = {
        "boolean3": boolean(3),
        "chain4": chain(4),
        "M3": m3(),
        "N5": n5(),
        "hexagon": hexagon(),
        "fig1_left": fig1_left(),
        "fig1_right": fig1_right(),
        "fig3": fig3(),
        "fig4": fig4(),
        "fig6_final": fig6_final(),
        "weak_order3": weak_order(3),
        "weak_order4": weak_order(4),
        "tamari3": tamari(3),
        "tamari4": tamari(4),
    }
    return out
