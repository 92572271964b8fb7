"""Hypothesis strategies for random posets and lattices."""

from hypothesis import reject
from hypothesis import strategies as st

from crosscut.lattice import try_lattice
from crosscut.poset import FinitePoset, mask_of


@st.composite
def posets(draw, min_size=1, max_size=7, bounded=False):
    """Random naturally labelled posets: pairs ``i < j`` are drawn, then
    closed transitively.  With ``bounded`` a bottom and top are added."""
    n = draw(st.integers(min_size, max_size))
    up = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                up[i] |= 1 << j
    for i in reversed(range(n)):
        m = up[i]
        for j in range(i + 1, n):
            if m >> j & 1:
                m |= up[j]
        up[i] = m
    names = [f"p{i}" for i in range(n)]
    if bounded:
        full = mask_of(range(n + 2))
        up = [full] + [(m << 1) | (1 << (n + 1)) for m in up] + [1 << (n + 1)]
        names = ["0"] + names + ["1"]
    return FinitePoset.from_up_masks(names, up)


@st.composite
def lattices(draw, max_size=8):
    L = try_lattice(draw(posets(min_size=0, max_size=max_size - 2, bounded=True)))
    if L is None:
        reject()
    return L
