"""Exact integer linear algebra helpers (no floating point)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def primitive(vector: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries, keeping the sign."""
    g = 0
    for a in vector:
        g = gcd(g, a)
    if g <= 1:
        return tuple(vector)
    return tuple(a // g for a in vector)


def integral(vector: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    den = 1
    for q in vector:
        den = den * q.denominator // gcd(den, q.denominator)
    return primitive([int(q * den) for q in vector])


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def in_span(vector: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    return rank(list(basis) + [vector]) == rank(basis)
