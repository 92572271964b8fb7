"""Exact feasibility of homogeneous strict linear systems.

Decides whether some ``x`` satisfies ``<a, x> > 0`` for every strict row and
``<b, x> = 0`` for every equality row.  Equalities are substituted out one
variable at a time, then Fourier–Motzkin elimination runs on the strict
rows.  All arithmetic is on Python integers; rational input is rescaled to
primitive integer vectors first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, GuardExceeded
from .linalg import integral, primitive

MAX_DIM = 5
MAX_CONSTRAINTS = 12


def _as_int_rows(rows, dim: int | None) -> tuple[list[tuple[int, ...]], int | None]:
    out = []
    for r in rows:
        if dim is None:
            dim = len(r)
        if len(r) != dim:
            raise DimensionMismatch(f"expected {dim} coordinates, got {len(r)}")
        if all(isinstance(a, int) for a in r):
            out.append(primitive(r))
        else:
            out.append(integral([Fraction(a) for a in r]))
    return out, dim


def _substitute(row, eq, k: int) -> tuple[int, ...]:
    # x_k = -(sum_{j != k} eq_j x_j) / eq_k, scaled by |eq_k| > 0
    ek, rk = eq[k], row[k]
    s = 1 if ek > 0 else -1
    return primitive([s * (ek * a - rk * b) for a, b in zip(row, eq)])


def feasible(
    strict: Sequence[Sequence],
    equalities: Sequence[Sequence] = (),
    dim: int | None = None,
    *,
    guard: bool = True,
) -> bool:
    """True iff ``∃x: <a, x> > 0`` for all strict rows and ``<b, x> = 0``
    for all equality rows.

    With ``guard`` on, problems beyond ``MAX_DIM`` coordinates or
    ``MAX_CONSTRAINTS`` rows raise ``GuardExceeded``.
    """
    rows, dim = _as_int_rows(strict, dim)
    eqs, dim = _as_int_rows(equalities, dim)
    if guard and dim is not None and (dim > MAX_DIM or len(rows) + len(eqs) > MAX_CONSTRAINTS):
        raise GuardExceeded(
            f"feasibility is limited to {MAX_DIM} coordinates and {MAX_CONSTRAINTS} constraints"
        )

    while eqs:
        eq = eqs.pop()
        k = next((i for i, a in enumerate(eq) if a != 0), None)
        if k is None:
            continue
        eqs = [_substitute(e, eq, k) for e in eqs]
        rows = [_substitute(r, eq, k) for r in rows]

    return _fourier_motzkin(rows)


def _fourier_motzkin(rows: list[tuple[int, ...]]) -> bool:
    current = set(rows)
    while current:
        if any(not any(r) for r in current):
            return False  # 0 > 0
        dim = len(next(iter(current)))
        best = None
        for k in range(dim):
            pos = sum(1 for r in current if r[k] > 0)
            neg = sum(1 for r in current if r[k] < 0)
            if pos + neg == 0:
                continue
            cost = pos * neg - pos - neg
            if best is None or cost < best[0]:
                best = (cost, k)
        k = best[1]
        P = [r for r in current if r[k] > 0]
        N = [r for r in current if r[k] < 0]
        nxt = {r for r in current if r[k] == 0}
        for p in P:
            for q in N:
                nxt.add(primitive([-q[k] * a + p[k] * b for a, b in zip(p, q)]))
        current = nxt
    return True
