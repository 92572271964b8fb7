"""Structural property checks that combine several modules.

Each ``*_violation`` function returns ``None`` when the property holds on its
subject and otherwise a JSON-ready witness using element display names.
"""

from __future__ import annotations

from itertools import combinations

from .arrangement import Arrangement, negate, separation, sign_string
from .congruence import Congruence, all_congruences, congruence_lattice, quotient
from .doubling import (
    classify_doubled_interval,
    convex_subsets,
    double,
    doubled_crosscut,
    doubled_join,
    satisfies_atom_condition,
)
from .lattice import (
    Lattice,
    crosscut_simplicial_violation,
    is_crosscut_simplicial,
    is_distributive,
    is_join_semidistributive,
    is_meet_semidistributive,
    is_semidistributive,
    mobius_range_violation,
    try_lattice,
)
from .poset import bits, find_isomorphism
from .simplicial import SimplicialComplex, isomorphic


def strict_intervals(L: Lattice):
    for x in range(L.n):
        for y in bits(L.up[x] & ~(1 << x)):
            yield x, y


def _interval(L, x, y) -> list[str]:
    return [L.names[x], L.names[y]]


# -- crosscut complexes and Möbius values --------------------------------------


def crosscut_euler_violation(L: Lattice) -> dict | None:
    """``χ̃(Γ[x, y]) = μ(x, y) = χ̃(Δ(x, y))`` on every ``x < y``."""
    for x, y in strict_intervals(L):
        gamma = L.crosscut_complex(x, y).reduced_euler()
        mu = L.mobius(x, y)
        order = L.order_complex_euler(L.open_interval_mask(x, y))
        if not gamma == mu == order:
            return {"interval": _interval(L, x, y), "crosscut": gamma, "mobius": mu, "order_complex": order}
    return None


def meet_sd_crosscut_violation(L: Lattice) -> dict | None:
    """Meet-semidistributive lattices are crosscut-simplicial."""
    if not is_meet_semidistributive(L):
        return None
    w = crosscut_simplicial_violation(L)
    return None if w is None else w.as_dict(L)


def _pure_or_simplex(gamma: SimplicialComplex, natoms: int) -> bool:
    return gamma.is_full_simplex() or gamma.is_pure(natoms - 2)


def join_sd_crosscut_violation(L: Lattice) -> dict | None:
    """In a join-semidistributive lattice each crosscut complex is a full
    simplex or pure of dimension ``|A| - 2``."""
    if not is_join_semidistributive(L):
        return None
    for x, y in strict_intervals(L):
        gamma = L.crosscut_complex(x, y)
        if not _pure_or_simplex(gamma, len(gamma.vertices)):
            return {"interval": _interval(L, x, y), "facets": gamma.to_json(L.name_of)["facets"]}
    return None


def sd_mobius_violation(L: Lattice) -> dict | None:
    """Meet- or join-semidistributive lattices have ``μ ∈ {-1, 0, 1}``."""
    if not (is_meet_semidistributive(L) or is_join_semidistributive(L)):
        return None
    bad = mobius_range_violation(L)
    if bad is None:
        return None
    x, y = bad
    return {"interval": _interval(L, x, y), "mobius": L.mobius(x, y)}


def top_crosscut_shape(L: Lattice) -> dict:
    gamma = L.crosscut_complex()
    return {
        "facets": gamma.to_json(L.name_of)["facets"],
        "pure": gamma.is_pure(len(gamma.vertices) - 2),
        "boundary": gamma.is_simplex_boundary(),
        "full": gamma.is_full_simplex(),
    }


# -- quotients ---------------------------------------------------------------------


def quotient_source_interval(theta: Congruence, lo: int, hi: int) -> tuple[int, int]:
    """An interval of ``L`` whose crosscut complex matches that of the
    quotient interval between blocks ``lo < hi``.

    Take ``x′ = π↑(X)``, the atoms ``A`` of ``(x′, π↑(Y))`` and ``y′``, the
    least member of ``Y`` above ``⋁A``.
    """
    L = theta.lattice
    x = theta.project_up(theta.blocks[lo][0])
    y_top = theta.project_up(theta.blocks[hi][0])
    y_low = theta.project_down(theta.blocks[hi][0])
    atoms = L.atoms(x, y_top)
    return x, L.join(y_low, L.join_all(atoms, start=x))


def quotient_crosscut_violation(L: Lattice, congruences=None) -> dict | None:
    """Every quotient interval's crosscut complex appears in ``L``, and
    quotients of crosscut-simplicial lattices stay crosscut-simplicial."""
    cs = is_crosscut_simplicial(L)
    complexes = None
    for theta in all_congruences(L) if congruences is None else congruences:
        Q, _ = quotient(L, theta)
        for lo, hi in strict_intervals(Q):
            target = Q.crosscut_complex(lo, hi)
            x, y = quotient_source_interval(theta, lo, hi)
            if x != y and L.leq(x, y) and isomorphic(L.crosscut_complex(x, y), target):
                continue
            # the constructed interval missed; any interval of L will do
            if complexes is None:
                complexes = [L.crosscut_complex(a, b) for a, b in strict_intervals(L)]
            if not any(isomorphic(g, target) for g in complexes):
                return {
                    "congruence": theta.to_json()["blocks"],
                    "quotient_interval": _interval(Q, lo, hi),
                    "reason": "no interval of the lattice has an isomorphic crosscut complex",
                }
        if cs and not is_crosscut_simplicial(Q):
            return {"congruence": theta.to_json()["blocks"], "reason": "quotient is not crosscut-simplicial"}
    return None


def congruence_lattice_violation(L: Lattice) -> dict | None:
    Con, cons = congruence_lattice(L)
    if is_distributive(Con):
        return None
    return {"congruences": len(cons), "reason": "Con(L) is not distributive"}


def congruence_count(L: Lattice) -> int:
    return len(all_congruences(L))


# -- doubling ----------------------------------------------------------------------


def _subset_names(L, subset) -> list[str]:
    return [L.names[c] for c in subset]


def doubling_classifier_violation(L: Lattice, max_size: int = 8) -> dict | None:
    """For each convex ``C``: the join formula matches the doubled lattice, and
    every interval's crosscut complex matches its predicted shape."""
    for subset in convex_subsets(L, max_size):
        D = double(L, subset)
        M = D.lattice
        for a in range(M.n):
            for b in range(M.n):
                if doubled_join(D, a, b) != M.join(a, b):
                    return {"subset": _subset_names(L, subset), "join_of": [M.names[a], M.names[b]]}
        for lo, hi in strict_intervals(M):
            case = classify_doubled_interval(D, lo, hi)
            if not isomorphic(doubled_crosscut(D, lo, hi), case.predicted):
                return {
                    "subset": _subset_names(L, subset),
                    "interval": _interval(M, lo, hi),
                    "case": case.case,
                }
    return None


def doubling_preservation_violation(L: Lattice, max_size: int = 8) -> dict | None:
    """``|μ| ≤ 1`` survives every doubling; crosscut-simpliciality survives
    doubling at sets meeting the atom condition (order filters included)."""
    small_mu = mobius_range_violation(L) is None
    cs = is_crosscut_simplicial(L)
    for subset in convex_subsets(L, max_size):
        M = double(L, subset).lattice
        if small_mu and mobius_range_violation(M) is not None:
            return {"subset": _subset_names(L, subset), "reason": "Möbius value outside {-1, 0, 1}"}
        if cs and satisfies_atom_condition(L, subset) and not is_crosscut_simplicial(M):
            w = crosscut_simplicial_violation(M)
            return {"subset": _subset_names(L, subset), "doubled_witness": w.as_dict(M)}
    return None


def _dedupe(lattices: list[Lattice]) -> list[Lattice]:
    out: list[Lattice] = []
    for L in lattices:
        if not any(M.n == L.n and len(M.covers) == len(L.covers) and find_isomorphism(M, L) for M in out):
            out.append(L)
    return out


def doubling_sequences(depth: int, principal: bool, max_size: int = 8) -> list[list[Lattice]]:
    """Lattices reachable from one element by ``k ≤ depth`` doublings,
    grouped by ``k`` and deduplicated up to isomorphism.

    ``principal`` restricts to principal order filters; otherwise every
    order-convex subset of lattices with at most ``max_size`` elements is used.
    """
    level = [Lattice(["0"], [])]
    levels = [level]
    for _ in range(depth):
        nxt = []
        for L in level:
            if principal:
                subsets = [tuple(bits(L.up[x])) for x in range(L.n)]
            elif L.n <= max_size:
                subsets = convex_subsets(L, max_size)
            else:
                continue
            nxt.extend(double(L, s).lattice for s in subsets)
        level = _dedupe(nxt)
        levels.append(level)
    return levels


# -- arrangements ------------------------------------------------------------------


def bineighborly_verdicts(A: Arrangement, c0) -> dict:
    P = A.chamber_poset(c0)
    L = try_lattice(P)
    return {
        "lattice": L is not None,
        "crosscut_simplicial": L is not None and is_crosscut_simplicial(L),
        "semidistributive": L is not None and is_semidistributive(L),
        "bineighborly": A.is_bineighborly(c0),
    }


def bineighborly_equivalence_violation(A: Arrangement) -> dict | None:
    """For every base chamber the three verdicts coincide."""
    for c0 in A.chambers():
        v = bineighborly_verdicts(A, c0)
        if not v["crosscut_simplicial"] == v["semidistributive"] == v["bineighborly"]:
            return {"base": sign_string(c0), **v}
    return None


def chamber_failures(A: Arrangement, c0) -> dict | None:
    """The first chamber breaking bineighborliness, with all of its failing
    upper-wall pairs."""
    found = A.bineighborly_violation(c0)
    if found is None:
        return None
    c = found[0]
    pairs = [[A.label(h), A.label(k)] for d, h, k in A.bineighborly_failures(c0) if d == c]
    return {"chamber": sign_string(c), "pairs": pairs}


def _deletions(A: Arrangement) -> list[tuple[int, list[int], Arrangement]]:
    if len(A) < 2:
        return []
    out = []
    for h in range(len(A)):
        keep = [i for i in range(len(A)) if i != h]
        out.append((h, keep, A.subarrangement(keep)))
    return out


def chamber_poset_violation(A: Arrangement, c0, deletions=None) -> dict | None:
    """The five structural facts about ``P(A, c0)``: antipodal involution,
    grading by separation size, incidence realised by a separation set,
    the wall criterion for the antipode, and order-preserving restriction to
    each sub-arrangement missing one hyperplane."""
    c0 = tuple(c0)
    base = sign_string(c0)
    chambers = A.chamber_order(c0)
    P = A.chamber_poset(c0)
    index = {c: i for i, c in enumerate(chambers)}
    everything = frozenset(range(len(A)))
    seps = {c: separation(c0, c) for c in chambers}

    for c in chambers:
        d = negate(c)
        if d not in index or d == c:
            return {"base": base, "property": "antipode", "chamber": sign_string(c)}
        if seps[c] & seps[d] or seps[c] | seps[d] != everything:
            return {"base": base, "property": "antipode-split", "chamber": sign_string(c)}
    for c, e in combinations(chambers, 2):
        if P.leq(index[c], index[e]) != P.leq(index[negate(e)], index[negate(c)]):
            return {"base": base, "property": "order-reversing", "pair": [sign_string(c), sign_string(e)]}

    ranks = P.rank_function()
    if ranks is None or any(ranks[index[c]] != len(seps[c]) for c in chambers):
        return {"base": base, "property": "graded"}

    all_seps = {c: {separation(c, e): e for e in chambers} for c in chambers}
    flats = A.flats()
    for c in chambers:
        for X in flats:
            if A.incident(c, X) and X not in all_seps[c]:
                return {"base": base, "property": "incidence", "chamber": sign_string(c), "flat": sorted(X)}
        walls = frozenset(A.walls(c))
        for sep, e in all_seps[c].items():
            if walls <= sep and e != negate(c):
                return {"base": base, "property": "walls", "pair": [sign_string(c), sign_string(e)]}

    for h, keep, sub in _deletions(A) if deletions is None else deletions:
        r0 = A.restrict(keep, c0)
        Q = sub.chamber_poset(r0)
        qi = {c: i for i, c in enumerate(sub.chamber_order(r0))}
        image = [qi.get(A.restrict(keep, c)) for c in chambers]
        if None in image:
            return {"base": base, "property": "restriction", "dropped": A.label(h)}
        for a, b in P.covers:
            if not Q.leq(image[a], image[b]):
                return {"base": base, "property": "restriction", "dropped": A.label(h)}
    return None


def chamber_poset_violation_all(A: Arrangement) -> dict | None:
    deletions = _deletions(A)
    for c0 in A.chambers():
        w = chamber_poset_violation(A, c0, deletions)
        if w:
            return w
    return None
