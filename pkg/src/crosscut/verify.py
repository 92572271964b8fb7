"""Data-driven property suites and the report format.

A suite is a list of manifest rows ``(subjects, property, expected)``.
``subjects`` names a subject set (or a single subject reference), and
``property`` names a registered check.  Running a suite yields one
:class:`PropertyReport` per (subject, property) pair, in manifest order.

Subject references are strings:

* ``catalog:NAME`` or ``catalog:NAME:N`` for catalog entries;
* ``enum:N:K`` for the ``K``-th enumerated lattice with ``N`` elements;
* ``braid4:I,J,…`` for the sub-arrangement of ``braid(4)`` on those normals;
* ``random:SEED:K`` for the ``K``-th seeded random arrangement.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable

from . import catalog, checks
from .arrangement import Arrangement, parse_signs
from .congruence import congruence_normal_violation, is_congruence_normal, quotient
from .errors import CrosscutError, GuardExceeded, InvalidInput, SearchBudgetExceeded, TooLarge
from .labelling import SB, sb_violation, search_sb
from .lattice import (
    Lattice,
    crosscut_simplicial_violation,
    distributive_violation,
    is_crosscut_simplicial,
    is_distributive,
    join_sd_violation,
    meet_sd_violation,
    semidistributive_violation,
)
from .poset import is_isomorphic

HOLDS, FAILS, UNVERIFIED = "holds", "fails", "unverified"
DEFAULT_SEED = 7
RANDOM_ARRANGEMENTS = 20
SB_MAX_LABELS = 4
SB_NODE_LIMIT = 10**7


@dataclass
class PropertyReport:
    subject: str
    property: str
    verdict: str
    witness: Any = None
    expected: str | None = None
    seconds: float | None = field(default=None, compare=False)

    @property
    def as_expected(self) -> bool:
        return self.expected is None or self.verdict == self.expected

    def to_json(self, timing: bool = False) -> dict:
        out = {"subject": self.subject, "property": self.property, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.expected is not None:
            out["expected"] = self.expected
        if timing and self.seconds is not None:
            out["seconds"] = round(self.seconds, 4)
        return out


# -- subjects ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _braid4() -> Arrangement:
    return catalog.braid(4)


@lru_cache(maxsize=None)
def _random(seed: int) -> tuple[Arrangement, ...]:
    return tuple(catalog.random_arrangements(seed, RANDOM_ARRANGEMENTS))


@lru_cache(maxsize=None)
def _enumerated(n: int) -> tuple[Lattice, ...]:
    return tuple(catalog.enumerate_lattices(n))


def resolve(ref: str):
    """Build the object named by a subject reference."""
    kind, _, rest = ref.partition(":")
    parts = rest.split(":") if rest else []
    try:
        if kind == "catalog" and parts:
            return catalog.named(parts[0], *parts[1:])
        if kind == "enum" and len(parts) == 2:
            return _enumerated(int(parts[0]))[int(parts[1])]
        if kind == "braid4" and len(parts) == 1:
            return _braid4().subarrangement(int(i) for i in parts[0].split(","))
        if kind == "random" and len(parts) == 2:
            return _random(int(parts[0]))[int(parts[1])]
    except CrosscutError:
        raise
    except (ValueError, IndexError):
        pass
    raise InvalidInput(f"cannot resolve subject reference {ref!r}")


def _lattice_fixture_refs() -> list[str]:
    return [
        "catalog:boolean:3", "catalog:chain:4", "catalog:M3", "catalog:N5",
        "catalog:hexagon", "catalog:fig1_left", "catalog:fig1_right", "catalog:fig3",
        "catalog:fig4", "catalog:fig6_final", "catalog:weak_order:3",
        "catalog:weak_order:4", "catalog:tamari:3", "catalog:tamari:4",
    ]


def _enum_refs(max_n: int) -> list[str]:
    return [f"enum:{n}:{k}" for n in range(1, max_n + 1) for k in range(len(_enumerated(n)))]


def _arrangement_refs(seed: int) -> list[str]:
    refs = [
        "braid4:" + ",".join(map(str, s)) for k in range(1, 7) for s in combinations(range(6), k)
    ]
    refs += ["catalog:fig2", "catalog:prism4"]
    refs += [f"random:{seed}:{k}" for k in range(RANDOM_ARRANGEMENTS)]
    return refs


SUBJECT_SETS: dict[str, Callable[[int], list[str]]] = {
    "lattices": lambda seed: _lattice_fixture_refs() + _enum_refs(6),
    "small-lattices": lambda seed: _enum_refs(6),
    "tiny-lattices": lambda seed: _enum_refs(5),
    "arrangements": _arrangement_refs,
}


def expand(subjects: str, seed: int) -> list[str]:
    if subjects in SUBJECT_SETS:
        return SUBJECT_SETS[subjects](seed)
    return [subjects]


# -- properties --------------------------------------------------------------------

Check = Callable[[Any], tuple[bool, Any]]


def _from_violation(fn) -> Check:
    def run(obj):
        w = fn(obj)
        return w is None, w

    return run


def _named_witness(fn) -> Check:
    def run(L):
        w = fn(L)
        return w is None, None if w is None else w.as_dict(L)

    return run


def _lattice_check(obj) -> tuple[bool, Any]:
    if isinstance(obj, Lattice):
        return True, None
    try:
        Lattice.from_poset(obj)
        return True, None
    except InvalidInput as exc:
        witness = {"reason": str(exc)}
        pair = getattr(exc, "pair", None)
        if pair is not None:
            witness["pair"] = [obj.names[i] for i in pair]
            witness["bounds"] = [obj.names[i] for i in exc.bounds]
        return False, witness


def _sb_labelling(name: str) -> Check:
    def run(L):
        if name == "b2":
            lab = {
                (L.elem("0"), L.elem("a")): 1, (L.elem("0"), L.elem("b")): 2,
                (L.elem("a"), L.elem("1")): 2, (L.elem("b"), L.elem("1")): 1,
            }
        else:
            lab = catalog.fig3_labelling(L)
        v = sb_violation(L, lab, SB)
        return v is None, None if v is None else v.as_dict(L)

    return run


def _sb_none(max_labels: int) -> Check:
    def run(L):
        found = search_sb(L, max_labels, SB, node_limit=SB_NODE_LIMIT)
        if found is None:
            return True, None
        return False, {"labels": sorted([[L.names[a], L.names[b]], ell] for (a, b), ell in found.items())}

    return run


def _sb_implies_cs(L) -> tuple[bool, Any]:
    found = search_sb(L, SB_MAX_LABELS, SB, node_limit=SB_NODE_LIMIT)
    if found is None or is_crosscut_simplicial(L):
        return True, None
    return False, crosscut_simplicial_violation(L).as_dict(L)


def _congruence_count(expected: int) -> Check:
    def run(L):
        n = checks.congruence_count(L)
        return n == expected, None if n == expected else {"congruences": n}

    return run


def _top_crosscut_path(L) -> tuple[bool, Any]:
    shape = checks.top_crosscut_shape(L)
    ok = shape["pure"] and not shape["boundary"] and not shape["full"]
    return ok, None if ok else shape


def _bineighborly_at(signs: str) -> Check:
    def run(A):
        w = checks.chamber_failures(A, parse_signs(signs))
        return w is None, w

    return run


def _doubling_sequences(principal: bool, depth: int) -> Check:
    def run(_):
        test = is_distributive if principal else is_congruence_normal
        for k, level in enumerate(checks.doubling_sequences(depth, principal)):
            for L in level:
                if not test(L):
                    return False, {"depth": k, "covers": [[L.names[a], L.names[b]] for a, b in L.covers]}
        return True, None

    return run


def _fig6_sequence(L) -> tuple[bool, Any]:
    seq = catalog.fig6_doublings()
    if not is_isomorphic(seq[-1], L):
        return False, {"sizes": [M.n for M in seq], "reason": "last doubling differs"}
    bad = [M.n for M in seq if not is_congruence_normal(M)]
    return not bad, {"not_congruence_normal": bad} if bad else None


def _fig4_quotient(L) -> tuple[bool, Any]:
    Q, _ = quotient(L, catalog.fig4_congruence(L))
    ok = Q.n == 15 and is_isomorphic(Q, catalog.fig6_final())
    return ok, None if ok else {"quotient_size": Q.n}


def _weak_order_chambers(A) -> tuple[bool, Any]:
    P = A.chamber_poset(catalog.braid_fundamental(4))
    ok = P.n == 24 and is_isomorphic(P, catalog.weak_order(4))
    return ok, None if ok else {"chambers": P.n}


PROPERTIES: dict[str, Check] = {
    "lattice": _lattice_check,
    "crosscut-simplicial": _named_witness(crosscut_simplicial_violation),
    "meet-sd": _named_witness(meet_sd_violation),
    "join-sd": _named_witness(join_sd_violation),
    "sd": _named_witness(semidistributive_violation),
    "distributive": _named_witness(distributive_violation),
    "congruence-normal": _named_witness(congruence_normal_violation),
    "crosscut-euler": _from_violation(checks.crosscut_euler_violation),
    "meet-sd-crosscut": _from_violation(checks.meet_sd_crosscut_violation),
    "join-sd-crosscut": _from_violation(checks.join_sd_crosscut_violation),
    "sd-mobius": _from_violation(checks.sd_mobius_violation),
    "top-crosscut-pure-not-sphere": _top_crosscut_path,
    "quotient-crosscut": _from_violation(checks.quotient_crosscut_violation),
    "con-distributive": _from_violation(checks.congruence_lattice_violation),
    "congruence-count=4": _congruence_count(4),
    "congruence-count=5": _congruence_count(5),
    "fig4-quotient": _fig4_quotient,
    "doubling-classifier": _from_violation(checks.doubling_classifier_violation),
    "doubling-preservation": _from_violation(checks.doubling_preservation_violation),
    "principal-doublings-distributive": _doubling_sequences(True, 4),
    "convex-doublings-normal": _doubling_sequences(False, 4),
    "doubling-sequence": _fig6_sequence,
    "sb-labelling:b2": _sb_labelling("b2"),
    "sb-labelling:fig3": _sb_labelling("fig3"),
    "sb-none<=3": _sb_none(3),
    "sb-implies-crosscut": _sb_implies_cs,
    "bineighborly-equivalence": _from_violation(checks.bineighborly_equivalence_violation),
    "chamber-poset": _from_violation(checks.chamber_poset_violation_all),
    "bineighborly@++++": _bineighborly_at("++++"),
    "weak-order-chambers": _weak_order_chambers,
}

LATTICE_PROPERTIES = ("lattice", "crosscut-simplicial", "meet-sd", "join-sd", "sd", "congruence-normal")

# -- suites ------------------------------------------------------------------------

Row = tuple[str, str, str]

SUITES: dict[str, list[Row]] = {
    "crosscut": [
        ("lattices", "crosscut-euler", HOLDS),
    ],
    "semidistributive": [
        ("lattices", "meet-sd-crosscut", HOLDS),
        ("catalog:fig1_left", "crosscut-simplicial", HOLDS),
        ("catalog:fig1_right", "crosscut-simplicial", FAILS),
        ("lattices", "join-sd-crosscut", HOLDS),
        ("catalog:fig1_right", "top-crosscut-pure-not-sphere", HOLDS),
        ("lattices", "sd-mobius", HOLDS),
    ],
    "arrangements": [
        ("arrangements", "bineighborly-equivalence", HOLDS),
        ("catalog:prism4", "bineighborly@++++", FAILS),
        ("arrangements", "chamber-poset", HOLDS),
        ("catalog:braid:4", "weak-order-chambers", HOLDS),
    ],
    "congruences": [
        ("small-lattices", "quotient-crosscut", HOLDS),
        ("small-lattices", "con-distributive", HOLDS),
        ("catalog:N5", "congruence-count=5", HOLDS),
        ("catalog:boolean:2", "congruence-count=4", HOLDS),
        ("catalog:fig4", "fig4-quotient", HOLDS),
    ],
    "doubling": [
        ("tiny-lattices", "doubling-classifier", HOLDS),
        ("tiny-lattices", "doubling-preservation", HOLDS),
        ("catalog:chain:1", "principal-doublings-distributive", HOLDS),
        ("catalog:chain:1", "convex-doublings-normal", HOLDS),
        ("catalog:fig6_final", "doubling-sequence", HOLDS),
    ],
    "sb": [
        ("catalog:boolean:2", "sb-labelling:b2", HOLDS),
        ("catalog:M3", "sb-none<=3", HOLDS),
        ("lattices", "sb-implies-crosscut", HOLDS),
        ("catalog:fig3", "sb-labelling:fig3", FAILS),
    ],
}
SUITES["all"] = [row for name in list(SUITES) for row in SUITES[name]]


def evaluate(ref: str, prop: str, obj=None, expected: str | None = None) -> PropertyReport:
    """Run one property on one subject, turning guard trips into
    ``unverified`` verdicts."""
    start = time.perf_counter()
    try:
        if obj is None:
            obj = resolve(ref)
        ok, witness = PROPERTIES[prop](obj)
        verdict = HOLDS if ok else FAILS
    except (GuardExceeded, SearchBudgetExceeded, TooLarge) as exc:
        verdict, witness = UNVERIFIED, {"reason": str(exc)}
    return PropertyReport(ref, prop, verdict, witness, expected, time.perf_counter() - start)


def run_suite(name: str, seed: int = DEFAULT_SEED, threads: int = 1) -> list[PropertyReport]:
    if name not in SUITES:
        raise InvalidInput(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    tasks = [(ref, prop, exp) for subjects, prop, exp in SUITES[name] for ref in expand(subjects, seed)]
    if threads <= 1:
        return [evaluate(ref, prop, expected=exp) for ref, prop, exp in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda t: evaluate(t[0], t[1], expected=t[2]), tasks))


def suite_report(name: str, reports: list[PropertyReport], seed: int, timing: bool = False) -> dict:
    counts = {HOLDS: 0, FAILS: 0, UNVERIFIED: 0}
    for r in reports:
        counts[r.verdict] += 1
    return {
        "suite": name,
        "seed": seed,
        "reports": [r.to_json(timing) for r in reports],
        "summary": {**counts, "unexpected": sum(not r.as_expected for r in reports)},
    }
