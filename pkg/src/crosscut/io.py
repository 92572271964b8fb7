"""JSON reading and writing for posets, complexes, labellings, congruences
and arrangements.

Writers are canonical: elements and covers are sorted by name, and
:func:`dumps` sorts keys, so equal objects serialise to identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .arrangement import Arrangement
from .congruence import Congruence
from .errors import InvalidInput
from .lattice import Lattice
from .poset import FinitePoset
from .simplicial import SimplicialComplex


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    except OSError as exc:
        raise InvalidInput(f"{path}: {exc.strerror}") from None


def _require(data, key: str, kind: type):
    if not isinstance(data, Mapping) or key not in data:
        raise InvalidInput(f"expected an object with a {key!r} field")
    value = data[key]
    if not isinstance(value, kind):
        raise InvalidInput(f"field {key!r} must be a {kind.__name__}")
    return value


# -- posets --------------------------------------------------------------------


def poset_to_json(p: FinitePoset) -> dict:
    return {
        "elements": sorted(p.names),
        "covers": sorted([p.names[a], p.names[b]] for a, b in p.covers),
    }


def poset_from_json(data: Mapping) -> FinitePoset:
    elements = _require(data, "elements", list)
    covers = _require(data, "covers", list)
    for c in covers:
        if not (isinstance(c, list) and len(c) == 2):
            raise InvalidInput(f"cover {c!r} must be a two-element list")
    return FinitePoset.from_covers([str(e) for e in elements], [tuple(c) for c in covers])


def lattice_from_json(data: Mapping) -> Lattice:
    p = poset_from_json(data)
    return Lattice.from_poset(p)


# -- complexes -------------------------------------------------------------------


def complex_to_json(c: SimplicialComplex, label=str) -> dict:
    return c.to_json(label)


def complex_from_json(data: Mapping) -> SimplicialComplex:
    vertices = _require(data, "vertices", list)
    facets = _require(data, "facets", list)
    return SimplicialComplex(vertices, facets)


# -- labellings --------------------------------------------------------------------


def labelling_to_json(L: FinitePoset, labels: Mapping[tuple[int, int], Any]) -> dict:
    rows = [[[L.names[a], L.names[b]], str(lab)] for (a, b), lab in labels.items()]
    return {"labels": sorted(rows)}


def labelling_from_json(L: FinitePoset, data: Mapping) -> dict[tuple[int, int], str]:
    out = {}
    for row in _require(data, "labels", list):
        if not (isinstance(row, list) and len(row) == 2 and isinstance(row[0], list) and len(row[0]) == 2):
            raise InvalidInput(f"label entry {row!r} must be [[x, y], label]")
        (a, b), lab = row
        pair = (L.elem(str(a)), L.elem(str(b)))
        if not L.covers_pair(*pair):
            raise InvalidInput(f"{a} ⋖ {b} is not a cover")
        out[pair] = str(lab)
    return out


# -- congruences -------------------------------------------------------------------


def congruence_to_json(theta: Congruence) -> dict:
    return theta.to_json()


def congruence_from_json(L: Lattice, data: Mapping) -> Congruence:
    blocks = _require(data, "blocks", list)
    return Congruence.from_blocks(L, [[str(x) for x in b] for b in blocks])


# -- arrangements ---------------------------------------------------------------------


def arrangement_to_json(A: Arrangement) -> dict:
    return A.to_json()


def arrangement_from_json(data: Mapping) -> Arrangement:
    normals = _require(data, "normals", list)
    dim = data.get("dim")
    if dim is not None and not isinstance(dim, int):
        raise InvalidInput("field 'dim' must be an integer")
    for v in normals:
        if not isinstance(v, list):
            raise InvalidInput(f"normal {v!r} must be a list")
        for a in v:
            if isinstance(a, bool) or not isinstance(a, (int, str)):
                raise InvalidInput(f"coordinate {a!r} must be an integer or a 'p/q' string")
    try:
        return Arrangement(normals, dim=dim)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidInput(f"bad rational in normals: {exc}") from None


def to_json(obj) -> dict:
    """Serialise any supported object by type."""
    if isinstance(obj, FinitePoset):
        return poset_to_json(obj)
    if isinstance(obj, SimplicialComplex):
        return complex_to_json(obj)
    if isinstance(obj, Congruence):
        return congruence_to_json(obj)
    if isinstance(obj, Arrangement):
        return arrangement_to_json(obj)
    raise InvalidInput(f"cannot serialise {type(obj).__name__}")

