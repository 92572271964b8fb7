"""Command-line interface: ``crosscut <subcommand> …``.

Every subcommand prints one JSON document on stdout.  Exit status is 0 when
all reported verdicts hold, 1 when some property fails, and 2 for usage or
input errors (reported as ``{"error": {"type": …, "message": …}}``).

Wherever a lattice or arrangement file is expected, a subject reference such
as ``catalog:N5`` or ``catalog:braid:3`` may be given instead of a path.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, io, verify
from .arrangement import Arrangement, parse_signs, sign_string, witness_dict
from .congruence import principal_congruence, quotient
from .doubling import double
from .errors import CrosscutError, InvalidInput
from .labelling import SB, VARIANTS, search_sb
from .lattice import Lattice
from .poset import FinitePoset

OK, FAILED, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def _is_ref(text: str) -> bool:
    return ":" in text and not Path(text).exists()


def load_poset(source: str) -> FinitePoset:
    if _is_ref(source):
        obj = verify.resolve(source)
        if not isinstance(obj, FinitePoset):
            raise InvalidInput(f"{source} is not a poset")
        return obj
    return io.poset_from_json(io.read_json(source))


def load_lattice(source: str) -> Lattice:
    p = load_poset(source)
    return p if isinstance(p, Lattice) else Lattice.from_poset(p)


def load_arrangement(source: str) -> Arrangement:
    if _is_ref(source):
        obj = verify.resolve(source)
        if not isinstance(obj, Arrangement):
            raise InvalidInput(f"{source} is not an arrangement")
        return obj
    return io.arrangement_from_json(io.read_json(source))


def _pair(text: str) -> tuple[str, str]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise InvalidInput(f"expected two comma-separated element names, got {text!r}")
    return parts[0], parts[1]


def _base(A: Arrangement, text: str):
    if text == "auto":
        return A.chambers()[0]
    c = parse_signs(text)
    if len(c) != len(A) or not A.is_chamber(c):
        raise InvalidInput(f"{text} is not a chamber of the arrangement")
    return c


# -- subcommands -----------------------------------------------------------------


def cmd_check(args) -> tuple[dict, int]:
    p = load_poset(args.file)
    props = verify.LATTICE_PROPERTIES if args.property == "all" else (args.property,)
    reports = []
    lattice_ok, witness = verify.PROPERTIES["lattice"](p)
    L = Lattice.from_poset(p) if lattice_ok and not isinstance(p, Lattice) else p
    for prop in props:
        if prop == "lattice":
            reports.append(verify.PropertyReport(args.file, prop, verify.HOLDS if lattice_ok else verify.FAILS, witness))
        elif not lattice_ok:
            reports.append(verify.PropertyReport(args.file, prop, verify.UNVERIFIED, {"reason": "not a lattice"}))
        else:
            reports.append(verify.evaluate(args.file, prop, obj=L))
    code = OK if all(r.verdict == verify.HOLDS for r in reports) else FAILED
    return {"subject": args.file, "reports": [r.to_json() for r in reports]}, code


def cmd_mobius(args) -> tuple[dict, int]:
    p = load_poset(args.file)
    if args.interval:
        x, y = _pair(args.interval)
        return {"interval": [x, y], "mobius": p.mobius(x, y)}, OK
    rows = [
        [p.names[x], p.names[y], p.mobius(x, y)]
        for x in range(p.n)
        for y in range(p.n)
        if p.leq(x, y)
    ]
    out: dict = {"mobius": sorted(rows)}
    if p.bounds() is not None:
        out["bottom_top"] = p.mobius(p.bottom, p.top)
    return out, OK


def cmd_crosscut(args) -> tuple[dict, int]:
    L = load_lattice(args.file)
    if args.interval:
        x, y = (L.elem(s) for s in _pair(args.interval))
    else:
        x, y = L.bottom, L.top
    gamma = L.crosscut_complex(x, y)
    return {
        "interval": [L.names[x], L.names[y]],
        "complex": gamma.to_json(L.name_of),
        "reduced_euler": gamma.reduced_euler(),
        "mobius": L.mobius(x, y),
    }, OK


def cmd_quotient(args) -> tuple[dict, int]:
    L = load_lattice(args.file)
    x, y = _pair(args.collapse)
    theta = principal_congruence(L, x, y)
    Q, _ = quotient(L, theta)
    return {**io.poset_to_json(Q), "congruence": theta.to_json()["blocks"]}, OK


def cmd_double(args) -> tuple[dict, int]:
    L = load_lattice(args.file)
    subset = [s.strip() for s in args.subset.split(",") if s.strip()]
    return io.poset_to_json(double(L, subset).lattice), OK


def cmd_chambers(args) -> tuple[dict, int]:
    A = load_arrangement(args.arrangement)
    c0 = _base(A, args.base)
    out = {
        "base": sign_string(c0),
        "chambers": [sign_string(c) for c in A.chamber_order(c0)],
        "hyperplanes": [A.label(i) for i in range(len(A))],
    }
    if args.poset:
        out["poset"] = io.poset_to_json(A.chamber_poset(c0))
    return out, OK


def cmd_bineighborly(args) -> tuple[dict, int]:
    A = load_arrangement(args.arrangement)
    c0 = _base(A, args.base)
    failures = A.bineighborly_failures(c0)
    report = verify.PropertyReport(
        args.arrangement,
        "bineighborly",
        verify.FAILS if failures else verify.HOLDS,
        witness_dict(A, failures[0]) if failures else None,
    )
    out = {"base": sign_string(c0), "report": report.to_json()}
    if failures:
        out["failures"] = [witness_dict(A, f) for f in failures]
    return out, FAILED if failures else OK


def cmd_catalog(args) -> tuple[dict, int]:
    obj = catalog.named(args.name, *args.params)
    data = io.to_json(obj)
    if args.out:
        Path(args.out).write_text(io.dumps(data), encoding="utf-8")
        return {"name": args.name, "params": args.params, "written": args.out}, OK
    return data, OK


def cmd_sb_search(args) -> tuple[dict, int]:
    L = load_lattice(args.file)
    found = search_sb(L, args.max_labels, args.variant, node_limit=args.node_limit)
    report = verify.PropertyReport(
        args.file,
        f"{args.variant}-labelling<={args.max_labels}",
        verify.HOLDS if found else verify.FAILS,
        io.labelling_to_json(L, found) if found else {"reason": "search space exhausted"},
    )
    return {"report": report.to_json()}, OK if found else FAILED


def cmd_verify(args) -> tuple[dict, int]:
    reports = verify.run_suite(args.suite, seed=args.seed, threads=args.threads)
    data = verify.suite_report(args.suite, reports, args.seed, timing=args.timing)
    code = OK if data["summary"]["unexpected"] == 0 else FAILED
    if args.out:
        Path(args.out).write_text(io.dumps(data), encoding="utf-8")
    return data, code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="crosscut", description="Exact checks for finite lattices and arrangements.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="evaluate lattice properties")
    p.add_argument("file")
    p.add_argument("--property", default="all", choices=("all",) + verify.LATTICE_PROPERTIES)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("mobius", help="Möbius function table or one interval")
    p.add_argument("file")
    p.add_argument("--interval")
    p.set_defaults(run=cmd_mobius)

    p = sub.add_parser("crosscut", help="crosscut complex of an interval")
    p.add_argument("file")
    p.add_argument("--interval")
    p.set_defaults(run=cmd_crosscut)

    p = sub.add_parser("quotient", help="quotient by the congruence generated by x ≡ y")
    p.add_argument("file")
    p.add_argument("--collapse", required=True)
    p.set_defaults(run=cmd_quotient)

    p = sub.add_parser("double", help="double a lattice at an order-convex subset")
    p.add_argument("file")
    p.add_argument("--subset", required=True)
    p.set_defaults(run=cmd_double)

    p = sub.add_parser("chambers", help="chambers of an arrangement")
    p.add_argument("arrangement")
    p.add_argument("--base", default="auto")
    p.add_argument("--poset", action="store_true")
    p.set_defaults(run=cmd_chambers)

    p = sub.add_parser("bineighborly", help="test bineighborliness at a base chamber")
    p.add_argument("arrangement")
    p.add_argument("--base", default="auto")
    p.set_defaults(run=cmd_bineighborly)

    p = sub.add_parser("catalog", help="emit a named fixture as JSON")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.set_defaults(run=cmd_catalog)

    p = sub.add_parser("sb-search", help="search for an SB or SB' labelling")
    p.add_argument("file")
    p.add_argument("--variant", default=SB, choices=VARIANTS)
    p.add_argument("--max-labels", type=int, default=3)
    p.add_argument("--node-limit", type=int, default=verify.SB_NODE_LIMIT)
    p.set_defaults(run=cmd_sb_search)

    p = sub.add_parser("verify", help="run a named property suite")
    p.add_argument("suite", choices=tuple(verify.SUITES))
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include per-check seconds")
    p.add_argument("--out")
    p.set_defaults(run=cmd_verify)
    return parser


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
        data, code = args.run(args)
    except CrosscutError as exc:
        data = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        code = USAGE
    stdout.write(io.dumps(data))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
