"""Command-line surface.

Targets are a spec file path, ``zn:<n>`` for the ideal lattice of Z_n, or
``prod:<m>,<n>`` for the ideal lattice of Z_m x Z_n. Exit codes: 0 for pass,
1 for a property failure (witnesses printed), 2 for input or axiom errors.
``validate`` is the exception by design: there an axiom violation is the
property under test, so it exits 1 and only unreadable input exits 2.
"""

from __future__ import annotations

import argparse
import sys

from .classify import (
    MClosedSet,
    NotMClosed,
    NotXMultClosed,
    downset_m_closed,
    jacobson_downset,
    nil_downset,
    zero_divisor_set,
)
from .dot import hasse_dot
from .lemmas import lemma_suite
from .multiplicative import (
    AxiomViolation,
    DegenerateLattice,
    MultiplicativeLattice,
    TopJoinReducible,
)
from .order import CycleError, NotALattice
from .report import classify_lattice, render_report, report_to_json
from .ringbridge import (
    CrossValidationMismatch,
    cross_validate_product,
    cross_validate_zn,
    ideal_lattice_product,
    ideal_lattice_zn,
)
from .search import PROPERTIES, parse_corpus_spec, search_corpus
from .specfile import ParseError, load_path

_STRUCTURE_ERRORS = (
    CycleError,
    NotALattice,
    AxiomViolation,
    TopJoinReducible,
    NotMClosed,
    NotXMultClosed,
    DegenerateLattice,
)


def resolve_target(target: str) -> tuple[MultiplicativeLattice, dict[str, MClosedSet]]:
    if target.startswith("zn:"):
        return ideal_lattice_zn(_parse_int(target[3:], target))[0], {}
    if target.startswith("prod:"):
        parts = target[5:].split(",")
        if len(parts) != 2:
            raise ValueError(f"bad target {target!r}: expected prod:M,N")
        m, n = (_parse_int(p, target) for p in parts)
        return ideal_lattice_product(m, n)[0], {}
    return load_path(target)


def _parse_int(s: str, target: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise ValueError(f"bad target {target!r}: {s!r} is not an integer") from None


def resolve_xset(
    M: MultiplicativeLattice, named: dict[str, MClosedSet], arg: str
) -> MClosedSet:
    if arg in named:
        return named[arg]
    if arg == "zdiv":
        return zero_divisor_set(M)
    if arg == "nil":
        return nil_downset(M)
    if arg == "jrad":
        return jacobson_downset(M)
    if arg.startswith("downset:"):
        label = arg.split(":", 1)[1]
        try:
            return downset_m_closed(M, M.lattice.index_of(label))
        except ValueError:
            raise ValueError(f"unknown element label {label!r}") from None
    raise ValueError(
        f"unknown set {arg!r}: expected a declared set name, zdiv, nil, jrad "
        f"or downset:<label>"
    )


def cmd_validate(args) -> int:
    try:
        M, named = load_path(args.file)
    except _STRUCTURE_ERRORS as exc:
        print(f"invalid: {exc}")
        return 1
    print(f"ok: {M.name} is a multiplicative lattice "
          f"({M.size} elements, {len(named)} named sets)")
    return 0


def cmd_classify(args) -> int:
    M, named = resolve_target(args.target)
    xsets = tuple(resolve_xset(M, named, a) for a in args.x)
    report = classify_lattice(M, xsets)
    print(report_to_json(report) if args.json else render_report(report))
    return 0


def cmd_verify(args) -> int:
    M, named = resolve_target(args.target)
    xsets = list(named.values())
    xsets.extend(resolve_xset(M, named, a) for a in args.x)
    report = lemma_suite(M, tuple(xsets))
    print(report.render())
    return 0 if report.passed else 1


def cmd_cross_validate(args) -> int:
    target = args.target
    try:
        if target.startswith("zn:"):
            report = cross_validate_zn(_parse_int(target[3:], target))
        elif target.startswith("prod:"):
            parts = target[5:].split(",")
            if len(parts) != 2:
                raise ValueError(f"bad target {target!r}: expected prod:M,N")
            report = cross_validate_product(*(_parse_int(p, target) for p in parts))
        else:
            raise ValueError("cross-validate takes zn:<n> or prod:<m>,<n>")
    except CrossValidationMismatch as exc:
        print(f"MISMATCH: {exc}")
        return 1
    print(report.render())
    return 0


def cmd_search(args) -> int:
    def instances():
        for spec in args.corpus:
            yield from parse_corpus_spec(spec)

    hits = search_corpus(instances(), args.find)
    for hit in hits:
        print(hit.render())
    if not hits:
        print(f"no instance with {args.find} in {' '.join(args.corpus)}")
        return 1
    print(f"{len(hits)} instance(s) found")
    return 0


def cmd_dot(args) -> int:
    M, named = resolve_target(args.target)
    xsets = tuple(resolve_xset(M, named, a) for a in args.x)
    sys.stdout.write(hasse_dot(M, xsets))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multlat",
        description="finite multiplicative lattices: validation, element "
        "classification, executable property checks, ring cross-validation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the lattice and multiplication axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="per-element classification report")
    p.add_argument("target", help="spec file, zn:<n> or prod:<m>,<n>")
    p.add_argument("--x", action="append", default=[], metavar="SET",
                   help="extra M-closed set: declared name, zdiv, nil, jrad or downset:<label>")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the full property suite L1..L16")
    p.add_argument("target")
    p.add_argument("--x", action="append", default=[], metavar="SET")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cross-validate", help="ring-side vs lattice-side r/n/J classification")
    p.add_argument("target", help="zn:<n> or prod:<m>,<n>")
    p.set_defaults(func=cmd_cross_validate)

    p = sub.add_parser("search", help="scan a corpus for instances exhibiting a property")
    p.add_argument("--corpus", action="append", default=None, metavar="SPEC",
                   help="zn:A..B, zn:N, prod:M,N or chain:A..B (repeatable; default zn:2..200)")
    p.add_argument("--find", required=True, choices=PROPERTIES)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dot", help="Hasse diagram in DOT format")
    p.add_argument("target")
    p.add_argument("--x", action="append", default=[], metavar="SET",
                   help="mark the X-elements of this set")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "search" and args.corpus is None:
        args.corpus = ["zn:2..200"]
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _STRUCTURE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
