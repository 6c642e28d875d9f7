"""Per-element classification reports with machine and text renderings.

The machine form is JSON with a fixed field order; parsing it back yields a
report equal to the original (the dump of the parse is byte-identical).
Every negative flag carries either a violating pair (re-checkable against
the definitions) or the note "improper" for the top element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .classify import (
    MClosedSet,
    is_x_element,
    jacobson_downset,
    nil_downset,
    x_witness,
    zero_divisor_set,
)
from .multiplicative import DegenerateLattice, MultiplicativeLattice


@dataclass(frozen=True)
class FlagResult:
    holds: bool
    witness: tuple[str, ...] | None = None
    note: str | None = None

    def render(self) -> str:
        if self.holds:
            return "yes"
        if self.note:
            return f"no [{self.note}]"
        if self.witness:
            return f"no [witness {', '.join(self.witness)}]"
        return "no"


@dataclass(frozen=True)
class ElementReport:
    element: str
    flags: dict[str, FlagResult]


@dataclass(frozen=True)
class LatticeSummary:
    maximal: tuple[str, ...]
    jacobson: str
    min_primes: tuple[str, ...]
    nilpotents: tuple[str, ...]
    zero_divisors: tuple[str, ...]
    radical_of_bottom: str
    local: bool
    domain: bool
    reduced: bool


@dataclass(frozen=True)
class ClassificationReport:
    name: str
    elements: tuple[str, ...]
    summary: LatticeSummary
    xsets: dict[str, tuple[str, ...]]
    rows: tuple[ElementReport, ...]


FLAG_ORDER = ("prime", "primary", "maximal", "r-element", "n-element", "j-element")


def classify_lattice(
    M: MultiplicativeLattice, xsets: tuple[MClosedSet, ...] = ()
) -> ClassificationReport:
    if M.size == 1:
        raise DegenerateLattice("classification needs a proper element")

    def labels_of(items) -> tuple[str, ...]:
        return tuple(M.label(i) for i in sorted(items))

    canonical = {
        "r-element": zero_divisor_set(M),
        "n-element": nil_downset(M),
        "j-element": jacobson_downset(M),
    }
    summary = LatticeSummary(
        maximal=labels_of(M.max_elements()),
        jacobson=M.label(M.jacobson()),
        min_primes=labels_of(M.min_primes()),
        nilpotents=labels_of(M.nilpotents()),
        zero_divisors=labels_of(M.zero_divisors()),
        radical_of_bottom=M.label(M.radical(M.bottom)),
        local=M.is_local(),
        domain=M.is_domain(),
        reduced=M.is_reduced(),
    )
    rows = []
    for i in range(M.size):
        flags: dict[str, FlagResult] = {}
        improper = i == M.top
        flags["prime"] = _flag(M, improper, M.prime_witness(i))
        flags["primary"] = _flag(M, improper, M.primary_witness(i))
        mw = M.maximal_witness(i)
        flags["maximal"] = _flag(M, improper, None if mw is None else (mw,))
        for flag_name, X in canonical.items():
            flags[flag_name] = _flag(M, improper, x_witness(M, X, i))
        for X in xsets:
            flags[f"x:{X.name}"] = _flag(M, improper, x_witness(M, X, i))
        rows.append(ElementReport(M.label(i), flags))
    return ClassificationReport(
        name=M.name,
        elements=M.labels,
        summary=summary,
        xsets={X.name: labels_of(X.members) for X in xsets},
        rows=tuple(rows),
    )


def _flag(M: MultiplicativeLattice, improper: bool, witness) -> FlagResult:
    if improper:
        return FlagResult(False, None, "improper")
    if witness is None:
        return FlagResult(True)
    return FlagResult(False, tuple(M.label(w) for w in witness))


# -- machine form ---------------------------------------------------------------


def report_to_dict(report: ClassificationReport) -> dict:
    def flag_dict(f: FlagResult) -> dict:
        out: dict = {"holds": f.holds}
        if f.witness is not None:
            out["witness"] = list(f.witness)
        if f.note is not None:
            out["note"] = f.note
        return out

    return {
        "name": report.name,
        "elements": list(report.elements),
        "summary": {
            "maximal": list(report.summary.maximal),
            "jacobson": report.summary.jacobson,
            "min_primes": list(report.summary.min_primes),
            "nilpotents": list(report.summary.nilpotents),
            "zero_divisors": list(report.summary.zero_divisors),
            "radical_of_bottom": report.summary.radical_of_bottom,
            "local": report.summary.local,
            "domain": report.summary.domain,
            "reduced": report.summary.reduced,
        },
        "xsets": {name: list(members) for name, members in report.xsets.items()},
        "rows": [
            {
                "element": row.element,
                "flags": {name: flag_dict(f) for name, f in row.flags.items()},
            }
            for row in report.rows
        ],
    }


def report_from_dict(data: dict) -> ClassificationReport:
    def flag_from(d: dict) -> FlagResult:
        witness = tuple(d["witness"]) if "witness" in d else None
        return FlagResult(d["holds"], witness, d.get("note"))

    s = data["summary"]
    return ClassificationReport(
        name=data["name"],
        elements=tuple(data["elements"]),
        summary=LatticeSummary(
            maximal=tuple(s["maximal"]),
            jacobson=s["jacobson"],
            min_primes=tuple(s["min_primes"]),
            nilpotents=tuple(s["nilpotents"]),
            zero_divisors=tuple(s["zero_divisors"]),
            radical_of_bottom=s["radical_of_bottom"],
            local=s["local"],
            domain=s["domain"],
            reduced=s["reduced"],
        ),
        xsets={name: tuple(members) for name, members in data["xsets"].items()},
        rows=tuple(
            ElementReport(
                row["element"],
                {name: flag_from(f) for name, f in row["flags"].items()},
            )
            for row in data["rows"]
        ),
    )


def report_to_json(report: ClassificationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2)


def report_from_json(text: str) -> ClassificationReport:
    return report_from_dict(json.loads(text))


def render_report(report: ClassificationReport) -> str:
    s = report.summary
    lines = [
        f"lattice {report.name} ({len(report.elements)} elements)",
        f"  maximal: {{{', '.join(s.maximal)}}}   jacobson: {s.jacobson}   "
        f"min primes: {{{', '.join(s.min_primes)}}}",
        f"  nilpotents: {{{', '.join(s.nilpotents)}}}   radical of bottom: {s.radical_of_bottom}",
        f"  zero divisors: {{{', '.join(s.zero_divisors)}}}",
        f"  local: {_yn(s.local)}   domain: {_yn(s.domain)}   reduced: {_yn(s.reduced)}",
    ]
    for name, members in report.xsets.items():
        lines.append(f"  set {name}: {{{', '.join(members)}}}")
    for row in report.rows:
        rendered = "  ".join(f"{name}={f.render()}" for name, f in row.flags.items())
        lines.append(f"  {row.element}: {rendered}")
    return "\n".join(lines)


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def check_report_witnesses(
    M: MultiplicativeLattice, xsets: tuple[MClosedSet, ...], report: ClassificationReport
) -> bool:
    """Re-check every recorded witness against the definition it violates."""
    label_index = {lbl: i for i, lbl in enumerate(M.labels)}
    named = {f"x:{X.name}": X for X in xsets}
    named["r-element"] = zero_divisor_set(M)
    named["n-element"] = nil_downset(M)
    named["j-element"] = jacobson_downset(M)
    for row in report.rows:
        i = label_index[row.element]
        for flag_name, f in row.flags.items():
            if f.holds or f.witness is None:
                continue
            w = tuple(label_index[lbl] for lbl in f.witness)
            if flag_name == "prime":
                a, b = w
                ok = M.leq(M.product(a, b), i) and not M.leq(a, i) and not M.leq(b, i)
            elif flag_name == "primary":
                a, b = w
                ok = (
                    M.leq(M.product(a, b), i)
                    and not M.leq(a, i)
                    and not M.leq(b, M.radical(i))
                )
            elif flag_name == "maximal":
                (between,) = w
                ok = M.lt(i, between) and between != M.top
            else:
                a, b = w
                X = named[flag_name]
                ok = M.leq(M.product(a, b), i) and a not in X and not M.leq(b, i)
            if not ok:
                return False
    return True
