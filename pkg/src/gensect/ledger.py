"""The base-case ledger: cited axioms the classification grounds out in.

Each entry records one case (r, n, d, g) whose twisted-normal-bundle
vanishing is taken as an axiom, together with a justification tag, the
cases it quotes as premises, any attached gluing data, and a citation
string carrying a verbatim quote of the statement it rests on.  The ledger
ships as a JSON data file and is part of the public contract; a single
flag on the command line swaps it out for fault-injection runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .numerology import BNIndex, rho

#: Tags whose entries are justified by a numeric gate alone.
AUTOMATIC_TAGS = frozenset({"Interpolation", "GenusTwo", "PlaneCurve"})

#: Tags whose entries rest on a bespoke geometric construction.
CONSTRUCTIVE_TAGS = frozenset(
    {"DelPezzo", "CubicScroll", "HyperplaneGlue", "PlaneCurveGlue", "SecantLineGlue"}
)

#: Auxiliary bases that only ever appear as rule premises.
AUXILIARY_TAGS = frozenset({"SkewLines"})

KNOWN_TAGS = AUTOMATIC_TAGS | CONSTRUCTIVE_TAGS | AUXILIARY_TAGS

#: Tags that carry hyperplane-gluing side conditions.
GLUE_CHECK_TAGS = frozenset({"HyperplaneGlue", "PlaneCurveGlue"})


@dataclass(frozen=True)
class GlueData:
    """Invariants of an attached curve: degree, genus, attachment points, twist."""

    d2: int
    g2: int
    points: int
    twist: int


@dataclass(frozen=True)
class LedgerEntry:
    """One base-case axiom.

    ``d`` and ``g`` of None match every degree and genus for the given
    (r, n); the two plane entries use this, since plane sections are
    handled uniformly.
    """

    id: str
    r: int
    n: int
    d: Optional[int]
    g: Optional[int]
    tag: str
    citation: str
    quote: str
    premises: tuple[tuple[int, int, int, int], ...] = ()
    glue: Optional[GlueData] = None
    rho_exempt: bool = False
    premises_stated_only: bool = False
    note: Optional[str] = None

    @property
    def is_wildcard(self) -> bool:
        return self.d is None or self.g is None

    def matches(self, r: int, n: int, d: int, g: int) -> bool:
        return (
            self.r == r
            and self.n == n
            and (self.d is None or self.d == d)
            and (self.g is None or self.g == g)
        )

    def case_key(self) -> tuple[int, int, Optional[int], Optional[int]]:
        return (self.r, self.n, self.d, self.g)


@dataclass
class Ledger:
    """An immutable-after-load collection of entries with lookup by case."""

    entries: tuple[LedgerEntry, ...]
    source: Optional[str] = None
    _by_id: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._by_id = {e.id: e for e in self.entries}
        if len(self._by_id) != len(self.entries):
            raise ValueError("duplicate ledger entry ids")

    def get(self, entry_id: str) -> LedgerEntry:
        return self._by_id[entry_id]

    def has(self, entry_id: str) -> bool:
        return entry_id in self._by_id

    def lookup(self, r: int, n: int, d: int, g: int) -> Optional[LedgerEntry]:
        """Exact-case entry if present, else a wildcard entry for (r, n)."""
        wildcard = None
        for entry in self.entries:
            if not entry.matches(r, n, d, g):
                continue
            if entry.is_wildcard:
                wildcard = wildcard or entry
            else:
                return entry
        return wildcard

    def invariant_problems(self) -> list[str]:
        """Structural violations: bad tags, empty quotes, rho < 0 without a flag."""
        problems = []
        for entry in self.entries:
            if entry.tag not in KNOWN_TAGS:
                problems.append(f"{entry.id}: unknown tag {entry.tag!r}")
            if not entry.quote.strip():
                problems.append(f"{entry.id}: empty quote")
            if not entry.citation.strip():
                problems.append(f"{entry.id}: empty citation")
            if not entry.is_wildcard and not entry.rho_exempt:
                value = rho(BNIndex(entry.r, entry.d, entry.g)) if entry.g >= 0 else -1
                if value < 0:
                    problems.append(
                        f"{entry.id}: rho < 0 for case {entry.case_key()} without exemption"
                    )
            if entry.glue is not None:
                d2, g2, pts = entry.glue.d2, entry.glue.g2, entry.glue.points
                for pr, pn, pd, pg in entry.premises:
                    if (pd + d2, pg + g2 + pts - 1) != (entry.d, entry.g):
                        problems.append(
                            f"{entry.id}: glue arithmetic does not reach the case from premise"
                        )
        return problems


def _entry_from_record(record: dict) -> LedgerEntry:
    case = record["case"]
    glue = record.get("glue")
    return LedgerEntry(
        id=record["id"],
        r=case["r"],
        n=case["n"],
        d=case["d"],
        g=case["g"],
        tag=record["tag"],
        citation=record["citation"],
        quote=record["quote"],
        premises=tuple(tuple(p) for p in record.get("premises", [])),
        glue=GlueData(**glue) if glue else None,
        rho_exempt=record.get("rho_exempt", False),
        premises_stated_only=record.get("premises_stated_only", False),
        note=record.get("note"),
    )


def load_ledger(path: Optional[str | Path] = None) -> Ledger:
    """Load the bundled ledger, or the JSON file at ``path`` if given."""
    if path is None:
        text = (
            resources.files("gensect").joinpath("data/ledger.json").read_text("utf-8")
        )
        source = "bundled"
    else:
        text = Path(path).read_text("utf-8")
        source = str(path)
    payload = json.loads(text)
    entries = tuple(_entry_from_record(rec) for rec in payload["entries"])
    return Ledger(entries=entries, source=source)
