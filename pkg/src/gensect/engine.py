"""The classification engine for hypersurface sections of general curves.

A query (r, n, d, g) asks whether a general degree-d genus-g curve in P^r
meets a general degree-n hypersurface in a general point configuration.
Only five pairs (r, n) admit an affirmative answer outside finitely many
(d, g): plane sections by lines and conics, space sections by planes and
quadrics, and hyperplane sections in P^4.  The engine classifies a query as
Invalid, Exceptional (one of the ten known counterexamples) or General, and
in the last case emits a derivation trace: a finite tree of rule
applications whose leaves are cited ledger axioms.

Rules mirror the inductive structure of the underlying argument:

* ``add_line``    - attach a general line at one point; degree drops by one
                    at fixed genus in the premise.
* ``add_canonical`` - attach a canonical space curve (degree 6, genus 4 at 5
                    points in P^3; degree 8, genus 5 at 6 points in P^4), so
                    the premise is (d-6, g-8) or (d-8, g-10).
* ``downgrade``   - a plane section of a space curve is general whenever its
                    quadric section is: links (3, 1) to (3, 2) at the same
                    (d, g).
* ``ledger``      - a cited base case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .ledger import (
    AUXILIARY_TAGS,
    CONSTRUCTIVE_TAGS,
    GLUE_CHECK_TAGS,
    Ledger,
    LedgerEntry,
    load_ledger,
)
from .numerology import BNIndex, rho

SUPPORTED_PAIRS = frozenset({(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)})

#: The exceptional (d, g) pairs per supported (r, n); these are axioms.
EXCEPTIONAL_PAIRS: dict[tuple[int, int], frozenset[tuple[int, int]]] = {
    (2, 1): frozenset(),
    (2, 2): frozenset(),
    (3, 2): frozenset({(4, 1), (5, 2), (6, 2), (6, 4), (7, 5), (8, 6)}),
    (3, 1): frozenset({(6, 4)}),
    (4, 1): frozenset({(8, 5), (9, 6), (10, 7)}),
}

#: Attached-curve invariants of the canonical-curve rule per ambient r.
CANONICAL_STEP = {3: (6, 8), 4: (8, 10)}

RULE_ADD_LINE = "add_line"
RULE_ADD_CANONICAL = "add_canonical"
RULE_DOWNGRADE = "downgrade"
RULE_LEDGER = "ledger"


class IncompleteLedgerError(RuntimeError):
    """An in-domain, non-exceptional case admitted no derivation.

    By the completeness of the shipped ledger this never fires; it exists so
    fault-injected or truncated ledgers fail loudly instead of misreporting.
    """

    def __init__(self, case: tuple[int, int, int, int]) -> None:
        super().__init__(f"no derivation for in-domain case {case}")
        self.case = case


@dataclass(frozen=True)
class Query:
    r: int
    n: int
    d: int
    g: int

    def case(self) -> tuple[int, int, int, int]:
        return (self.r, self.n, self.d, self.g)


@dataclass(frozen=True)
class ExceptionalDescriptor:
    """Structured description of one exceptional intersection."""

    case: tuple[int, int, int, int]
    description: str
    audit_case: tuple[int, int, int, int]
    note: Optional[str] = None


@dataclass(frozen=True, eq=False)
class DerivationTrace:
    """A node of the derivation tree; leaves carry their ledger entry id.

    Every rule has exactly one premise, so a derivation is a path from the
    queried case down to a ledger leaf.  All walks below are iterative
    (including equality): chains can be thousands of steps long within the
    documented bounds.
    """

    case: tuple[int, int, int, int]
    rule: str
    children: tuple["DerivationTrace", ...] = ()
    entry_id: Optional[str] = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DerivationTrace):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if (a.case, a.rule, a.entry_id, len(a.children)) != (
                b.case,
                b.rule,
                b.entry_id,
                len(b.children),
            ):
                return False
            stack.extend(zip(a.children, b.children))
        return True

    def __hash__(self) -> int:
        return hash((self.case, self.rule, self.entry_id, len(self.children)))

    def steps(self) -> list["DerivationTrace"]:
        """The nodes from root to leaf."""
        out = [self]
        node = self
        while node.children:
            if len(node.children) != 1:
                raise ValueError(f"{node.case}: a derivation step has one premise")
            node = node.children[0]
            out.append(node)
        return out

    def leaf(self) -> "DerivationTrace":
        return self.steps()[-1]

    def to_payload(self) -> list[dict]:
        """Flat root-to-leaf list; keeps JSON nesting depth constant."""
        return [
            {"case": list(node.case), "rule": node.rule, "entry": node.entry_id}
            for node in self.steps()
        ]


def trace_from_payload(payload: list[dict]) -> DerivationTrace:
    """Rebuild a trace from its JSON form (for re-validation round trips)."""
    if not payload:
        raise ValueError("empty trace payload")
    trace: Optional[DerivationTrace] = None
    for record in reversed(payload):
        trace = DerivationTrace(
            case=tuple(record["case"]),
            rule=record["rule"],
            entry_id=record.get("entry"),
            children=() if trace is None else (trace,),
        )
    return trace


@dataclass(frozen=True)
class Verdict:
    """Outcome of a classification query."""

    status: str  # "general" | "exceptional" | "invalid"
    reason: Optional[str] = None
    trace: Optional[DerivationTrace] = None
    descriptor: Optional[ExceptionalDescriptor] = None

    @classmethod
    def invalid(cls, reason: str) -> "Verdict":
        return cls(status="invalid", reason=reason)

    @classmethod
    def general(cls, trace: DerivationTrace) -> "Verdict":
        return cls(status="general", trace=trace)

    @classmethod
    def exceptional(cls, descriptor: ExceptionalDescriptor) -> "Verdict":
        return cls(status="exceptional", descriptor=descriptor)


DESCRIPTORS: dict[tuple[int, int, int, int], ExceptionalDescriptor] = {
    (3, 2, 4, 1): ExceptionalDescriptor(
        (3, 2, 4, 1),
        "the intersection of two general curves of bidegree (2, 2)",
        (3, 2, 4, 1),
    ),
    (3, 2, 5, 2): ExceptionalDescriptor(
        (3, 2, 5, 2),
        "a general collection of 10 points on a curve of bidegree (2, 2)",
        (3, 2, 5, 2),
    ),
    (3, 2, 6, 2): ExceptionalDescriptor(
        (3, 2, 6, 2),
        "a general collection of 12 points on a two-nodal curve of bidegree (3, 3), "
        "linearly equivalent to the (2, 2) class on the normalization",
        (3, 2, 6, 2),
    ),
    (3, 2, 6, 4): ExceptionalDescriptor(
        (3, 2, 6, 4),
        "the intersection of two general curves of bidegrees (2, 2) and (3, 3)",
        (3, 2, 6, 4),
    ),
    (3, 2, 7, 5): ExceptionalDescriptor(
        (3, 2, 7, 5),
        "14 points on a curve of bidegree (3, 3) whose sum, minus the (2, 2) class, "
        "is effective",
        (3, 2, 7, 5),
    ),
    (3, 2, 8, 6): ExceptionalDescriptor(
        (3, 2, 8, 6),
        "a general collection of 16 points on a curve of bidegree (3, 3)",
        (3, 2, 8, 6),
    ),
    (3, 1, 6, 4): ExceptionalDescriptor(
        (3, 1, 6, 4),
        "a general collection of 6 points on a conic",
        (3, 1, 6, 4),
    ),
    (4, 1, 8, 5): ExceptionalDescriptor(
        (4, 1, 8, 5),
        "the intersection of three general quadrics",
        (4, 1, 8, 5),
    ),
    (4, 1, 9, 6): ExceptionalDescriptor(
        (4, 1, 9, 6),
        "a general collection of 9 points on an elliptic normal curve of degree 4",
        (4, 1, 9, 6),
    ),
    (4, 1, 10, 7): ExceptionalDescriptor(
        (4, 1, 10, 7),
        "a general collection of 10 points on a quadric",
        (4, 1, 10, 7),
        note=(
            "the 10-points-on-a-quadric description accompanies the label (8, 5) in "
            "the theorem statement; it is assigned to (10, 7) here, matching the "
            "theorem's exceptional list and the 10-point count"
        ),
    ),
}


@dataclass(frozen=True)
class ConditionRow:
    """One evaluated inequality, reported with both sides."""

    name: str
    lhs: int
    relation: str
    rhs: int
    holds: bool


@dataclass(frozen=True)
class SideConditionReport:
    entry_id: str
    rows: tuple[ConditionRow, ...]

    @property
    def all_hold(self) -> bool:
        return all(row.holds for row in self.rows)


def composite_invariants(
    f1: tuple[int, int], glue: tuple[int, int, int]
) -> tuple[int, int]:
    """Degree and genus of a curve glued to another at n points.

    Attaching a degree-d2 genus-g2 curve at n points gives
    (d + d2, g + g2 + n - 1).
    """
    d, g = f1
    d2, g2, n = glue
    if n < 1:
        raise ValueError(f"gluing needs at least one point, got {n}")
    return (d + d2, g + g2 + n - 1)


def side_condition_check(entry: LedgerEntry) -> SideConditionReport:
    """Evaluate the gluing side conditions attached to a ledger entry.

    For a curve of degree d2 and genus g2 in a hyperplane of P^r, attached at
    n points with twist k, the derivation needs
    (r-2) n <= r d2 - (r-4)(g2-1) - k (r-2) d2 (the restricted bundle keeps
    enough Euler characteristic), n at least g2 (k = 1) or g2 - 1 + (k-1) d2
    (k > 1) (the twisted hyperplane series has no H^1), and n >= g2 - d2 + r
    (the glued curve smooths).
    """
    if entry.tag not in GLUE_CHECK_TAGS or entry.glue is None:
        raise ValueError(f"entry {entry.id} carries no checkable gluing data")
    r, k = entry.r, entry.glue.twist
    d2, g2, n = entry.glue.d2, entry.glue.g2, entry.glue.points
    chi_bound = r * d2 - (r - 4) * (g2 - 1) - k * (r - 2) * d2
    series_bound = g2 if k == 1 else g2 - 1 + (k - 1) * d2
    smooth_bound = g2 - d2 + r
    rows = (
        ConditionRow("restricted-chi", (r - 2) * n, "<=", chi_bound, (r - 2) * n <= chi_bound),
        ConditionRow("twisted-series", n, ">=", series_bound, n >= series_bound),
        ConditionRow("smoothing", n, ">=", smooth_bound, n >= smooth_bound),
    )
    return SideConditionReport(entry_id=entry.id, rows=rows)


def in_domain(r: int, d: int, g: int) -> bool:
    """r >= 2, d >= 1, g >= 0 and rho(d, g, r) >= 0: a general such curve exists."""
    if r < 2 or d < 1 or g < 0:
        return False
    return rho(BNIndex(r, d, g)) >= 0


class ClassificationEngine:
    """Deterministic classifier over an immutable ledger.

    Rule order is add_line, add_canonical, downgrade, ledger; derivations are
    memoized per engine so equal queries give identical traces and sweeps are
    cheap.
    """

    def __init__(self, ledger: Optional[Ledger] = None) -> None:
        self.ledger = ledger if ledger is not None else load_ledger()
        self._memo: dict[tuple[int, int, int, int], Optional[DerivationTrace]] = {}

    # -- domain predicates -------------------------------------------------

    @staticmethod
    def is_exceptional(r: int, n: int, d: int, g: int) -> bool:
        return (d, g) in EXCEPTIONAL_PAIRS.get((r, n), frozenset())

    # -- classification ----------------------------------------------------

    def classify(self, q: Query) -> Verdict:
        """Total and deterministic; General verdicts carry a complete trace."""
        if (q.r, q.n) not in SUPPORTED_PAIRS:
            return Verdict.invalid(
                f"unsupported pair (r, n) = ({q.r}, {q.n}); generality is possible "
                "only for (2, 1), (2, 2), (3, 1), (3, 2), (4, 1)"
            )
        if q.d < 1:
            return Verdict.invalid(f"degree must be at least 1, got {q.d}")
        if q.g < 0:
            return Verdict.invalid(f"genus must be nonnegative, got {q.g}")
        value = rho(BNIndex(q.r, q.d, q.g))
        if value < 0:
            return Verdict.invalid(
                f"rho({q.d}, {q.g}, {q.r}) = {value} < 0: no such general curve"
            )
        if self.is_exceptional(q.r, q.n, q.d, q.g):
            return Verdict.exceptional(DESCRIPTORS[q.case()])
        trace = self._derive(q.r, q.n, q.d, q.g)
        if trace is None:
            raise IncompleteLedgerError(q.case())
        return Verdict.general(trace)

    def _derive(self, r: int, n: int, d: int, g: int) -> Optional[DerivationTrace]:
        # Iterative worklist instead of recursion: add-line chains are as
        # long as the degree, which within the documented bounds (10^4)
        # would overflow the interpreter stack.
        root = (r, n, d, g)
        stack = [root]
        while stack:
            key = stack[-1]
            if key in self._memo:
                stack.pop()
                continue
            outcome, pending = self._derivation_step(key)
            if pending is not None:
                stack.append(pending)
                continue
            self._memo[key] = outcome
            stack.pop()
        return self._memo[root]

    def _derivation_step(
        self, key: tuple[int, int, int, int]
    ) -> tuple[Optional[DerivationTrace], Optional[tuple[int, int, int, int]]]:
        """Try the rules for one case in order.

        Returns (trace_or_None, None) once the case is decided, or
        (None, premise_key) when a premise must be derived first; the caller
        re-runs the step after the premise is memoized.
        """
        r, n, d, g = key
        if (r, n) in ((3, 2), (4, 1)):
            # add_line: premise (d - 1, g).
            pd, pg = d - 1, g
            if in_domain(r, pd, pg) and not self.is_exceptional(r, n, pd, pg):
                pkey = (r, n, pd, pg)
                if pkey not in self._memo:
                    return None, pkey
                child = self._memo[pkey]
                if child is not None:
                    return DerivationTrace(key, RULE_ADD_LINE, (child,)), None
            # add_canonical: premise (d - 6, g - 8) or (d - 8, g - 10).
            dd, dg = CANONICAL_STEP[r]
            pd, pg = d - dd, g - dg
            if r == 4 and (pd, pg) == (3, -2):
                entry = self.ledger.lookup(4, 1, 3, -2)
                if entry is not None and entry.rho_exempt:
                    leaf = DerivationTrace((4, 1, 3, -2), RULE_LEDGER, entry_id=entry.id)
                    return DerivationTrace(key, RULE_ADD_CANONICAL, (leaf,)), None
            elif in_domain(r, pd, pg) and not self.is_exceptional(r, n, pd, pg):
                pkey = (r, n, pd, pg)
                if pkey not in self._memo:
                    return None, pkey
                child = self._memo[pkey]
                if child is not None:
                    return DerivationTrace(key, RULE_ADD_CANONICAL, (child,)), None
        if (r, n) == (3, 1):
            # downgrade: vanishing for the quadric section implies it for the
            # plane section at the same (d, g).
            if not self.is_exceptional(3, 2, d, g):
                pkey = (3, 2, d, g)
                if pkey not in self._memo:
                    return None, pkey
                child = self._memo[pkey]
                if child is not None:
                    return DerivationTrace(key, RULE_DOWNGRADE, (child,)), None
        entry = self.ledger.lookup(r, n, d, g)
        if entry is not None and entry.tag not in AUXILIARY_TAGS:
            return DerivationTrace(key, RULE_LEDGER, entry_id=entry.id), None
        return None, None

    # -- sweeps --------------------------------------------------------------

    def completeness_audit(
        self, r: int, n: int, d_max: int, g_max: int
    ) -> list[tuple[int, int]]:
        """All in-domain non-exceptional (d, g) in the box with no derivation.

        The contract is that this list is empty; anything it returns is a
        hole in the ledger.
        """
        if (r, n) not in SUPPORTED_PAIRS:
            raise ValueError(f"unsupported pair ({r}, {n})")
        missing = []
        for g in range(0, g_max + 1):
            for d in range(1, d_max + 1):
                if not in_domain(r, d, g):
                    continue
                if self.is_exceptional(r, n, d, g):
                    continue
                if self._derive(r, n, d, g) is None:
                    missing.append((d, g))
        return missing

    def minimal_degree_cases(self, r: int, n: int, g: int) -> list[int]:
        """Degrees d where (d, g) is in-domain and non-exceptional but the
        add-line premise (d - 1, g) is out of domain or exceptional."""
        exceptional = EXCEPTIONAL_PAIRS[(r, n)]
        d_min = 1
        while not in_domain(r, d_min, g):
            d_min += 1
        candidates = set()
        if (d_min, g) not in exceptional:
            candidates.add(d_min)
        for (e, eg) in exceptional:
            if eg != g:
                continue
            d = e + 1
            while (d, g) in exceptional:
                d += 1
            if in_domain(r, d, g):
                candidates.add(d)
        return sorted(candidates)

    def frontier(self, r: int, n: int, g_max: int) -> list[tuple[int, int]]:
        """Minimal-degree cases that must be seeded by a geometric construction.

        For each genus up to g_max, the minimal-degree in-domain
        non-exceptional pairs whose derivation bottoms out immediately in a
        constructive ledger axiom; pairs the engine instead reaches by a rule
        application or a numeric-gate base are not frontier cases.  Ordered
        by (g, d).
        """
        if (r, n) not in SUPPORTED_PAIRS:
            raise ValueError(f"unsupported pair ({r}, {n})")
        out = []
        for g in range(0, g_max + 1):
            for d in self.minimal_degree_cases(r, n, g):
                trace = self._derive(r, n, d, g)
                if trace is None or trace.rule != RULE_LEDGER:
                    continue
                entry = self.ledger.get(trace.entry_id)
                if entry.tag in CONSTRUCTIVE_TAGS:
                    out.append((d, g))
        return out

    # -- trace validation ----------------------------------------------------

    def validate_trace(self, trace: DerivationTrace) -> list[str]:
        """Replay a trace bottom-up; returns the list of soundness violations."""
        problems: list[str] = []
        node: Optional[DerivationTrace] = trace
        while node is not None:
            node = self._validate_node(node, problems)
        return problems

    def _validate_node(
        self, node: DerivationTrace, problems: list[str]
    ) -> Optional[DerivationTrace]:
        """Check one step and hand back its premise node, if any."""
        r, n, d, g = node.case
        if node.rule == RULE_LEDGER:
            if node.children:
                problems.append(f"{node.case}: ledger leaf with children")
            if node.entry_id is None:
                problems.append(f"{node.case}: ledger leaf without an entry id")
                return None
            if not self.ledger.has(node.entry_id):
                problems.append(f"{node.case}: unknown ledger entry {node.entry_id}")
                return None
            entry = self.ledger.get(node.entry_id)
            if not entry.matches(r, n, d, g):
                problems.append(
                    f"{node.case}: ledger entry {entry.id} does not cover this case"
                )
            return None
        if len(node.children) != 1:
            problems.append(f"{node.case}: rule {node.rule} needs exactly one premise")
            return None
        child = node.children[0]
        cr, cn, cd, cg = child.case
        if node.rule == RULE_ADD_LINE:
            if (cr, cn, cd, cg) != (r, n, d - 1, g):
                problems.append(f"{node.case}: add_line premise {child.case} has wrong invariants")
            if not (in_domain(cr, cd, cg) and not self.is_exceptional(cr, cn, cd, cg)):
                problems.append(f"{node.case}: add_line premise {child.case} not admissible")
        elif node.rule == RULE_ADD_CANONICAL:
            dd, dg = CANONICAL_STEP.get(r, (0, 0))
            if (cr, cn, cd, cg) != (r, n, d - dd, g - dg):
                problems.append(
                    f"{node.case}: add_canonical premise {child.case} has wrong invariants"
                )
            admissible = in_domain(cr, cd, cg) and not self.is_exceptional(cr, cn, cd, cg)
            if not admissible:
                exempt = (
                    child.rule == RULE_LEDGER
                    and child.entry_id is not None
                    and self.ledger.has(child.entry_id)
                    and self.ledger.get(child.entry_id).rho_exempt
                )
                if not exempt:
                    problems.append(
                        f"{node.case}: add_canonical premise {child.case} not admissible"
                    )
        elif node.rule == RULE_DOWNGRADE:
            if (r, n) != (3, 1) or (cr, cn, cd, cg) != (3, 2, d, g):
                problems.append(f"{node.case}: downgrade must link (3, 1) to (3, 2)")
        else:
            problems.append(f"{node.case}: unknown rule {node.rule}")
            return None
        if node.rule in (RULE_ADD_LINE, RULE_ADD_CANONICAL) and cd >= d:
            problems.append(f"{node.case}: premise degree does not decrease")
        return child


_DEFAULT_ENGINE: Optional[ClassificationEngine] = None


def default_engine() -> ClassificationEngine:
    """A process-wide engine over the bundled ledger."""
    global _DEFAULT_ENGINE
    if _DEFAULT_ENGINE is None:
        _DEFAULT_ENGINE = ClassificationEngine()
    return _DEFAULT_ENGINE


def classify(q: Query) -> Verdict:
    """Classify against the bundled ledger."""
    return default_engine().classify(q)
