"""Closed-world validation of pattern situations and whole graphs.

A situation is judged only by the edges present in the graph.  Structural
cardinality problems are errors; semantic advice (location containment,
correlates that are causally linked, shared concept individuals) is reported
as warnings.

Rule catalog
------------
========== ======== ====================================================
code       severity meaning
========== ======== ====================================================
SIT-001    Error    situation does not satisfy exactly one description of
                    its own pattern kind (pattern rules are then skipped)
SIT-002    Error    an entity classified by the description's concepts is
                    not included in the situation
PART-001   Error    described event count is not one
PART-002   Error    no participant is classified
PART-003   Error    a participant is not an Object
PART-004   Warning  a location parameter's box does not contain a
                    participant's location
PART-005   Error    more than one time parameter
COMP-001   Error    composite count is not one
COMP-002   Error    no components
COMP-003   Error    the composite is also a component
COMP-004   Error    a composition constraint is violated by a component
COMP-005   Error    a composition constraint cannot be decoded
CAUS-001   Error    cause count is not one
CAUS-002   Error    effect count is not one
CAUS-003   Error    no justification
CORR-001   Error    fewer than two correlates
CORR-002   Error    no justification
CORR-003   Warning  a causality situation directly links two correlates
DOC-001    Error    documented event count is not one
DOC-002    Error    no documenter
INT-001    Error    interpreted event count is not one
INT-002    Error    a relevant situation is not one of the five bundleable
                    pattern kinds
INT-003    Error    no relevant situations
XREUSE-001 Warning  a concept individual is shared by several situations
DESC-001   Warning  a pattern description no situation satisfies
CONC-001   Warning  a pattern concept no description defines
========== ======== ====================================================

Documenters are not required to participate in any event.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .errors import KindMismatch
from .graph import GraphView, Kind, PatternClass, Property, region_values
from .patterns import (BUNDLEABLE, PatternKind, pattern_kind_of,
                       pattern_situations, view_of)
from .spacetime.constraints import Status, check_constraint
from .spacetime.regions import box_contains

P = Property
PC = PatternClass


class Severity(Enum):
    ERROR = "Error"
    WARNING = "Warning"

    def __str__(self):
        return self.value


E, W = Severity.ERROR, Severity.WARNING

CATALOG = {
    "SIT-001": E, "SIT-002": E,
    "PART-001": E, "PART-002": E, "PART-003": E, "PART-004": W, "PART-005": E,
    "COMP-001": E, "COMP-002": E, "COMP-003": E, "COMP-004": E, "COMP-005": E,
    "CAUS-001": E, "CAUS-002": E, "CAUS-003": E,
    "CORR-001": E, "CORR-002": E, "CORR-003": W,
    "DOC-001": E, "DOC-002": E,
    "INT-001": E, "INT-002": E, "INT-003": E,
    "XREUSE-001": W, "DESC-001": W, "CONC-001": W,
}
ERROR_CODES = sorted(c for c, s in CATALOG.items() if s is E)


@dataclass(frozen=True)
class Violation:
    code: str
    severity: Severity
    message: str
    entities: tuple

    def __post_init__(self):
        if self.code not in CATALOG:
            raise ValueError(f"unknown violation code {self.code!r}")
        if not self.entities:
            raise ValueError("a violation names at least one entity")

    @property
    def subject(self):
        return self.entities[0]

    def line(self) -> str:
        return f"{self.severity.value.upper()} {self.code} {self.subject} {self.message}"

    def sort_key(self):
        return (self.code, self.subject, self.message, self.entities)


@dataclass(frozen=True)
class ValidationReport:
    target: str            # situation IRI or "store"
    violations: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "violations",
                           tuple(sorted(set(self.violations), key=Violation.sort_key)))

    @property
    def errors(self):
        return tuple(v for v in self.violations if v.severity is Severity.ERROR)

    @property
    def warnings(self):
        return tuple(v for v in self.violations if v.severity is Severity.WARNING)

    @property
    def conformant(self) -> bool:
        return not self.errors

    def codes(self, severity: Severity | None = None) -> set:
        return {v.code for v in self.violations if severity in (None, v.severity)}

    def lines(self) -> list[str]:
        return [v.line() for v in self.violations]

    def to_text(self) -> str:
        return "".join(line + "\n" for line in self.lines())


class _Context:
    """Per-graph lookups shared by every situation checked in one pass."""

    def __init__(self, view: GraphView):
        self.view = view
        self._causal = None

    def causal_links(self):
        """{(cause, effect): [causality situations]} for well-shaped causality situations."""
        if self._causal is None:
            links = {}
            for s in pattern_situations(self.view, PatternKind.CAUSALITY):
                cv = view_of(self.view, s)
                for c in cv.causes:
                    for e in cv.effects:
                        links.setdefault((c, e), []).append(s)
            self._causal = links
        return self._causal

    def situations_using(self, concept):
        v = self.view
        return sorted({s for d in v.subjects(P.DEFINES, concept)
                       for s in v.subjects(P.SATISFIES, d)})


_INCLUSION = {Kind.EVENT: P.INCLUDES_EVENT, Kind.OBJECT: P.INCLUDES_OBJECT,
              Kind.SITUATION: P.INCLUDES_SITUATION}


def _check_participation(v, pv, found):
    s = pv.situation
    if len(pv.described_events) != 1:
        found("PART-001", f"{len(pv.described_events)} described events, expected 1",
              s, *pv.described_events)
    if not pv.participants:
        found("PART-002", "no participants", s)
    for part in pv.participants:
        if v.kind(part.object) is not Kind.OBJECT:
            found("PART-003", f"participant {part.object} is {v.kind(part.object)}, not Object",
                  s, part.object)
    for param, role, box in pv.locations:
        if box is None or role is None:
            continue
        for obj in v.objects(role, P.CLASSIFIES):
            for where in region_values(v, obj, Kind.SPACE_REGION):
                if not box_contains(box, where):
                    found("PART-004", f"{obj} at {where} lies outside location parameter box {box}",
                          s, param, obj)
    if len(pv.time_parameters) > 1:
        found("PART-005", f"{len(pv.time_parameters)} time parameters, at most 1 allowed",
              s, *(p for p, _ in pv.time_parameters))


def _check_composition(v, cv, found):
    s = cv.situation
    if len(cv.composites) != 1:
        found("COMP-001", f"{len(cv.composites)} composite events, expected 1", s, *cv.composites)
    if not cv.components:
        found("COMP-002", "no components", s)
    for e in set(cv.composites) & set(cv.components):
        found("COMP-003", f"{e} is both composite and component", s, e)
    for param, spec in cv.constraints:
        if spec is None:
            found("COMP-005", f"constraint {param} is malformed", s, param)
            continue
        for comp in cv.components:
            result = check_constraint(v, cv, comp, spec)
            if result.status is Status.VIOLATED:
                found("COMP-004", f"constraint {param}: {result.detail}", s, comp, param)


def _check_causality(v, cv, found):
    s = cv.situation
    if len(cv.causes) != 1:
        found("CAUS-001", f"{len(cv.causes)} causes, expected 1", s, *cv.causes)
    if len(cv.effects) != 1:
        found("CAUS-002", f"{len(cv.effects)} effects, expected 1", s, *cv.effects)
    if not cv.justifications:
        found("CAUS-003", "no justification", s)


def _check_correlation(v, cv, found, ctx):
    s = cv.situation
    if len(cv.correlates) < 2:
        found("CORR-001", f"{len(cv.correlates)} correlates, expected at least 2", s, *sorted(cv.correlates))
    if not cv.justifications:
        found("CORR-002", "no justification", s)
    links = ctx.causal_links()
    for a, b in combinations(sorted(cv.correlates), 2):
        for cause, effect in ((a, b), (b, a)):
            for causal in links.get((cause, effect), ()):
                found("CORR-003", f"correlates are causally linked: {cause} causes {effect} in {causal}",
                      s, cause, effect, causal)


def _check_documentation(v, dv, found):
    s = dv.situation
    if len(dv.documented_events) != 1:
        found("DOC-001", f"{len(dv.documented_events)} documented events, expected 1",
              s, *dv.documented_events)
    if not dv.documenters:
        found("DOC-002", "no documenter", s)


def _check_interpretation(v, iv, found):
    s = iv.situation
    if len(iv.interpreted_events) != 1:
        found("INT-001", f"{len(iv.interpreted_events)} interpreted events, expected 1",
              s, *iv.interpreted_events)
    if not iv.relevant_situations:
        found("INT-003", "no relevant situations", s)
    for r in iv.relevant_situations:
        if pattern_kind_of(v, r) not in BUNDLEABLE:
            found("INT-002", f"{r} is not a bundleable pattern situation", s, r)


def _validate(ctx: _Context, situation) -> list[Violation]:
    v = ctx.view
    if v.kind(situation) is not Kind.SITUATION:
        raise KindMismatch(f"{situation} is {v.kind(situation)}, not a Situation")
    kind = pattern_kind_of(v, situation)
    if kind is None:
        return []
    out = []

    def found(code, message, *entities):
        out.append(Violation(code, CATALOG[code], message, tuple(entities)))

    pv = view_of(v, situation)
    if len(pv.descriptions) != 1 or v.pattern_class(pv.description) is not kind.description_class:
        found("SIT-001", f"must satisfy exactly one {kind.description_class}, "
                         f"satisfies {len(pv.descriptions)}", situation, *pv.descriptions)
        return out

    for concept in pv.concepts:
        for entity in v.objects(concept, P.CLASSIFIES):
            inclusion = _INCLUSION[v.kind(entity)]
            if not v.has_edge(situation, inclusion, entity):
                found("SIT-002", f"{entity} is classified by {concept} but not included",
                      situation, entity, concept)
        users = ctx.situations_using(concept)
        if len(users) > 1:
            found("XREUSE-001", f"concept {concept} is shared by {len(users)} situations",
                  situation, concept, *(u for u in users if u != situation))

    if kind is PatternKind.PARTICIPATION:
        _check_participation(v, pv, found)
    elif kind is PatternKind.COMPOSITION:
        _check_composition(v, pv, found)
    elif kind is PatternKind.CAUSALITY:
        _check_causality(v, pv, found)
    elif kind is PatternKind.CORRELATION:
        _check_correlation(v, pv, found, ctx)
    elif kind is PatternKind.DOCUMENTATION:
        _check_documentation(v, pv, found)
    else:
        _check_interpretation(v, pv, found)
    return out


def validate_situation(view: GraphView, situation) -> ValidationReport:
    """Check one situation.  Situations without a pattern class get an empty report."""
    return ValidationReport(str(situation), tuple(_validate(_Context(view), situation)))


def validate_store(view: GraphView) -> ValidationReport:
    """Every pattern situation's findings plus the graph-wide checks."""
    ctx = _Context(view)
    found = []
    for s in pattern_situations(view):
        found.extend(_validate(ctx, s))
    justifications = {o for _, _, o in view.query_edges(property=P.HAS_JUSTIFICATION)}
    for d in view.entities(Kind.DESCRIPTION):
        if d in justifications or view.subjects(P.SATISFIES, d):
            continue
        found.append(Violation("DESC-001", W, "no situation satisfies this description", (d,)))
    for kind in (Kind.EVENT_TYPE, Kind.ROLE, Kind.PARAMETER):
        for c in view.entities(kind):
            if view.pattern_class(c) is not None and not view.subjects(P.DEFINES, c):
                found.append(Violation("CONC-001", W, "no description defines this concept", (c,)))
    return ValidationReport("store", tuple(found))
