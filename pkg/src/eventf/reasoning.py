"""Structural inference over pattern situations.

Every query can be scoped to an interpretation: only the situations that the
interpretation lists as relevant are then visible.  A situation shared by two
interpretations is visible in both.  Causality is never closed transitively in
the graph; chains only appear through traversal.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import DifferentInterpretedEvents, NotAnInterpretation
from .graph import EntityRef, GraphView, Kind, region_values
from .patterns import PatternKind, pattern_kind_of, pattern_situations, view_of
from .spacetime.regions import TimeInterval
from .validation import validate_situation


@dataclass(frozen=True)
class Scope:
    """``interpretation=None`` sees every situation."""

    interpretation: Optional[str] = None


UNSCOPED = Scope()


def _interpretation(view, situation):
    if situation not in view or pattern_kind_of(view, situation) is not PatternKind.INTERPRETATION:
        raise NotAnInterpretation(f"{situation} is not an interpretation situation")
    return view_of(view, situation)


def visible_situations(view: GraphView, scope: Scope | None, kind: PatternKind) -> list:
    all_of_kind = pattern_situations(view, kind)
    if scope is None or scope.interpretation is None:
        return all_of_kind
    relevant = set(_interpretation(view, scope.interpretation).relevant_situations)
    return [s for s in all_of_kind if s in relevant]


def _bfs(start, neighbours):
    seen, queue = set(), deque([start])
    while queue:
        for nxt in neighbours(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


# -- mereology ---------------------------------------------------------------

def composition_edges(view: GraphView, scope: Scope | None = None) -> set:
    """(composite, component) pairs from every visible composition."""
    edges = set()
    for s in visible_situations(view, scope, PatternKind.COMPOSITION):
        cv = view_of(view, s)
        edges.update((whole, part) for whole in cv.composites for part in cv.components)
    return edges


def parts_closure(view: GraphView, event, scope: Scope | None = None,
                  direction: str = "parts") -> set:
    """Transitive parts (or wholes) of ``event``, excluding ``event`` itself."""
    view.kind(event)
    if direction not in ("parts", "wholes"):
        raise ValueError(f"direction must be 'parts' or 'wholes', got {direction!r}")
    adjacency = {}
    for whole, part in composition_edges(view, scope):
        a, b = (whole, part) if direction == "parts" else (part, whole)
        adjacency.setdefault(a, set()).add(b)
    return _bfs(event, lambda n: adjacency.get(n, ())) - {event}


# -- causality ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CausalEdge:
    cause: EntityRef
    effect: EntityRef
    justification: Optional[EntityRef]
    situation: EntityRef


@dataclass(frozen=True)
class CausalGraph:
    root: EntityRef
    direction: str
    edges: tuple
    cyclic: bool

    @property
    def nodes(self) -> frozenset:
        return frozenset({self.root} | {e.cause for e in self.edges} | {e.effect for e in self.edges})

    @property
    def related(self) -> frozenset:
        """Every reached event other than the root."""
        return self.nodes - {self.root}


def causal_edges(view: GraphView, scope: Scope | None = None) -> list[CausalEdge]:
    edges = []
    for s in visible_situations(view, scope, PatternKind.CAUSALITY):
        cv = view_of(view, s)
        edges.extend(CausalEdge(c, e, cv.justification, s) for c in cv.causes for e in cv.effects)
    return sorted(edges, key=lambda e: (e.cause, e.effect, e.situation))


def _has_cycle(edges):
    succ, indeg = {}, {}
    for c, e in edges:
        succ.setdefault(c, set()).add(e)
        indeg.setdefault(c, 0)
    for c, targets in succ.items():
        for e in targets:
            indeg[e] = indeg.get(e, 0) + 1
    queue = deque(n for n, d in indeg.items() if d == 0)
    removed = 0
    while queue:
        n = queue.popleft()
        removed += 1
        for m in succ.get(n, ()):
            indeg[m] -= 1
            if indeg[m] == 0:
                queue.append(m)
    return removed != len(indeg)


def causal_chain(view: GraphView, event, scope: Scope | None = None,
                 direction: str = "ancestors") -> CausalGraph:
    """Causal subgraph reachable from ``event`` towards its causes or its effects."""
    view.kind(event)
    if direction not in ("ancestors", "descendants"):
        raise ValueError(f"direction must be 'ancestors' or 'descendants', got {direction!r}")
    upstream = direction == "ancestors"
    index = {}
    for edge in causal_edges(view, scope):
        index.setdefault(edge.effect if upstream else edge.cause, []).append(edge)

    def step(n):
        return [(e.cause if upstream else e.effect) for e in index.get(n, ())]

    reached = _bfs(event, step) | {event}
    edges = tuple(e for n in sorted(reached) for e in index.get(n, ()))
    return CausalGraph(EntityRef(event), direction, tuple(sorted(edges)),
                       _has_cycle({(e.cause, e.effect) for e in edges}))


@dataclass(frozen=True)
class InferredCorrelation:
    events: tuple            # (a, b) with a < b
    common_causes: tuple
    already_asserted: bool


def ancestor_sets(pairs) -> dict:
    """{event: causes reachable upstream} for a set of (cause, effect) pairs."""
    parents = {}
    for c, e in pairs:
        parents.setdefault(e, set()).add(c)
        parents.setdefault(c, set())
    return {n: _bfs(n, lambda x: parents.get(x, ())) for n in parents}


def infer_correlations(view: GraphView, scope: Scope | None = None) -> list[InferredCorrelation]:
    """Pairs of events with a common causal ancestor and no direct causality between them."""
    pairs = {(e.cause, e.effect) for e in causal_edges(view, scope)}
    ancestors = ancestor_sets(pairs)
    asserted = [view_of(view, s).correlates
                for s in visible_situations(view, scope, PatternKind.CORRELATION)]
    found = []
    for a, b in combinations(sorted(ancestors), 2):
        if (a, b) in pairs or (b, a) in pairs:
            continue
        common = (ancestors[a] & ancestors[b]) - {a, b}
        if common:
            found.append(InferredCorrelation(
                (a, b), tuple(sorted(common)), any(a in c and b in c for c in asserted)))
    return found


# -- interpretations ---------------------------------------------------------

@dataclass(frozen=True)
class ConflictingCause:
    effect: EntityRef
    cause_a: EntityRef
    cause_b: EntityRef
    situation_a: EntityRef
    situation_b: EntityRef


@dataclass(frozen=True)
class InterpretationDiff:
    shared: tuple
    only_a: tuple
    only_b: tuple
    conflicts: tuple


def _causes_by_effect(view, situations):
    out = {}
    for s in situations:
        if pattern_kind_of(view, s) is not PatternKind.CAUSALITY:
            continue
        if not validate_situation(view, s).conformant:
            continue
        cv = view_of(view, s)
        out.setdefault(cv.effect, {}).setdefault(cv.cause, s)
    return out


def diff_interpretations(view: GraphView, a, b) -> InterpretationDiff:
    """Partition two interpretations' relevant situations and list competing causes."""
    va, vb = _interpretation(view, a), _interpretation(view, b)
    if set(va.interpreted_events) != set(vb.interpreted_events):
        raise DifferentInterpretedEvents(
            f"{a} interprets {', '.join(va.interpreted_events) or 'nothing'}, "
            f"{b} interprets {', '.join(vb.interpreted_events) or 'nothing'}")
    sa, sb = set(va.relevant_situations), set(vb.relevant_situations)
    ca, cb = _causes_by_effect(view, sorted(sa)), _causes_by_effect(view, sorted(sb))
    conflicts = []
    for effect in sorted(set(ca) & set(cb)):
        for cause_a, sit_a in sorted(ca[effect].items()):
            if cause_a in cb[effect]:
                continue
            for cause_b, sit_b in sorted(cb[effect].items()):
                if cause_b not in ca[effect]:
                    conflicts.append(ConflictingCause(effect, cause_a, cause_b, sit_a, sit_b))
    return InterpretationDiff(tuple(sorted(sa & sb)), tuple(sorted(sa - sb)),
                              tuple(sorted(sb - sa)), tuple(conflicts))


# -- queries -----------------------------------------------------------------

def events_by_participant(view: GraphView, obj) -> list:
    found = set()
    for s in pattern_situations(view, PatternKind.PARTICIPATION):
        pv = view_of(view, s)
        if any(p.object == obj for p in pv.participants):
            found.update(pv.described_events)
    return sorted(found)


def events_by_interpretant(view: GraphView, concept) -> list:
    """Events interpreted under ``concept`` or under an interpretant specializing it."""
    found = set()
    for s in pattern_situations(view, PatternKind.INTERPRETATION):
        iv = view_of(view, s)
        if any(c == concept or concept in specs for c, specs in iv.interpretants):
            found.update(iv.interpreted_events)
    return sorted(found)


def events_by_documenter(view: GraphView, documenter) -> list:
    found = set()
    for s in pattern_situations(view, PatternKind.DOCUMENTATION):
        dv = view_of(view, s)
        if documenter in dv.documenters:
            found.update(dv.documented_events)
    return sorted(found)


def events_by_time_overlap(view: GraphView, interval: TimeInterval) -> list:
    """Events whose time quality shares at least one instant with ``interval``."""
    return [e for e in view.entities(Kind.EVENT)
            if any(t.overlaps_closed(interval) for t in region_values(view, e, Kind.TIME_INTERVAL))]


def find_events(view: GraphView, *, participant=None, interpretant=None,
                documenter=None, time_overlap: TimeInterval | None = None) -> list:
    """Run exactly one of the four event queries."""
    given = {k: v for k, v in dict(participant=participant, interpretant=interpretant,
                                    documenter=documenter, time_overlap=time_overlap).items()
             if v is not None}
    if len(given) != 1:
        raise TypeError(f"find_events takes exactly one query, got {sorted(given) or 'none'}")
    (key, value), = given.items()
    return {
        "participant": events_by_participant,
        "interpretant": events_by_interpretant,
        "documenter": events_by_documenter,
        "time_overlap": events_by_time_overlap,
    }[key](view, value)
