"""Builders and read-views for the six event patterns.

Each ``build_*`` function checks its spec completely before touching the
store, then emits the whole description/situation micro-graph: a situation
satisfying a description, the concepts the description defines, the
classification edges from those concepts and the inclusion edges from the
situation.  :func:`view_of` reads the same shape back.

Unnamed entities get IRIs derived from the situation: ``<situation>-cause``,
``<situation>-description`` and so on.  An unnamed situation is minted as the
first free ``f-inst:<pattern>-<n>``.

Views are lenient: they collect whatever the graph holds (lists rather than
single values) so the validator can inspect malformed situations through them.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .errors import (CompositeAmongComponents, DuplicateIri, DuplicateRole,
                     EmptyComponents, EmptyDocumenters, EmptyParticipants,
                     EmptySituations, KindMismatch, NonPatternSituation,
                     NotAComponent, NotAPatternSituation, PatternError, SelfCause,
                     SelfDocumentation, TooFewCorrelates, UndeclaredPrefix)
from .graph import (INST_PREFIX, DataProperty, EntityRef, GraphView, Kind,
                    PatternClass, Property, Store, split_qname)
from .spacetime.allen import AllenRelation
from .spacetime.constraints import (COMPOSITE, AbsoluteInterval, ComponentRef,
                                    SpatialWithin, SpatioTemporalWithin, Temporal)
from .spacetime.regions import GeoBox, TimeInterval

PC = PatternClass
P = Property


class PatternKind(Enum):
    PARTICIPATION = ("participation", PC.PARTICIPATION_SITUATION, PC.PARTICIPATION_DESCRIPTION)
    COMPOSITION = ("composition", PC.COMPOSITION_SITUATION, PC.COMPOSITION_DESCRIPTION)
    CAUSALITY = ("causality", PC.CAUSALITY_SITUATION, PC.CAUSALITY_DESCRIPTION)
    CORRELATION = ("correlation", PC.CORRELATION_SITUATION, PC.CORRELATION_DESCRIPTION)
    DOCUMENTATION = ("documentation", PC.DOCUMENTATION_SITUATION, PC.DOCUMENTATION_DESCRIPTION)
    INTERPRETATION = ("interpretation", PC.INTERPRETATION_SITUATION, PC.INTERPRETATION_DESCRIPTION)

    @property
    def slug(self) -> str:
        return self.value[0]

    @property
    def situation_class(self) -> PatternClass:
        return self.value[1]

    @property
    def description_class(self) -> PatternClass:
        return self.value[2]

    @classmethod
    def of_situation_class(cls, pc):
        for k in cls:
            if k.situation_class is pc:
                return k
        return None

    def __str__(self):
        return self.slug


# Situations an interpretation may bundle.
BUNDLEABLE = frozenset(k for k in PatternKind if k is not PatternKind.INTERPRETATION)


def _tuple(items):
    return tuple(items) if items is not None else ()


# -- specs -------------------------------------------------------------------

@dataclass(frozen=True)
class Participant:
    """One participating object.

    ``role`` names the Participant role individual (minted when omitted);
    ``specializes`` names the domain role it refines, e.g. ``dom:Citizen``.
    """

    object: str
    role: Optional[str] = None
    specializes: Optional[str] = None


@dataclass(frozen=True)
class ParticipationSpec:
    described_event: str
    participants: tuple
    time: Optional[TimeInterval] = None
    # (role key, box); the key is a participant's role or specializes IRI
    locations: tuple = ()
    situation: Optional[str] = None
    description: Optional[str] = None
    described_event_concept: Optional[str] = None

    def __post_init__(self):
        parts = tuple(p if isinstance(p, Participant) else Participant(*p)
                      for p in _tuple(self.participants))
        object.__setattr__(self, "participants", parts)
        object.__setattr__(self, "locations", tuple(tuple(x) for x in _tuple(self.locations)))


@dataclass(frozen=True)
class CompositionSpec:
    composite: str
    components: tuple
    constraints: tuple = ()
    situation: Optional[str] = None
    description: Optional[str] = None
    composite_concept: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "components", _tuple(self.components))
        object.__setattr__(self, "constraints", _tuple(self.constraints))


@dataclass(frozen=True)
class CausalitySpec:
    """``justification`` is either an existing Description (:class:`EntityRef`)
    or plain text, which is materialized as a labelled Description."""

    cause: str
    effect: str
    justification: Union[EntityRef, str]
    situation: Optional[str] = None
    description: Optional[str] = None
    cause_concept: Optional[str] = None
    effect_concept: Optional[str] = None


@dataclass(frozen=True)
class CorrelationSpec:
    correlates: frozenset
    justification: Union[EntityRef, str]
    situation: Optional[str] = None
    description: Optional[str] = None
    correlate_concept: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "correlates", frozenset(self.correlates))


@dataclass(frozen=True)
class DocumentationSpec:
    documented_event: str
    documenters: tuple
    situation: Optional[str] = None
    description: Optional[str] = None
    documented_concept: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "documenters", _tuple(self.documenters))


@dataclass(frozen=True)
class InterpretationSpec:
    interpreted_event: str
    relevant_situations: tuple
    interpretant: Optional[str] = None
    specializes: Optional[str] = None
    situation: Optional[str] = None
    description: Optional[str] = None
    relevant_concept: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "relevant_situations", _tuple(self.relevant_situations))


# -- views -------------------------------------------------------------------

@dataclass(frozen=True)
class PatternView:
    pattern_kind: PatternKind
    situation: EntityRef
    description: Optional[EntityRef]
    # every description the situation satisfies; well-formed views have one
    descriptions: tuple = ()
    concepts: tuple = ()

    def classified(self, view, cls):
        return classified_by(view, self.concepts, cls)


@dataclass(frozen=True)
class ParticipantView:
    object: EntityRef
    role: EntityRef
    specializes: Optional[EntityRef]


@dataclass(frozen=True)
class ParticipationView(PatternView):
    described_events: tuple = ()
    participants: tuple = ()          # ParticipantView, sorted by role
    time_parameters: tuple = ()       # (parameter, TimeInterval or None)
    locations: tuple = ()             # (parameter, role, GeoBox or None)

    @property
    def described_event(self):
        return _single(self.described_events)

    @property
    def time(self):
        return self.time_parameters[0][1] if len(self.time_parameters) == 1 else None


@dataclass(frozen=True)
class CompositionView(PatternView):
    composites: tuple = ()
    components: tuple = ()
    component_concepts: tuple = ()   # (concept, event)
    constraints: tuple = ()          # (constraint entity, ConstraintSpec or None)

    @property
    def composite(self):
        return _single(self.composites)


@dataclass(frozen=True)
class CausalityView(PatternView):
    causes: tuple = ()
    effects: tuple = ()
    justifications: tuple = ()
    justification_label: Optional[str] = None

    @property
    def cause(self):
        return _single(self.causes)

    @property
    def effect(self):
        return _single(self.effects)

    @property
    def justification(self):
        return _single(self.justifications)


@dataclass(frozen=True)
class CorrelationView(PatternView):
    correlates: frozenset = frozenset()
    justifications: tuple = ()
    justification_label: Optional[str] = None

    @property
    def justification(self):
        return _single(self.justifications)


@dataclass(frozen=True)
class DocumentationView(PatternView):
    documented_events: tuple = ()
    documenters: tuple = ()

    @property
    def documented_event(self):
        return _single(self.documented_events)


@dataclass(frozen=True)
class InterpretationView(PatternView):
    interpreted_events: tuple = ()
    interpretants: tuple = ()        # (concept, specialized domain concepts)
    relevant_situations: tuple = ()

    @property
    def interpreted_event(self):
        return _single(self.interpreted_events)

    @property
    def interpretant(self):
        return self.interpretants[0][0] if len(self.interpretants) == 1 else None


def _single(items):
    return items[0] if len(items) == 1 else None


# -- graph helpers -----------------------------------------------------------

def classified_by(view: GraphView, concepts, cls) -> tuple:
    """Sorted entities classified by any of ``concepts`` carrying class ``cls``."""
    found = set()
    for c in concepts:
        if view.pattern_class(c) is cls:
            found.update(view.objects(c, P.CLASSIFIES))
    return tuple(sorted(found))


def pattern_kind_of(view: GraphView, situation) -> Optional[PatternKind]:
    if view.kind(situation) is not Kind.SITUATION:
        return None
    return PatternKind.of_situation_class(view.pattern_class(situation))


class _Plan:
    """Collects entities, edges and literals, then commits them in one go."""

    def __init__(self, store: Store, kind: PatternKind, situation=None, description=None):
        self.store = store
        self.entities = {}
        self.edges = []
        self.literals = []
        # derived IRIs hang off a caller-named situation, so build order cannot leak into them
        self.base = situation if situation is not None else _mint_base(store, kind.slug)
        self.situation = self.entity(situation, "", Kind.SITUATION, kind.situation_class)
        self.description = self.entity(description, "description", Kind.DESCRIPTION,
                                       kind.description_class)
        self.edge(self.situation, P.SATISFIES, self.description)

    def name(self, given, suffix):
        if given is not None:
            split_qname(given)
            return EntityRef(given)
        return EntityRef(f"{self.base}-{suffix}" if suffix else self.base)

    def entity(self, given, suffix, kind, cls=None):
        iri = self.name(given, suffix)
        if iri in self.entities or iri in self.store:
            raise DuplicateIri(f"{iri} already exists")
        if iri.prefix not in self.store.prefixes:
            raise UndeclaredPrefix(f"prefix {iri.prefix!r} of {iri} is not declared")
        self.entities[iri] = (kind, cls)
        return iri

    def domain_concept(self, iri, kind):
        """Reuse or create an opaque domain concept (target of ``specializes``)."""
        if iri in self.entities:
            return EntityRef(iri)
        if iri in self.store:
            if not self.store.kind(iri).is_concept:
                raise KindMismatch(f"{iri} is {self.store.kind(iri)}, expected a concept")
            return EntityRef(iri)
        split_qname(iri)
        return self.entity(iri, None, kind)

    def edge(self, s, p, o):
        self.edges.append((s, p, o))

    def literal(self, iri, prop, value):
        self.literals.append((iri, prop, value))

    def commit(self):
        st = self.store
        for iri, (kind, cls) in self.entities.items():
            st.new_entity(iri, kind, cls)
        for s, p, o in self.edges:
            st.assert_edge(s, p, o)
        for iri, prop, value in self.literals:
            st.set_literal(iri, prop, value)
        return self.situation


def _mint_base(store: GraphView, slug: str) -> str:
    pattern = re.compile(rf"{re.escape(INST_PREFIX)}:{re.escape(slug)}-(\d+)(?:-|$)")
    used = {int(m.group(1)) for e in store.entities() if (m := pattern.match(e))}
    n = 1
    while n in used:
        n += 1
    return f"{INST_PREFIX}:{slug}-{n}"


def _expect(store, iri, kinds, what):
    kind = store.kind(iri)
    if kind not in kinds:
        names = "|".join(sorted(k.value for k in kinds))
        raise KindMismatch(f"{what} {iri} must be {names}, got {kind}")


def _justify(plan, justification):
    st = plan.store
    if isinstance(justification, EntityRef):
        _expect(st, justification, {Kind.DESCRIPTION}, "justification")
        target = justification
    elif isinstance(justification, str) and justification:
        target = plan.entity(None, "justification", Kind.DESCRIPTION)
        plan.literal(target, DataProperty.LABEL, justification)
    else:
        raise PatternError("a justification (Description or label text) is required")
    plan.edge(plan.description, P.HAS_JUSTIFICATION, target)


# -- builders ----------------------------------------------------------------

def build_participation(store: Store, spec: ParticipationSpec) -> ParticipationView:
    _expect(store, spec.described_event, {Kind.EVENT}, "described event")
    if not spec.participants:
        raise EmptyParticipants("a participation needs at least one participant")
    for part in spec.participants:
        _expect(store, part.object, {Kind.OBJECT}, "participant")
    roles = [p.role for p in spec.participants if p.role is not None]
    if len(set(roles)) != len(roles):
        raise DuplicateRole(f"role IRIs must be distinct: {sorted(roles)}")

    plan = _Plan(store, PatternKind.PARTICIPATION, spec.situation, spec.description)
    d = plan.description
    described = plan.entity(spec.described_event_concept, "described-event",
                            Kind.EVENT_TYPE, PC.DESCRIBED_EVENT)
    plan.edge(d, P.DEFINES, described)
    plan.edge(described, P.CLASSIFIES, spec.described_event)
    plan.edge(plan.situation, P.INCLUDES_EVENT, spec.described_event)

    role_of = {}
    for i, part in enumerate(spec.participants, 1):
        role = plan.entity(part.role, f"participant-{i}", Kind.ROLE, PC.PARTICIPANT)
        plan.edge(d, P.DEFINES, role)
        plan.edge(role, P.CLASSIFIES, part.object)
        plan.edge(plan.situation, P.INCLUDES_OBJECT, part.object)
        if part.specializes is not None:
            plan.edge(role, P.SPECIALIZES, plan.domain_concept(part.specializes, Kind.ROLE))
        for key in {part.role, part.specializes} - {None}:
            role_of.setdefault(key, []).append(role)

    if spec.time is not None:
        param = plan.entity(None, "time-parameter", Kind.PARAMETER, PC.TIME_PARAMETER)
        region = plan.entity(None, "time-region", Kind.TIME_INTERVAL)
        plan.literal(region, DataProperty.VALUE, spec.time)
        plan.edge(d, P.DEFINES, param)
        plan.edge(param, P.PARAMETRIZES, region)
        plan.edge(param, P.IS_PARAMETER_FOR, described)

    for i, (key, box) in enumerate(spec.locations, 1):
        matches = role_of.get(key, [])
        if len(matches) != 1:
            raise PatternError(f"location key {key} must name exactly one participant role, "
                               f"matched {len(matches)}")
        if not isinstance(box, GeoBox):
            raise TypeError(f"location of {key} must be a GeoBox, got {box!r}")
        param = plan.entity(None, f"location-parameter-{i}", Kind.PARAMETER, PC.LOCATION_PARAMETER)
        region = plan.entity(None, f"location-region-{i}", Kind.SPACE_REGION)
        plan.literal(region, DataProperty.VALUE, box)
        plan.edge(d, P.DEFINES, param)
        plan.edge(param, P.PARAMETRIZES, region)
        plan.edge(param, P.IS_PARAMETER_FOR, matches[0])

    return view_of(store, plan.commit())


def build_composition(store: Store, spec: CompositionSpec) -> CompositionView:
    _expect(store, spec.composite, {Kind.EVENT}, "composite")
    if not spec.components:
        raise EmptyComponents("a composition needs at least one component")
    if spec.composite in spec.components:
        raise CompositeAmongComponents(f"{spec.composite} cannot be its own component")
    if len(set(spec.components)) != len(spec.components):
        raise PatternError(f"duplicate components in {list(spec.components)}")
    for comp in spec.components:
        _expect(store, comp, {Kind.EVENT}, "component")

    plan = _Plan(store, PatternKind.COMPOSITION, spec.situation, spec.description)
    d, s = plan.description, plan.situation
    composite = plan.entity(spec.composite_concept, "composite", Kind.EVENT_TYPE, PC.COMPOSITE)
    plan.edge(d, P.DEFINES, composite)
    plan.edge(composite, P.CLASSIFIES, spec.composite)
    plan.edge(s, P.INCLUDES_EVENT, spec.composite)
    concept_of = {}
    for i, comp in enumerate(spec.components, 1):
        concept = plan.entity(None, f"component-{i}", Kind.EVENT_TYPE, PC.COMPONENT)
        concept_of[comp] = concept
        plan.edge(d, P.DEFINES, concept)
        plan.edge(concept, P.CLASSIFIES, comp)
        plan.edge(s, P.INCLUDES_EVENT, comp)

    for i, c in enumerate(spec.constraints, 1):
        param = plan.entity(None, f"constraint-{i}", Kind.PARAMETER, PC.COMPOSITION_CONSTRAINT)
        plan.edge(d, P.DEFINES, param)
        if isinstance(c, Temporal):
            plan.literal(param, DataProperty.RELATION, AllenRelation(c.relation))
            if isinstance(c.target, AbsoluteInterval):
                region = plan.entity(None, f"constraint-{i}-region", Kind.TIME_INTERVAL)
                plan.literal(region, DataProperty.VALUE, c.target.interval)
                plan.edge(param, P.PARAMETRIZES, region)
            elif isinstance(c.target, ComponentRef):
                if c.target.event not in concept_of:
                    raise NotAComponent(f"constraint target {c.target.event} is not a component")
                plan.edge(param, P.IS_PARAMETER_FOR, concept_of[c.target.event])
            elif c.target is COMPOSITE:
                plan.edge(param, P.IS_PARAMETER_FOR, composite)
            else:
                raise TypeError(f"unknown temporal target {c.target!r}")
        elif isinstance(c, SpatialWithin):
            region = plan.entity(None, f"constraint-{i}-region", Kind.SPACE_REGION)
            plan.literal(region, DataProperty.VALUE, c.box)
            plan.edge(param, P.PARAMETRIZES, region)
        elif isinstance(c, SpatioTemporalWithin):
            region = plan.entity(None, f"constraint-{i}-region", Kind.SPATIO_TEMPORAL_REGION)
            plan.literal(region, DataProperty.VALUE, c.trajectory)
            plan.edge(param, P.PARAMETRIZES, region)
        else:
            raise TypeError(f"not a constraint: {c!r}")

    return view_of(store, plan.commit())


def build_causality(store: Store, spec: CausalitySpec) -> CausalityView:
    _expect(store, spec.cause, {Kind.EVENT}, "cause")
    _expect(store, spec.effect, {Kind.EVENT}, "effect")
    if spec.cause == spec.effect:
        raise SelfCause(f"{spec.cause} cannot cause itself")
    plan = _Plan(store, PatternKind.CAUSALITY, spec.situation, spec.description)
    for given, suffix, cls, event in ((spec.cause_concept, "cause", PC.CAUSE, spec.cause),
                                      (spec.effect_concept, "effect", PC.EFFECT, spec.effect)):
        concept = plan.entity(given, suffix, Kind.EVENT_TYPE, cls)
        plan.edge(plan.description, P.DEFINES, concept)
        plan.edge(concept, P.CLASSIFIES, event)
        plan.edge(plan.situation, P.INCLUDES_EVENT, event)
    _justify(plan, spec.justification)
    return view_of(store, plan.commit())


def build_correlation(store: Store, spec: CorrelationSpec) -> CorrelationView:
    if len(spec.correlates) < 2:
        raise TooFewCorrelates(f"a correlation needs two or more events, got {len(spec.correlates)}")
    for event in spec.correlates:
        _expect(store, event, {Kind.EVENT}, "correlate")
    plan = _Plan(store, PatternKind.CORRELATION, spec.situation, spec.description)
    concept = plan.entity(spec.correlate_concept, "correlate", Kind.EVENT_TYPE, PC.CORRELATE)
    plan.edge(plan.description, P.DEFINES, concept)
    for event in sorted(spec.correlates):
        plan.edge(concept, P.CLASSIFIES, event)
        plan.edge(plan.situation, P.INCLUDES_EVENT, event)
    _justify(plan, spec.justification)
    return view_of(store, plan.commit())


def build_documentation(store: Store, spec: DocumentationSpec) -> DocumentationView:
    _expect(store, spec.documented_event, {Kind.EVENT}, "documented event")
    if not spec.documenters:
        raise EmptyDocumenters("a documentation needs at least one documenter")
    if spec.documented_event in spec.documenters:
        raise SelfDocumentation(f"{spec.documented_event} cannot document itself")
    if len(set(spec.documenters)) != len(spec.documenters):
        raise PatternError(f"duplicate documenters in {list(spec.documenters)}")
    for doc in spec.documenters:
        _expect(store, doc, {Kind.OBJECT, Kind.EVENT}, "documenter")

    plan = _Plan(store, PatternKind.DOCUMENTATION, spec.situation, spec.description)
    d, s = plan.description, plan.situation
    documented = plan.entity(spec.documented_concept, "documented-event",
                             Kind.EVENT_TYPE, PC.DOCUMENTED_EVENT)
    plan.edge(d, P.DEFINES, documented)
    plan.edge(documented, P.CLASSIFIES, spec.documented_event)
    plan.edge(s, P.INCLUDES_EVENT, spec.documented_event)
    for i, doc in enumerate(spec.documenters, 1):
        is_object = store.kind(doc) is Kind.OBJECT
        concept = plan.entity(None, f"documenter-{i}",
                              Kind.ROLE if is_object else Kind.EVENT_TYPE, PC.DOCUMENTER)
        plan.edge(d, P.DEFINES, concept)
        plan.edge(concept, P.CLASSIFIES, doc)
        plan.edge(s, P.INCLUDES_OBJECT if is_object else P.INCLUDES_EVENT, doc)
    return view_of(store, plan.commit())


def build_interpretation(store: Store, spec: InterpretationSpec) -> InterpretationView:
    _expect(store, spec.interpreted_event, {Kind.EVENT}, "interpreted event")
    if not spec.relevant_situations:
        raise EmptySituations("an interpretation needs at least one relevant situation")
    for sit in spec.relevant_situations:
        if pattern_kind_of(store, sit) not in BUNDLEABLE:
            raise NonPatternSituation(
                f"{sit} is not a participation, composition, causality, correlation "
                f"or documentation situation")
    if len(set(spec.relevant_situations)) != len(spec.relevant_situations):
        raise PatternError(f"duplicate relevant situations in {list(spec.relevant_situations)}")

    plan = _Plan(store, PatternKind.INTERPRETATION, spec.situation, spec.description)
    d, s = plan.description, plan.situation
    interpretant = plan.entity(spec.interpretant, "interpretant", Kind.EVENT_TYPE, PC.INTERPRETANT)
    plan.edge(d, P.DEFINES, interpretant)
    plan.edge(interpretant, P.CLASSIFIES, spec.interpreted_event)
    plan.edge(s, P.INCLUDES_EVENT, spec.interpreted_event)
    if spec.specializes is not None:
        plan.edge(interpretant, P.SPECIALIZES,
                  plan.domain_concept(spec.specializes, Kind.EVENT_TYPE))
    relevant = plan.entity(spec.relevant_concept, "relevant-situation",
                           Kind.ROLE, PC.RELEVANT_SITUATION)
    plan.edge(d, P.DEFINES, relevant)
    for sit in spec.relevant_situations:
        plan.edge(relevant, P.CLASSIFIES, sit)
        plan.edge(s, P.INCLUDES_SITUATION, sit)
    return view_of(store, plan.commit())


BUILDERS = {
    ParticipationSpec: build_participation,
    CompositionSpec: build_composition,
    CausalitySpec: build_causality,
    CorrelationSpec: build_correlation,
    DocumentationSpec: build_documentation,
    InterpretationSpec: build_interpretation,
}


def build(store: Store, spec) -> PatternView:
    """Dispatch to the builder for ``spec``'s type."""
    return BUILDERS[type(spec)](store, spec)


# -- views -------------------------------------------------------------------

def _decode_constraint(view, param, concepts):
    relation = view.literal(param, DataProperty.RELATION)
    regions = view.objects(param, P.PARAMETRIZES)
    targets = view.objects(param, P.IS_PARAMETER_FOR)
    region_kinds = [view.kind(r) for r in regions]
    if relation is not None:
        if len(regions) + len(targets) != 1:
            return None
        if regions:
            value = view.literal(regions[0], DataProperty.VALUE)
            if region_kinds[0] is not Kind.TIME_INTERVAL or value is None:
                return None
            return Temporal(relation, AbsoluteInterval(value))
        target = targets[0]
        if target not in concepts:
            return None
        cls = view.pattern_class(target)
        if cls is PC.COMPOSITE:
            return Temporal(relation, COMPOSITE)
        if cls is PC.COMPONENT:
            events = view.objects(target, P.CLASSIFIES)
            return Temporal(relation, ComponentRef(events[0])) if len(events) == 1 else None
        return None
    if len(regions) != 1 or targets:
        return None
    value = view.literal(regions[0], DataProperty.VALUE)
    if value is None:
        return None
    if region_kinds[0] is Kind.SPACE_REGION:
        return SpatialWithin(value)
    if region_kinds[0] is Kind.SPATIO_TEMPORAL_REGION:
        return SpatioTemporalWithin(value)
    return None


def _justifications(view, descriptions):
    found = sorted({j for d in descriptions for j in view.objects(d, P.HAS_JUSTIFICATION)})
    label = view.literal(found[0], DataProperty.LABEL) if len(found) == 1 else None
    return tuple(found), label


def view_of(view: GraphView, situation) -> PatternView:
    """Reconstruct the typed view of a pattern situation."""
    kind = pattern_kind_of(view, situation)
    if kind is None:
        raise NotAPatternSituation(f"{situation} is not a pattern situation "
                                   f"({view.kind(situation)}, class {view.pattern_class(situation)})")
    situation = EntityRef(situation)
    descriptions = tuple(view.objects(situation, P.SATISFIES))
    concepts = tuple(sorted({c for d in descriptions for c in view.objects(d, P.DEFINES)}))
    base = dict(pattern_kind=kind, situation=situation,
                description=_single(descriptions), descriptions=descriptions, concepts=concepts)

    def cls_of(c):
        return view.pattern_class(c)

    if kind is PatternKind.PARTICIPATION:
        participants = []
        for role in concepts:
            if cls_of(role) is PC.PARTICIPANT:
                specs = view.objects(role, P.SPECIALIZES)
                for obj in view.objects(role, P.CLASSIFIES):
                    participants.append(ParticipantView(obj, role, _single(specs)))
        times, locations = [], []
        for param in concepts:
            regions = view.objects(param, P.PARAMETRIZES)
            value = view.literal(regions[0], DataProperty.VALUE) if len(regions) == 1 else None
            if cls_of(param) is PC.TIME_PARAMETER:
                times.append((param, value))
            elif cls_of(param) is PC.LOCATION_PARAMETER:
                for role in view.objects(param, P.IS_PARAMETER_FOR) or [None]:
                    locations.append((param, role, value))
        return ParticipationView(
            **base, described_events=classified_by(view, concepts, PC.DESCRIBED_EVENT),
            participants=tuple(sorted(participants, key=lambda p: (p.role, p.object))),
            time_parameters=tuple(times), locations=tuple(locations))

    if kind is PatternKind.COMPOSITION:
        component_concepts = tuple((c, e) for c in concepts if cls_of(c) is PC.COMPONENT
                                   for e in view.objects(c, P.CLASSIFIES))
        constraints = tuple((c, _decode_constraint(view, c, concepts)) for c in concepts
                            if cls_of(c) is PC.COMPOSITION_CONSTRAINT)
        return CompositionView(
            **base, composites=classified_by(view, concepts, PC.COMPOSITE),
            components=classified_by(view, concepts, PC.COMPONENT),
            component_concepts=component_concepts, constraints=constraints)

    if kind is PatternKind.CAUSALITY:
        justs, label = _justifications(view, descriptions)
        return CausalityView(
            **base, causes=classified_by(view, concepts, PC.CAUSE),
            effects=classified_by(view, concepts, PC.EFFECT),
            justifications=justs, justification_label=label)

    if kind is PatternKind.CORRELATION:
        justs, label = _justifications(view, descriptions)
        return CorrelationView(
            **base, correlates=frozenset(classified_by(view, concepts, PC.CORRELATE)),
            justifications=justs, justification_label=label)

    if kind is PatternKind.DOCUMENTATION:
        return DocumentationView(
            **base, documented_events=classified_by(view, concepts, PC.DOCUMENTED_EVENT),
            documenters=classified_by(view, concepts, PC.DOCUMENTER))

    interpretants = tuple((c, tuple(view.objects(c, P.SPECIALIZES)))
                          for c in concepts if cls_of(c) is PC.INTERPRETANT)
    return InterpretationView(
        **base, interpreted_events=classified_by(view, concepts, PC.INTERPRETANT),
        interpretants=interpretants,
        relevant_situations=classified_by(view, concepts, PC.RELEVANT_SITUATION))


def pattern_situations(view: GraphView, kind: Optional[PatternKind] = None) -> list:
    """All pattern situations in the graph, optionally of one kind, sorted."""
    found = []
    for s in view.entities(Kind.SITUATION):
        k = pattern_kind_of(view, s)
        if k is not None and (kind is None or k is kind):
            found.append(s)
    return found
