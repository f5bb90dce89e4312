"""Typed entity graph aligned with the DUL upper classes.

Every entity has exactly one :class:`Kind`, fixed at creation, and optionally
one :class:`PatternClass` tagging the part it plays in an event pattern (a
``Cause`` concept, a ``CausalitySituation``, ...).  Object properties are
checked against a fixed domain/range table when asserted, so a store can
never hold an ill-typed edge.

A :class:`Store` is the single-writer mutable graph; :meth:`Store.snapshot`
returns an immutable :class:`Snapshot` that all validation and reasoning code
reads from.
"""
from __future__ import annotations

import re
from enum import Enum
from types import MappingProxyType
from typing import NamedTuple

from .errors import (DomainViolation, DuplicateIri, InvalidIri, KindMismatch,
                     LiteralError, RangeViolation, UndeclaredPrefix, UnknownEntity)
from .spacetime.allen import AllenRelation
from .spacetime.regions import GeoBox, TimeInterval, Trajectory

F_NS = "urn:eventf:vocab#"
INST_NS = "urn:eventf:inst:"
VOCAB_PREFIX = "f"
INST_PREFIX = "f-inst"

_PREFIX = r"[A-Za-z][A-Za-z0-9_-]*"
_LOCAL = r"[A-Za-z0-9_][A-Za-z0-9_-]*"
QNAME_RE = re.compile(rf"({_PREFIX}):({_LOCAL})")
PREFIX_RE = re.compile(_PREFIX)
NAMESPACE_RE = re.compile(r'[^\x00-\x20<>"{}|^`\\]+')


class EntityRef(str):
    """Qualified name (``prefix:local``) identifying an entity in a store."""

    __slots__ = ()

    @property
    def prefix(self) -> str:
        return self.partition(":")[0]

    @property
    def local(self) -> str:
        return self.partition(":")[2]

    def __repr__(self):
        return f"EntityRef({str.__repr__(self)})"


def split_qname(iri) -> tuple[str, str]:
    m = QNAME_RE.fullmatch(iri) if isinstance(iri, str) else None
    if m is None:
        raise InvalidIri(f"not a qualified name: {iri!r}")
    return m.group(1), m.group(2)


class Kind(Enum):
    EVENT = "Event"
    OBJECT = "Object"
    DESCRIPTION = "Description"
    SITUATION = "Situation"
    QUALITY = "Quality"
    EVENT_TYPE = "EventType"
    ROLE = "Role"
    PARAMETER = "Parameter"
    TIME_INTERVAL = "TimeInterval"
    SPACE_REGION = "SpaceRegion"
    SPATIO_TEMPORAL_REGION = "SpatioTemporalRegion"

    @property
    def is_concept(self) -> bool:
        return self in CONCEPT_KINDS

    @property
    def is_region(self) -> bool:
        return self in REGION_KINDS

    def __str__(self):
        return self.value


CONCEPT_KINDS = frozenset({Kind.EVENT_TYPE, Kind.ROLE, Kind.PARAMETER})
REGION_KINDS = frozenset({Kind.TIME_INTERVAL, Kind.SPACE_REGION, Kind.SPATIO_TEMPORAL_REGION})


class PatternClass(Enum):
    """Pattern-level class of a situation, description or concept.

    The second tuple member is the kind an entity gets when only the class is
    given (e.g. ``ex:c a f:Cause``).
    """

    PARTICIPATION_SITUATION = ("EventParticipationSituation", Kind.SITUATION)
    COMPOSITION_SITUATION = ("EventCompositionSituation", Kind.SITUATION)
    CAUSALITY_SITUATION = ("CausalitySituation", Kind.SITUATION)
    CORRELATION_SITUATION = ("CorrelationSituation", Kind.SITUATION)
    DOCUMENTATION_SITUATION = ("DocumentationSituation", Kind.SITUATION)
    INTERPRETATION_SITUATION = ("InterpretationSituation", Kind.SITUATION)

    PARTICIPATION_DESCRIPTION = ("EventParticipationDescription", Kind.DESCRIPTION)
    COMPOSITION_DESCRIPTION = ("CompositionDescription", Kind.DESCRIPTION)
    CAUSALITY_DESCRIPTION = ("CausalityDescription", Kind.DESCRIPTION)
    CORRELATION_DESCRIPTION = ("CorrelationDescription", Kind.DESCRIPTION)
    DOCUMENTATION_DESCRIPTION = ("DocumentationDescription", Kind.DESCRIPTION)
    INTERPRETATION_DESCRIPTION = ("InterpretationDescription", Kind.DESCRIPTION)

    DESCRIBED_EVENT = ("DescribedEvent", Kind.EVENT_TYPE)
    PARTICIPANT = ("Participant", Kind.ROLE)
    TIME_PARAMETER = ("TimeParameter", Kind.PARAMETER)
    LOCATION_PARAMETER = ("LocationParameter", Kind.PARAMETER)
    COMPOSITE = ("Composite", Kind.EVENT_TYPE)
    COMPONENT = ("Component", Kind.EVENT_TYPE)
    COMPOSITION_CONSTRAINT = ("EventCompositionConstraint", Kind.PARAMETER)
    CAUSE = ("Cause", Kind.EVENT_TYPE)
    EFFECT = ("Effect", Kind.EVENT_TYPE)
    CORRELATE = ("Correlate", Kind.EVENT_TYPE)
    DOCUMENTED_EVENT = ("DocumentedEvent", Kind.EVENT_TYPE)
    DOCUMENTER = ("Documenter", Kind.ROLE)
    INTERPRETANT = ("Interpretant", Kind.EVENT_TYPE)
    RELEVANT_SITUATION = ("RelevantSituation", Kind.ROLE)

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def default_kind(self) -> Kind:
        return self.value[1]

    def admits(self, kind: Kind) -> bool:
        if self.default_kind.is_concept:
            return kind.is_concept
        return kind is self.default_kind

    @classmethod
    def by_label(cls, label: str):
        return _CLASS_BY_LABEL.get(label)

    def __str__(self):
        return self.label


_CLASS_BY_LABEL = {c.label: c for c in PatternClass}
KIND_BY_LABEL = {k.value: k for k in Kind}


class Property(Enum):
    """Object properties, in canonical serialization order."""

    CLASSIFIES = "classifies"
    SATISFIES = "satisfies"
    DEFINES = "defines"
    INCLUDES_EVENT = "includesEvent"
    INCLUDES_OBJECT = "includesObject"
    INCLUDES_SITUATION = "includesSituation"
    PARAMETRIZES = "parametrizes"
    IS_PARAMETER_FOR = "isParameterFor"
    HAS_QUALITY = "hasQuality"
    HAS_REGION = "hasRegion"
    HAS_JUSTIFICATION = "hasJustification"
    SPECIALIZES = "specializes"

    def __str__(self):
        return self.value


class DataProperty(Enum):
    """Literal attachments, serialized after the object properties."""

    LABEL = "label"
    RELATION = "relation"
    VALUE = "value"

    def __str__(self):
        return self.value


PROPERTY_BY_NAME = {p.value: p for p in Property}
DATA_PROPERTY_BY_NAME = {p.value: p for p in DataProperty}
PROPERTY_ORDER = {p: i for i, p in enumerate(Property)}

REGION_VALUE_TYPES = {
    Kind.TIME_INTERVAL: TimeInterval,
    Kind.SPACE_REGION: GeoBox,
    Kind.SPATIO_TEMPORAL_REGION: Trajectory,
}

P = Property
# property -> (allowed subject kinds, allowed object kinds); classifies is special-cased
_DOMAIN_RANGE = {
    P.SATISFIES: ({Kind.SITUATION}, {Kind.DESCRIPTION}),
    P.DEFINES: ({Kind.DESCRIPTION}, CONCEPT_KINDS),
    P.INCLUDES_EVENT: ({Kind.SITUATION}, {Kind.EVENT}),
    P.INCLUDES_OBJECT: ({Kind.SITUATION}, {Kind.OBJECT}),
    P.INCLUDES_SITUATION: ({Kind.SITUATION}, {Kind.SITUATION}),
    P.PARAMETRIZES: ({Kind.PARAMETER}, REGION_KINDS),
    P.IS_PARAMETER_FOR: ({Kind.PARAMETER}, CONCEPT_KINDS),
    P.HAS_QUALITY: ({Kind.EVENT, Kind.OBJECT}, {Kind.QUALITY}),
    P.HAS_REGION: ({Kind.QUALITY}, REGION_KINDS),
    P.HAS_JUSTIFICATION: ({Kind.DESCRIPTION}, {Kind.DESCRIPTION}),
    P.SPECIALIZES: (CONCEPT_KINDS, CONCEPT_KINDS),
}
_JUSTIFIED = frozenset({PatternClass.CAUSALITY_DESCRIPTION, PatternClass.CORRELATION_DESCRIPTION})


def _names(kinds):
    return "|".join(sorted(k.value for k in kinds)) or "nothing"


def classifies_range(kind: Kind, cls: PatternClass | None) -> frozenset:
    """Kinds a concept of ``kind`` (tagged ``cls``) may classify."""
    if kind is Kind.EVENT_TYPE:
        return frozenset({Kind.EVENT})
    if kind is Kind.ROLE:
        if cls is PatternClass.RELEVANT_SITUATION:
            return frozenset({Kind.OBJECT, Kind.SITUATION})
        return frozenset({Kind.OBJECT})
    return frozenset()


class Triple(NamedTuple):
    subject: EntityRef
    property: Property
    object: EntityRef


class GraphView:
    """Read interface shared by :class:`Store` and :class:`Snapshot`."""

    _prefixes: dict
    _kinds: dict
    _classes: dict
    _literals: dict
    _out: dict
    _in: dict

    # -- entities ------------------------------------------------------------

    @property
    def prefixes(self):
        return MappingProxyType(self._prefixes)

    def __contains__(self, iri) -> bool:
        return iri in self._kinds

    def __len__(self) -> int:
        return len(self._kinds)

    def entities(self, kind: Kind | None = None, cls: PatternClass | None = None) -> list[EntityRef]:
        return sorted(
            EntityRef(e) for e, k in self._kinds.items()
            if (kind is None or k is kind) and (cls is None or self._classes.get(e) is cls))

    def ref(self, iri) -> EntityRef:
        if iri not in self._kinds:
            raise UnknownEntity(f"unknown entity {iri!r}")
        return EntityRef(iri)

    def kind(self, iri) -> Kind:
        try:
            return self._kinds[iri]
        except KeyError:
            raise UnknownEntity(f"unknown entity {iri!r}") from None

    def pattern_class(self, iri) -> PatternClass | None:
        self.kind(iri)
        return self._classes.get(iri)

    def literal(self, iri, prop: DataProperty, default=None):
        return self._literals.get((iri, prop), default)

    def literals(self, iri=None) -> list:
        """Sorted ``(entity, data property, value)`` tuples."""
        items = [(EntityRef(e), p, v) for (e, p), v in self._literals.items()
                 if iri is None or e == iri]
        items.sort(key=lambda t: (t[0], list(DataProperty).index(t[1])))
        return items

    def expand(self, iri) -> str:
        prefix, local = split_qname(iri)
        try:
            return self._prefixes[prefix] + local
        except KeyError:
            raise UndeclaredPrefix(f"prefix {prefix!r} is not declared") from None

    # -- edges ---------------------------------------------------------------

    def has_edge(self, subject, prop: Property, obj) -> bool:
        return obj in self._out.get(subject, {}).get(prop, ())

    def objects(self, subject, prop: Property) -> list[EntityRef]:
        return sorted(EntityRef(o) for o in self._out.get(subject, {}).get(prop, ()))

    def subjects(self, prop: Property, obj) -> list[EntityRef]:
        return sorted(EntityRef(s) for s in self._in.get(obj, {}).get(prop, ()))

    def query_edges(self, subject=None, property: Property | None = None, object=None) -> list[Triple]:
        """All edges matching the bound positions, sorted by (subject, property, object)."""
        if subject is not None:
            by_prop = self._out.get(subject, {})
            found = [(subject, p, o) for p, os in by_prop.items()
                     if property in (None, p) for o in os if object in (None, o)]
        elif object is not None:
            by_prop = self._in.get(object, {})
            found = [(s, p, object) for p, ss in by_prop.items()
                     if property in (None, p) for s in ss]
        else:
            found = [(s, p, o) for s, by_prop in self._out.items()
                     for p, os in by_prop.items() if property in (None, p) for o in os]
        found.sort(key=lambda t: (t[0], t[1].value, t[2]))
        return [Triple(EntityRef(s), p, EntityRef(o)) for s, p, o in found]

    def edge_count(self) -> int:
        return sum(len(os) for by_prop in self._out.values() for os in by_prop.values())

    # -- comparison ----------------------------------------------------------

    def content(self):
        """Hashable summary used for equality: prefixes, kinds, classes, edges, literals."""
        return (frozenset(self._prefixes.items()), frozenset(self._kinds.items()),
                frozenset(self._classes.items()),
                frozenset((s, p, o) for s, by_prop in self._out.items()
                          for p, os in by_prop.items() for o in os),
                frozenset(self._literals.items()))

    def __eq__(self, other):
        if not isinstance(other, GraphView):
            return NotImplemented
        return self.content() == other.content()

    __hash__ = None

    # -- type checks -----------------------------------------------------------

    def check_edge(self, subject, prop: Property, obj):
        """Raise if ``subject prop obj`` violates the domain/range table."""
        sk, ok = self.kind(subject), self.kind(obj)
        if prop is Property.CLASSIFIES:
            if not sk.is_concept:
                raise DomainViolation(
                    f"{subject} classifies {obj}: subject must be {_names(CONCEPT_KINDS)}, got {sk}")
            allowed = classifies_range(sk, self._classes.get(subject))
            if ok not in allowed:
                raise RangeViolation(
                    f"{subject} classifies {obj}: a {sk} concept classifies {_names(allowed)}, got {ok}")
            return
        domain, range_ = _DOMAIN_RANGE[prop]
        if sk not in domain:
            raise DomainViolation(f"{subject} {prop} {obj}: subject must be {_names(domain)}, got {sk}")
        if prop is Property.HAS_JUSTIFICATION and self._classes.get(subject) not in _JUSTIFIED:
            raise DomainViolation(
                f"{subject} {prop} {obj}: only CausalityDescription|CorrelationDescription carry a justification")
        if ok not in range_:
            raise RangeViolation(f"{subject} {prop} {obj}: object must be {_names(range_)}, got {ok}")

    def check_literal(self, iri, prop: DataProperty, value):
        kind = self.kind(iri)
        if prop is DataProperty.LABEL:
            if not isinstance(value, str):
                raise LiteralError(f"label of {iri} must be a string, got {value!r}")
        elif prop is DataProperty.RELATION:
            if kind is not Kind.PARAMETER:
                raise LiteralError(f"relation literal only attaches to Parameters, {iri} is {kind}")
            if not isinstance(value, AllenRelation):
                raise LiteralError(f"relation of {iri} must be an AllenRelation, got {value!r}")
        elif prop is DataProperty.VALUE:
            expected = REGION_VALUE_TYPES.get(kind)
            if expected is None:
                raise LiteralError(f"value literal only attaches to regions, {iri} is {kind}")
            if not isinstance(value, expected):
                raise LiteralError(f"{kind} {iri} needs a {expected.__name__} value, got {value!r}")


class Snapshot(GraphView):
    """Immutable copy of a store, safe to share between threads."""

    def __init__(self, source: GraphView):
        self._prefixes = MappingProxyType(dict(source._prefixes))
        self._kinds = MappingProxyType(dict(source._kinds))
        self._classes = MappingProxyType(dict(source._classes))
        self._literals = MappingProxyType(dict(source._literals))
        self._out = MappingProxyType({
            s: MappingProxyType({p: frozenset(os) for p, os in by_prop.items() if os})
            for s, by_prop in source._out.items()})
        self._in = MappingProxyType({
            o: MappingProxyType({p: frozenset(ss) for p, ss in by_prop.items() if ss})
            for o, by_prop in source._in.items()})

    def snapshot(self) -> Snapshot:
        return self

    def __setattr__(self, name, value):
        if name in self.__dict__ or not name.startswith("_"):
            raise AttributeError("Snapshot is immutable")
        super().__setattr__(name, value)


class Store(GraphView):
    """Mutable single-writer entity graph.

    The vocabulary prefix ``f`` and the generated-instance prefix ``f-inst``
    are always declared.
    """

    def __init__(self, prefixes: dict | None = None):
        self._prefixes = {VOCAB_PREFIX: F_NS, INST_PREFIX: INST_NS}
        self._kinds = {}
        self._classes = {}
        self._literals = {}
        self._out = {}
        self._in = {}
        for prefix, ns in (prefixes or {}).items():
            self.declare_prefix(prefix, ns)

    def declare_prefix(self, prefix: str, namespace: str) -> None:
        if not PREFIX_RE.fullmatch(prefix):
            raise InvalidIri(f"invalid prefix name {prefix!r}")
        if not NAMESPACE_RE.fullmatch(namespace):
            raise InvalidIri(f"invalid namespace IRI {namespace!r}")
        current = self._prefixes.get(prefix)
        if current is not None and current != namespace:
            raise InvalidIri(f"prefix {prefix!r} already bound to <{current}>")
        for other, ns in self._prefixes.items():
            if ns == namespace and other != prefix:
                raise InvalidIri(f"<{namespace}> is already bound to prefix {other!r}")
        self._prefixes[prefix] = namespace

    def new_entity(self, iri, kind: Kind, cls: PatternClass | None = None) -> EntityRef:
        prefix, _ = split_qname(iri)
        if prefix not in self._prefixes:
            raise UndeclaredPrefix(f"prefix {prefix!r} of {iri} is not declared")
        if prefix == VOCAB_PREFIX:
            raise InvalidIri(f"{iri}: the '{VOCAB_PREFIX}' namespace is reserved for vocabulary")
        if not isinstance(kind, Kind):
            raise TypeError(f"kind must be a Kind, got {kind!r}")
        if iri in self._kinds:
            raise DuplicateIri(f"{iri} already exists as {self._kinds[iri]}")
        if cls is not None and not cls.admits(kind):
            raise KindMismatch(f"{iri}: class {cls} does not apply to kind {kind}")
        iri = EntityRef(iri)
        self._kinds[iri] = kind
        if cls is not None:
            self._classes[iri] = cls
        return iri

    def assert_edge(self, subject, prop: Property, obj) -> Triple:
        """Add ``subject prop obj``; re-asserting an existing edge is a no-op."""
        if not isinstance(prop, Property):
            raise TypeError(f"property must be a Property, got {prop!r}")
        self.check_edge(subject, prop, obj)
        subject, obj = EntityRef(subject), EntityRef(obj)
        self._out.setdefault(subject, {}).setdefault(prop, set()).add(obj)
        self._in.setdefault(obj, {}).setdefault(prop, set()).add(subject)
        return Triple(subject, prop, obj)

    def retract_edge(self, subject, prop: Property, obj) -> bool:
        """Remove an edge if present; returns whether anything was removed."""
        if not self.has_edge(subject, prop, obj):
            return False
        self._out[subject][prop].discard(obj)
        self._in[obj][prop].discard(subject)
        return True

    def set_literal(self, iri, prop: DataProperty, value) -> None:
        self.check_literal(iri, prop, value)
        current = self._literals.get((iri, prop))
        if current is not None and current != value:
            raise LiteralError(f"{iri} already has {prop} {current!r}")
        self._literals[(EntityRef(iri), prop)] = value

    def clear_literal(self, iri, prop: DataProperty) -> bool:
        """Drop a literal; returns whether one was present."""
        self.kind(iri)
        return self._literals.pop((iri, prop), None) is not None

    def snapshot(self) -> Snapshot:
        return Snapshot(self)

    def copy(self) -> Store:
        new = Store()
        new._prefixes = dict(self._prefixes)
        new._kinds = dict(self._kinds)
        new._classes = dict(self._classes)
        new._literals = dict(self._literals)
        new._out = {s: {p: set(os) for p, os in bp.items()} for s, bp in self._out.items()}
        new._in = {o: {p: set(ss) for p, ss in bp.items()} for o, bp in self._in.items()}
        return new


# Module-level spellings of the store operations.

def new_entity(store: Store, iri, kind: Kind, cls: PatternClass | None = None) -> EntityRef:
    return store.new_entity(iri, kind, cls)


def assert_edge(store: Store, subject, prop: Property, obj) -> Triple:
    return store.assert_edge(subject, prop, obj)


def query_edges(view: GraphView, subject=None, property=None, object=None) -> list[Triple]:
    return view.query_edges(subject, property, object)


# -- qualities ---------------------------------------------------------------

def _attach(store: Store, entity, value, region_kind: Kind, suffix: str, quality=None, region=None):
    if store.kind(entity) not in (Kind.EVENT, Kind.OBJECT):
        raise KindMismatch(f"{entity} is {store.kind(entity)}; only Events and Objects have qualities")
    quality = quality or f"{entity}-{suffix}"
    region = region or f"{quality}-region"
    store.new_entity(quality, Kind.QUALITY)
    store.new_entity(region, region_kind)
    store.set_literal(region, DataProperty.VALUE, value)
    store.assert_edge(entity, Property.HAS_QUALITY, quality)
    store.assert_edge(quality, Property.HAS_REGION, region)
    return EntityRef(quality)


def attach_time(store: Store, event, interval: TimeInterval, quality=None, region=None) -> EntityRef:
    """Give ``event`` a time quality whose region holds ``interval``."""
    return _attach(store, event, interval, Kind.TIME_INTERVAL, "time", quality, region)


def attach_location(store: Store, obj, box: GeoBox, quality=None, region=None) -> EntityRef:
    """Give ``obj`` a location quality whose region holds ``box``."""
    return _attach(store, obj, box, Kind.SPACE_REGION, "location", quality, region)


def attach_trajectory(store: Store, entity, trajectory: Trajectory, quality=None, region=None) -> EntityRef:
    return _attach(store, entity, trajectory, Kind.SPATIO_TEMPORAL_REGION, "extent", quality, region)


def region_values(view: GraphView, entity, region_kind: Kind) -> list:
    """Values of every ``region_kind`` region reached via hasQuality/hasRegion."""
    values = []
    for quality in view.objects(entity, Property.HAS_QUALITY):
        for region in view.objects(quality, Property.HAS_REGION):
            if view.kind(region) is region_kind:
                value = view.literal(region, DataProperty.VALUE)
                if value is not None:
                    values.append(value)
    return values
