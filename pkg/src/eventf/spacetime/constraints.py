"""Composition constraints and their evaluation against a graph."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from ..errors import DegenerateInterval, NotAComponent
from ..graph import GraphView, Kind, PatternClass, Property, region_values
from .allen import AllenRelation, allen_relation
from .regions import GeoBox, TimeInterval, Trajectory, box_contains


class _Composite:
    """Sentinel target: the composite event of the same composition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "COMPOSITE"

    def __reduce__(self):
        return (_Composite, ())


COMPOSITE = _Composite()


@dataclass(frozen=True)
class ComponentRef:
    event: str


@dataclass(frozen=True)
class AbsoluteInterval:
    interval: TimeInterval


@dataclass(frozen=True)
class Temporal:
    """``allen_relation(component, target) == relation`` must hold."""

    relation: AllenRelation
    target: Union[_Composite, ComponentRef, AbsoluteInterval]


@dataclass(frozen=True)
class SpatialWithin:
    box: GeoBox


@dataclass(frozen=True)
class SpatioTemporalWithin:
    trajectory: Trajectory


ConstraintSpec = Union[Temporal, SpatialWithin, SpatioTemporalWithin]


class Status(Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConstraintResult:
    status: Status
    detail: str = ""
    entities: tuple = ()

    @property
    def satisfied(self) -> bool:
        return self.status is Status.SATISFIED


def _satisfied():
    return ConstraintResult(Status.SATISFIED)


def _violated(detail, entities):
    return ConstraintResult(Status.VIOLATED, detail, tuple(sorted(set(entities))))


def _inapplicable(detail, entities=()):
    return ConstraintResult(Status.INAPPLICABLE, detail, tuple(sorted(set(entities))))


def participants_of(view: GraphView, event) -> list:
    """Objects playing a Participant role in any participation situation describing ``event``."""
    found = set()
    for concept in view.subjects(Property.CLASSIFIES, event):
        if view.pattern_class(concept) is not PatternClass.DESCRIBED_EVENT:
            continue
        for description in view.subjects(Property.DEFINES, concept):
            satisfied = [s for s in view.subjects(Property.SATISFIES, description)
                         if view.pattern_class(s) is PatternClass.PARTICIPATION_SITUATION]
            if not satisfied:
                continue
            for role in view.objects(description, Property.DEFINES):
                if view.pattern_class(role) is PatternClass.PARTICIPANT:
                    found.update(o for o in view.objects(role, Property.CLASSIFIES)
                                 if view.kind(o) is Kind.OBJECT)
    return sorted(found)


def _single_time(view, event):
    """(interval, None) or (None, reason) for the event's time quality."""
    times = set(region_values(view, event, Kind.TIME_INTERVAL))
    if not times:
        return None, f"{event} has no time quality"
    if len(times) > 1:
        return None, f"{event} has {len(times)} distinct time qualities"
    return times.pop(), None


def _check_temporal(view, composition, component, c: Temporal):
    own, reason = _single_time(view, component)
    if own is None:
        return _inapplicable(reason, [component])
    target = c.target
    if isinstance(target, AbsoluteInterval):
        other = target.interval
    else:
        if isinstance(target, ComponentRef):
            if target.event not in composition.components:
                raise NotAComponent(f"constraint target {target.event} is not a component")
            if target.event == component:
                return _inapplicable(f"constraint targets {component} itself", [component])
            target_event = target.event
        else:
            target_event = composition.composite
            if target_event is None:
                return _inapplicable("composition has no single composite event")
        other, reason = _single_time(view, target_event)
        if other is None:
            return _inapplicable(reason, [target_event])
    try:
        rel = allen_relation(own, other)
    except DegenerateInterval as exc:
        return _inapplicable(str(exc), [component])
    if rel is c.relation:
        return _satisfied()
    return _violated(f"{component} relates to the target as {rel}, required {c.relation}", [component])


def _check_boxes(view, component, boxes_for):
    """Shared spatial evaluation; ``boxes_for(obj_box)`` lists boxes the object must fit."""
    objects = participants_of(view, component)
    if not objects:
        return _inapplicable(f"{component} has no participating objects", [component])
    offenders, missing = [], []
    for obj in objects:
        regions = region_values(view, obj, Kind.SPACE_REGION)
        if not regions:
            missing.append(obj)
        elif any(not box_contains(outer, r) for r in regions for outer in boxes_for):
            offenders.append(obj)
    if offenders:
        return _violated(f"objects outside the required region: {', '.join(offenders)}", offenders)
    if missing:
        return _inapplicable(f"objects without a location: {', '.join(missing)}", missing)
    return _satisfied()


def check_constraint(view: GraphView, composition, component, c) -> ConstraintResult:
    """Evaluate constraint ``c`` for one component event of ``composition``.

    ``composition`` is a composition view (anything with ``composite`` and
    ``components`` attributes).  Missing data yields ``INAPPLICABLE``; it is
    never reported as satisfied.
    """
    if component not in composition.components:
        raise NotAComponent(f"{component} is not a component of {composition.situation}")
    if isinstance(c, Temporal):
        return _check_temporal(view, composition, component, c)
    if isinstance(c, SpatialWithin):
        return _check_boxes(view, component, [c.box])
    if isinstance(c, SpatioTemporalWithin):
        own, reason = _single_time(view, component)
        if own is None:
            return _inapplicable(reason, [component])
        legs = c.trajectory.legs_overlapping(own)
        if not legs:
            return _inapplicable(f"{component} lies outside the trajectory's time span", [component])
        return _check_boxes(view, component, [box for _, box in legs])
    raise TypeError(f"not a constraint: {c!r}")
