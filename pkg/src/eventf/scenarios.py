"""Ready-made stores for the emergency-response storyline.

``power_outage_store`` is the two-pattern example: a snapped power pole
causing a power outage, and a citizen plus an affected building
participating in that outage.  ``emergency_store`` extends it to the whole
incident: storm, flooding and its component events, documentation,
correlation and two officers' competing interpretations of the outage.
"""
from __future__ import annotations

from datetime import datetime, timezone

from .graph import Kind, Store, attach_location, attach_time
from .patterns import (CausalitySpec, CompositionSpec, CorrelationSpec,
                       DocumentationSpec, InterpretationSpec, Participant,
                       ParticipationSpec, build_causality, build_composition,
                       build_correlation, build_documentation,
                       build_interpretation, build_participation)
from .spacetime.allen import AllenRelation
from .spacetime.constraints import COMPOSITE, AbsoluteInterval, SpatialWithin, Temporal
from .spacetime.regions import GeoBox, TimeInterval

EX = "http://example.org/emergency/"
DOM = "http://example.org/emergency-ontology#"
PREFIXES = {"ex": EX, "dom": DOM}


def june(day, hour=0, minute=0):
    return datetime(2009, 6, day, hour, minute, tzinfo=timezone.utc)


def span(start, end) -> TimeInterval:
    return TimeInterval.from_datetimes(start, end)


SECOND_WEEK_OF_JUNE = span(june(8), june(14))
TOWN = GeoBox(50.90, 50.95, 7.05, 7.10)


def power_outage_store(store: Store | None = None) -> Store:
    """Causality (pole -> outage, "laws of physics") plus the outage's participation."""
    store = store if store is not None else Store(PREFIXES)
    for e in ("ex:snapped-power-pole-1", "ex:power-outage-1"):
        store.new_entity(e, Kind.EVENT)
    for o in ("ex:person-1", "ex:house-1"):
        store.new_entity(o, Kind.OBJECT)
    build_causality(store, CausalitySpec(
        "ex:snapped-power-pole-1", "ex:power-outage-1", "laws of physics",
        situation="ex:causality-1", description="ex:causality-description-1",
        cause_concept="ex:cause-1", effect_concept="ex:effect-1"))
    build_participation(store, ParticipationSpec(
        "ex:power-outage-1",
        [Participant("ex:person-1", "ex:citizen-1", "dom:Citizen"),
         Participant("ex:house-1", "ex:affected-bldg-1", "dom:AffectedBuilding")],
        situation="ex:participation-1", description="ex:participation-description-1",
        described_event_concept="ex:described-event-1"))
    return store


_TIMES = {
    "storm-1": (june(7, 18), june(8, 6)),
    "flooding-1": (june(8), june(14)),
    "flooded-cellar-1": (june(9, 10), june(9, 12)),
    "power-outage-1": (june(9, 8), june(10, 20)),
    "rescue-1": (june(10, 14), june(10, 16)),
    "snapped-power-pole-1": (june(9, 7, 30), june(9, 7, 45)),
    "power-plant-problem-1": (june(9, 7), june(9, 8)),
    "hotline-call-1": (june(9, 8, 30), june(9, 8, 40)),
}

_PLACES = {
    "person-1": GeoBox(50.920, 50.921, 7.070, 7.071),
    "house-1": GeoBox(50.9200, 50.9205, 7.0700, 7.0705),
    "cellar-1": GeoBox(50.931, 50.932, 7.081, 7.082),
    "person-2": GeoBox(50.940, 50.941, 7.090, 7.091),
    "firefighter-1": GeoBox(50.940, 50.941, 7.090, 7.091),
}


def emergency_store() -> Store:
    """The whole incident; validates without errors or warnings."""
    store = power_outage_store()
    for e in _TIMES:
        if f"ex:{e}" not in store:
            store.new_entity(f"ex:{e}", Kind.EVENT)
    for o in ("cellar-1", "person-2", "firefighter-1", "photo-1"):
        store.new_entity(f"ex:{o}", Kind.OBJECT)
    for e, (start, end) in _TIMES.items():
        attach_time(store, f"ex:{e}", span(start, end))
    for o, box in _PLACES.items():
        attach_location(store, f"ex:{o}", box)

    # participations for the hotline call, the flooded cellar and the rescue
    build_participation(store, ParticipationSpec(
        "ex:hotline-call-1", [Participant("ex:person-1", "ex:caller-1", "dom:Caller")],
        time=span(june(9, 8, 30), june(9, 8, 40)),
        locations=[("ex:caller-1", TOWN)],
        situation="ex:participation-2"))
    build_participation(store, ParticipationSpec(
        "ex:flooded-cellar-1", [Participant("ex:cellar-1", "ex:flooded-bldg-1", "dom:AffectedBuilding")],
        situation="ex:participation-3"))
    build_participation(store, ParticipationSpec(
        "ex:rescue-1",
        [Participant("ex:firefighter-1", "ex:rescuer-1", "dom:RescueStaff"),
         Participant("ex:person-2", "ex:rescued-1", "dom:Citizen")],
        time=span(june(10, 14), june(10, 16)),
        locations=[("ex:rescuer-1", TOWN)],
        situation="ex:participation-4"))

    build_composition(store, CompositionSpec(
        "ex:flooding-1", ["ex:flooded-cellar-1", "ex:power-outage-1", "ex:rescue-1"],
        constraints=[Temporal(AllenRelation.DURING, AbsoluteInterval(SECOND_WEEK_OF_JUNE)),
                     Temporal(AllenRelation.DURING, COMPOSITE),
                     SpatialWithin(TOWN)],
        situation="ex:composition-1"))

    build_causality(store, CausalitySpec(
        "ex:storm-1", "ex:flooding-1", "heavy rainfall swells the river", situation="ex:causality-2"))
    build_causality(store, CausalitySpec(
        "ex:flooding-1", "ex:flooded-cellar-1", "water enters low buildings", situation="ex:causality-3"))
    build_causality(store, CausalitySpec(
        "ex:flooding-1", "ex:rescue-1", "residents trapped by water", situation="ex:causality-4"))
    build_causality(store, CausalitySpec(
        "ex:power-plant-problem-1", "ex:power-outage-1", "laws of physics", situation="ex:causality-5"))

    build_correlation(store, CorrelationSpec(
        {"ex:flooded-cellar-1", "ex:rescue-1"}, "common cause: flooding", situation="ex:correlation-1"))

    build_documentation(store, DocumentationSpec(
        "ex:flooded-cellar-1", ["ex:photo-1"], situation="ex:documentation-1"))
    build_documentation(store, DocumentationSpec(
        "ex:power-outage-1", ["ex:hotline-call-1"], situation="ex:documentation-2"))

    build_interpretation(store, InterpretationSpec(
        "ex:power-outage-1", ["ex:causality-1", "ex:participation-1", "ex:documentation-2"],
        interpretant="ex:incident-view-A", specializes="dom:EmergencyIncident",
        situation="ex:officer-A"))
    build_interpretation(store, InterpretationSpec(
        "ex:power-outage-1", ["ex:causality-5", "ex:participation-1"],
        interpretant="ex:incident-view-B", specializes="dom:EmergencyIncident",
        situation="ex:officer-B"))
    return store
