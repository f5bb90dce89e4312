"""The power outage in a few dozen lines.

A storm has snapped a power pole and the neighbourhood is dark.  We record
who was affected, why the outage happened, and then ask the graph questions
about it.

    python3 demos/golden_walkthrough.py
"""
from eventf import (CausalitySpec, Kind, Participant, ParticipationSpec, Store,
                    build, causal_chain, serialize, validate_store, view_of)

store = Store({"ex": "http://example.org/emergency/",
               "dom": "http://example.org/emergency-ontology#"})

# Plain individuals first: two events and two objects.
for event in ("ex:snapped-power-pole-1", "ex:power-outage-1"):
    store.new_entity(event, Kind.EVENT)
for thing in ("ex:person-1", "ex:house-1"):
    store.new_entity(thing, Kind.OBJECT)

# Who took part, and in which capacity.  Each pattern becomes a situation
# satisfying a description whose concepts classify the individuals.
build(store, ParticipationSpec("ex:power-outage-1", [
    Participant("ex:person-1", "ex:citizen-1", "dom:Citizen"),
    Participant("ex:house-1", "ex:affected-bldg-1", "dom:AffectedBuilding"),
], situation="ex:participation-1"))

# Why it happened.  The justification names the causal theory in use.
build(store, CausalitySpec("ex:snapped-power-pole-1", "ex:power-outage-1",
                           "laws of physics", situation="ex:causality-1"))

print("entities:", len(store), " edges:", store.edge_count())
report = validate_store(store)
print("validation:", "clean" if not report.violations else report.to_text())

cause = view_of(store, "ex:causality-1")
print(f"{cause.causes[0]} caused {cause.effects[0]} ({cause.justification_label})")
print("ancestors of the outage:", ", ".join(sorted(causal_chain(store, "ex:power-outage-1").related)))

print("\ncanonical interchange text:\n")
print(serialize(store), end="")
