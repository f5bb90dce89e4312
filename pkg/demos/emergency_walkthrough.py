"""The whole flooding incident, and two officers who disagree.

The flood is made of smaller events, some caused by it, two of them
correlated through it.  Officer A blames the power outage on the snapped
pole, officer B on a problem at the power plant.  Both views live in one
graph without contradicting it.

    python3 demos/emergency_walkthrough.py
"""
from eventf import (Scope, causal_chain, diff_interpretations, find_events,
                    infer_correlations, parts_closure, validate_store, view_of)
from eventf.scenarios import emergency_store, june, span
from eventf.spacetime import check_constraint


def names(items):
    return ", ".join(sorted(items)) or "-"


store = emergency_store()
report = validate_store(store)
print(f"{len(store)} entities, {store.edge_count()} edges, "
      f"{len(report.errors)} errors, {len(report.warnings)} warnings\n")

print("the flood consists of:", names(parts_closure(store, "ex:flooding-1")))
composition = view_of(store, "ex:composition-1")
for param, spec in composition.constraints:
    verdicts = [f"{c} {check_constraint(store, composition, c, spec).status}"
                for c in composition.components]
    print(f"  {param}: {'; '.join(verdicts)}")

print("\nwhat led to the rescue:", names(causal_chain(store, "ex:rescue-1").related))
for found in infer_correlations(store):
    state = "already recorded" if found.already_asserted else "not yet recorded"
    print(f"{names(found.events)} correlate through {names(found.common_causes)} ({state})")

print("\nwho documented what:")
for documenter in ("ex:photo-1", "ex:hotline-call-1"):
    print(f"  {documenter} -> {names(find_events(store, documenter=documenter))}")

evening = span(june(9, 18), june(9, 23))
print("\nongoing on the evening of the 9th:", names(find_events(store, time_overlap=evening)))

print("\ntwo officers, one outage:")
for officer in ("ex:officer-A", "ex:officer-B"):
    causes = causal_chain(store, "ex:power-outage-1", Scope(officer)).related
    print(f"  {officer} sees {names(causes)}")
diff = diff_interpretations(store, "ex:officer-A", "ex:officer-B")
print("  they share", names(diff.shared))
for c in diff.conflicts:
    print(f"  and disagree on {c.effect}: {c.cause_a} vs {c.cause_b}")
