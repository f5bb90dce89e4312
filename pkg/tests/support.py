"""Shared fixtures, the validation mutation catalog and random generators."""
import random
from pathlib import Path

from eventf import (AbsoluteInterval, AllenRelation, CausalitySpec,
                    CompositionSpec, CorrelationSpec, DataProperty,
                    DocumentationSpec, GeoBox, InterpretationSpec, Kind,
                    Participant, ParticipationSpec, PatternClass, Property,
                    SpatialWithin, Store, Temporal, TimeInterval,
                    attach_location, attach_time, build, parse, serialize,
                    validate_store)
from eventf.patterns import view_of
from eventf.scenarios import emergency_store, power_outage_store

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
CORPUS_FILES = sorted(CORPUS.glob("*.f.ttl"))
PREFIXES = {"ex": "http://example.org/test/", "dom": "http://example.org/test-domain#"}
P, PC = Property, PatternClass


def concept(view, situation, cls):
    """The single concept of class ``cls`` defined by the situation's description."""
    found = [c for d in view.objects(situation, P.SATISFIES)
             for c in view.objects(d, P.DEFINES) if view.pattern_class(c) is cls]
    assert len(found) == 1, (situation, cls, found)
    return found[0]


def error_codes(view):
    return {v.code for v in validate_store(view).errors}


# -- small conformant fixtures ------------------------------------------------

def single_component_store():
    s = Store(PREFIXES)
    for e in ("ex:whole-1", "ex:part-1"):
        s.new_entity(e, Kind.EVENT)
    build(s, CompositionSpec("ex:whole-1", ["ex:part-1"], situation="ex:comp-1"))
    return s


def single_relevant_store():
    s = power_outage_store()
    build(s, InterpretationSpec("ex:power-outage-1", ["ex:causality-1"],
                                specializes="dom:Blackout", situation="ex:officer-C"))
    return s


# -- mutation catalog -----------------------------------------------------------
# Each entry: code -> (what the mutation does, function returning the mutated store).
# The unmutated starting point is conformant (zero Errors).

def _retract(make, situation, cls, target):
    def mutate():
        s = make()
        assert s.retract_edge(concept(s, situation, cls), P.CLASSIFIES, target)
        return s
    return mutate


def _add_event_participant():
    s = emergency_store()
    desc = "ex:participation-description-1"
    s.new_entity("ex:bogus-participant", Kind.EVENT_TYPE, PC.PARTICIPANT)
    s.assert_edge(desc, P.DEFINES, "ex:bogus-participant")
    s.assert_edge("ex:bogus-participant", P.CLASSIFIES, "ex:hotline-call-1")
    s.assert_edge("ex:participation-1", P.INCLUDES_EVENT, "ex:hotline-call-1")
    return s


def _second_time_parameter():
    s = emergency_store()
    desc = s.objects("ex:participation-2", P.SATISFIES)[0]
    s.new_entity("ex:extra-time", Kind.PARAMETER, PC.TIME_PARAMETER)
    s.new_entity("ex:extra-time-region", Kind.TIME_INTERVAL)
    s.set_literal("ex:extra-time-region", DataProperty.VALUE,
                  TimeInterval.from_iso("2009-06-09T08:00:00Z/2009-06-09T09:00:00Z"))
    s.assert_edge(desc, P.DEFINES, "ex:extra-time")
    s.assert_edge("ex:extra-time", P.PARAMETRIZES, "ex:extra-time-region")
    return s


def _component_classifies_composite():
    s = single_component_store()
    s.assert_edge(concept(s, "ex:comp-1", PC.COMPONENT), P.CLASSIFIES, "ex:whole-1")
    return s


def _move_component_time():
    s = emergency_store()
    region = "ex:power-outage-1-time-region"
    s.clear_literal(region, DataProperty.VALUE)
    s.set_literal(region, DataProperty.VALUE,
                  TimeInterval.from_iso("2009-06-13T08:00:00Z/2009-06-15T08:00:00Z"))
    return s


def _drop_relation():
    s = emergency_store()
    cv = view_of(s, "ex:composition-1")
    temporal = next(p for p, spec in cv.constraints if isinstance(spec, Temporal))
    assert s.clear_literal(temporal, DataProperty.RELATION)
    return s


def _drop_justification(situation):
    def mutate():
        s = emergency_store()
        desc = s.objects(situation, P.SATISFIES)[0]
        just = s.objects(desc, P.HAS_JUSTIFICATION)[0]
        assert s.retract_edge(desc, P.HAS_JUSTIFICATION, just)
        return s
    return mutate


def _untag_relevant_situation():
    text = serialize(emergency_store())
    line = "ex:documentation-2 a f:Situation, f:DocumentationSituation ;"
    assert text.count(line) == 1
    return parse(text.replace(line, "ex:documentation-2 a f:Situation ;"))


def _unsatisfy():
    s = emergency_store()
    assert s.retract_edge("ex:causality-1", P.SATISFIES, "ex:causality-description-1")
    return s


def _uninclude():
    s = emergency_store()
    assert s.retract_edge("ex:causality-1", P.INCLUDES_EVENT, "ex:power-outage-1")
    return s


MUTATIONS = {
    "SIT-001": ("retract the causality situation's satisfies edge", _unsatisfy),
    "SIT-002": ("retract the inclusion of the effect event", _uninclude),
    "PART-001": ("retract the described-event classification",
                 _retract(emergency_store, "ex:participation-1", PC.DESCRIBED_EVENT, "ex:power-outage-1")),
    "PART-002": ("retract the only participant classification",
                 _retract(emergency_store, "ex:participation-3", PC.PARTICIPANT, "ex:cellar-1")),
    "PART-003": ("add an Event (typed EventType participant) as a participant",
                 _add_event_participant),
    "PART-005": ("add a second time parameter", _second_time_parameter),
    "COMP-001": ("retract the composite classification",
                 _retract(emergency_store, "ex:composition-1", PC.COMPOSITE, "ex:flooding-1")),
    "COMP-002": ("retract the only component classification",
                 _retract(single_component_store, "ex:comp-1", PC.COMPONENT, "ex:part-1")),
    "COMP-003": ("let the component concept also classify the composite",
                 _component_classifies_composite),
    "COMP-004": ("move a component's time outside the constrained week", _move_component_time),
    "COMP-005": ("remove a temporal constraint's relation literal", _drop_relation),
    "CAUS-001": ("retract the cause classification",
                 _retract(emergency_store, "ex:causality-1", PC.CAUSE, "ex:snapped-power-pole-1")),
    "CAUS-002": ("retract the effect classification",
                 _retract(emergency_store, "ex:causality-1", PC.EFFECT, "ex:power-outage-1")),
    "CAUS-003": ("retract the justification edge", _drop_justification("ex:causality-1")),
    "CORR-001": ("retract one correlate classification",
                 _retract(emergency_store, "ex:correlation-1", PC.CORRELATE, "ex:rescue-1")),
    "CORR-002": ("retract the justification edge", _drop_justification("ex:correlation-1")),
    "DOC-001": ("retract the documented-event classification",
                _retract(emergency_store, "ex:documentation-1", PC.DOCUMENTED_EVENT, "ex:flooded-cellar-1")),
    "DOC-002": ("retract the only documenter classification",
                _retract(emergency_store, "ex:documentation-1", PC.DOCUMENTER, "ex:photo-1")),
    "INT-001": ("retract the interpretant classification",
                _retract(emergency_store, "ex:officer-A", PC.INTERPRETANT, "ex:power-outage-1")),
    "INT-002": ("drop the pattern class of a relevant situation (one line of the serialized file)",
                _untag_relevant_situation),
    "INT-003": ("retract the only relevant-situation classification",
                _retract(single_relevant_store, "ex:officer-C", PC.RELEVANT_SITUATION, "ex:causality-1")),
}

MUTATION_BASES = {
    "COMP-002": single_component_store, "COMP-003": single_component_store,
    "INT-003": single_relevant_store,
}


def mutation_base(code):
    return MUTATION_BASES.get(code, emergency_store)()


# -- random valid specs ---------------------------------------------------------

_EPOCH = 1_262_304_000_000      # 2010-01-01T00:00:00Z in ms
HOUR = 3_600_000


def random_interval(rng, lo=0, hi=200):
    a = rng.randrange(lo, hi)
    b = rng.randrange(a + 1, hi + 1)
    return TimeInterval(_EPOCH + a * HOUR, _EPOCH + b * HOUR)


def random_box(rng, inside=None):
    outer = inside or GeoBox(-80.0, 80.0, -170.0, 170.0)
    la = sorted(rng.uniform(outer.min_lat, outer.max_lat) for _ in range(2))
    lo = sorted(rng.uniform(outer.min_lon, outer.max_lon) for _ in range(2))
    return GeoBox(la[0], la[1], lo[0], lo[1])


def hull(intervals):
    return TimeInterval(min(i.start for i in intervals), max(i.end for i in intervals))


def random_valid_build(rng):
    """Build one random, valid pattern instance into a fresh store; returns the store."""
    s = Store(PREFIXES)
    n_events, n_objects = rng.randint(2, 6), rng.randint(1, 5)
    events = [s.new_entity(f"ex:e{i}", Kind.EVENT) for i in range(n_events)]
    objects = [s.new_entity(f"ex:o{i}", Kind.OBJECT) for i in range(n_objects)]
    times = {e: random_interval(rng) for e in events}
    places = {o: random_box(rng) for o in objects}
    for e in events:
        if rng.random() < 0.7:
            attach_time(s, e, times[e])
    for o in objects:
        if rng.random() < 0.7:
            attach_location(s, o, places[o])
    kind = rng.choice(["participation", "composition", "causality", "correlation",
                       "documentation", "interpretation"])
    if kind == "participation":
        chosen = rng.sample(objects, rng.randint(1, n_objects))
        parts = [Participant(o, None, rng.choice([None, "dom:Role1", "dom:Role2"]) if i == 0 else None)
                 for i, o in enumerate(chosen)]
        world = GeoBox(-90.0, 90.0, -180.0, 180.0)
        locs = [(parts[0].specializes, world)] if parts[0].specializes and rng.random() < 0.5 else []
        build(s, ParticipationSpec(rng.choice(events), parts,
                                   time=rng.choice([None, random_interval(rng)]), locations=locs))
    elif kind == "composition":
        composite, *rest = rng.sample(events, rng.randint(2, n_events))
        constraints = []
        if rng.random() < 0.5:
            constraints.append(Temporal(AllenRelation.DURING, AbsoluteInterval(TimeInterval(
                hull(times.values()).start - HOUR, hull(times.values()).end + HOUR))))
        if rng.random() < 0.3:
            constraints.append(SpatialWithin(GeoBox(-90.0, 90.0, -180.0, 180.0)))
        build(s, CompositionSpec(composite, rest, constraints))
    elif kind == "causality":
        cause, effect = rng.sample(events, 2)
        build(s, CausalitySpec(cause, effect, rng.choice(["physics", "policy", "an opinion"])))
    elif kind == "correlation":
        build(s, CorrelationSpec(set(rng.sample(events, rng.randint(2, n_events))), "shared cause"))
    elif kind == "documentation":
        pool = objects + events[1:]
        build(s, DocumentationSpec(events[0], rng.sample(pool, rng.randint(1, len(pool)))))
    else:
        cause, effect = rng.sample(events, 2)
        relevant = [build(s, CausalitySpec(cause, effect, "physics")).situation]
        if rng.random() < 0.5:
            relevant.append(build(s, ParticipationSpec(effect, [Participant(objects[0])])).situation)
        build(s, InterpretationSpec(effect, relevant, specializes=rng.choice([None, "dom:View"])))
    return s


# -- random DAGs ------------------------------------------------------------------

def random_dag(rng, max_nodes, density):
    """Edges (i, j) with i < j over a random number of nodes."""
    n = rng.randint(2, max_nodes)
    edges = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density}
    return n, edges


# -- interchange fuzzing --------------------------------------------------------

def _position(data: bytes, offset: int):
    """1-based line/column (in characters) of the character holding ``offset``."""
    line_start = data.rfind(b"\n", 0, offset) + 1
    column = len(data[line_start:offset].decode("utf-8", "ignore")) + 1
    return data.count(b"\n", 0, offset) + 1, column


def mutated_region_start(mutated: bytes, offset: int):
    """Position of the whitespace-delimited word that a deletion at ``offset`` touched.

    Deleting a byte changes the token around it, so that word is the
    mutated region; a deletion between two words starts at the left one.
    """
    start = offset
    while start > 0 and mutated[start - 1:start] not in b" \t\r\n":
        start -= 1
    return _position(mutated, start)


def fuzz_deletions(path, offsets):
    """Delete one byte at each offset and parse. Returns a list of failure strings.

    A mutation may still parse, or it may fail with a positioned ParseError or
    LoadError. Syntax errors must not point before the deleted byte.
    """
    from eventf.errors import LoadError, ParseError
    data = Path(path).read_bytes()
    failures = []
    for k in offsets:
        mutated = data[:k] + data[k + 1:]
        try:
            parse(mutated)
        except ParseError as exc:
            if exc.line < 1 or exc.column < 1:
                failures.append(f"{path.name}@{k}: unpositioned {exc}")
            elif (exc.line, exc.column) < mutated_region_start(mutated, k):
                failures.append(f"{path.name}@{k}: {exc} precedes {mutated_region_start(mutated, k)}")
        except LoadError as exc:
            if exc.line < 1 or exc.column < 1:
                failures.append(f"{path.name}@{k}: unpositioned {exc}")
        except Exception as exc:   # noqa: BLE001 - any other exception is a crash
            failures.append(f"{path.name}@{k}: crash {type(exc).__name__}: {exc}")
    return failures


def fuzz_offsets(path, rng, budget):
    size = Path(path).stat().st_size
    if size <= budget:
        return range(size)
    return sorted(rng.sample(range(size), budget))


# -- the shared scenario used by the requirement suites -------------------------

_SCENARIO = []


def scenario():
    """One emergency store, shared read-only by every requirement suite."""
    if not _SCENARIO:
        _SCENARIO.append(emergency_store().snapshot())
    return _SCENARIO[0]


def fuzz_substitutions(path, rng, count):
    """Overwrite one random byte with a random value, ``count`` times.

    The parser must either accept the result or raise a positioned error.
    """
    from eventf.errors import LoadError, ParseError
    data = Path(path).read_bytes()
    failures = []
    for _ in range(count if data else 0):
        k, b = rng.randrange(len(data)), rng.randrange(256)
        mutated = data[:k] + bytes([b]) + data[k + 1:]
        try:
            parse(mutated)
        except (ParseError, LoadError) as exc:
            if exc.line < 1 or exc.column < 1:
                failures.append(f"{path.name}@{k}={b}: unpositioned {exc}")
        except Exception as exc:   # noqa: BLE001 - any other exception is a crash
            failures.append(f"{path.name}@{k}={b}: crash {type(exc).__name__}: {exc}")
    return failures
