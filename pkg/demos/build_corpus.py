"""Regenerate the canonical files in ``corpus/``.

Every file here is produced by the pattern builders and written with the
canonical writer, so rerunning the script is a no-op unless the builders or
the writer change.  ``corpus/handwritten.f.ttl`` is maintained by hand and
left alone.

    python3 demos/build_corpus.py [output-dir]
"""
import sys
from pathlib import Path

from eventf import (COMPOSITE, AbsoluteInterval, AllenRelation, CausalitySpec,
                    ComponentRef, CompositionSpec, CorrelationSpec,
                    DocumentationSpec, GeoBox, InterpretationSpec, Kind,
                    Participant, ParticipationSpec, Property, SpatialWithin,
                    SpatioTemporalWithin, Store, Temporal, TimeInterval,
                    Trajectory, attach_location, attach_time,
                    attach_trajectory, build, serialize)
from eventf.scenarios import emergency_store, power_outage_store

EX = {"ex": "http://example.org/corpus/", "dom": "http://example.org/domain#"}


def hours(a, b, day=1):
    return TimeInterval.from_iso(f"2010-03-{day:02d}T{a:02d}:00:00Z/2010-03-{day:02d}T{b:02d}:00:00Z")


def _store(events=(), objects=()):
    s = Store(EX)
    for e in events:
        s.new_entity(f"ex:{e}", Kind.EVENT)
    for o in objects:
        s.new_entity(f"ex:{o}", Kind.OBJECT)
    return s


def participation():
    s = _store(["concert-1"], ["singer-1", "hall-1"])
    attach_time(s, "ex:concert-1", hours(19, 22))
    attach_location(s, "ex:hall-1", GeoBox(48.20, 48.21, 16.36, 16.37))
    build(s, ParticipationSpec(
        "ex:concert-1",
        [Participant("ex:singer-1", specializes="dom:Performer"),
         Participant("ex:hall-1", specializes="dom:Venue")],
        time=hours(19, 22),
        locations=[("dom:Venue", GeoBox(48.0, 48.5, 16.0, 16.5))]))
    return s


def composition():
    s = _store(["match-1", "first-half-1", "break-1", "second-half-1"], ["referee-1"])
    for e, (a, b) in {"match-1": (15, 17), "first-half-1": (15, 16),
                      "second-half-1": (16, 17)}.items():
        attach_time(s, f"ex:{e}", hours(a, b))
    attach_time(s, "ex:break-1", TimeInterval.from_iso(
        "2010-03-01T15:45:00Z/2010-03-01T16:00:00Z"))
    build(s, ParticipationSpec("ex:first-half-1", [("ex:referee-1", None, "dom:Referee")]))
    attach_location(s, "ex:referee-1", GeoBox(52.51, 52.52, 13.23, 13.24))
    stadium = GeoBox(52.50, 52.53, 13.22, 13.25)
    build(s, CompositionSpec(
        "ex:match-1", ["ex:first-half-1", "ex:break-1", "ex:second-half-1"],
        constraints=[
            Temporal(AllenRelation.DURING, AbsoluteInterval(hours(14, 18))),
            SpatialWithin(stadium),
            SpatioTemporalWithin(Trajectory([(hours(14, 16), stadium),
                                             (hours(16, 18), stadium)])),
        ]))
    return s


def relative_constraints():
    s = _store(["trip-1", "departure-1", "arrival-1"])
    attach_time(s, "ex:trip-1", hours(8, 12))
    attach_time(s, "ex:departure-1", TimeInterval.from_iso(
        "2010-03-01T08:15:00Z/2010-03-01T09:00:00Z"))
    attach_time(s, "ex:arrival-1", TimeInterval.from_iso(
        "2010-03-01T11:00:00Z/2010-03-01T11:45:00Z"))
    build(s, CompositionSpec(
        "ex:trip-1", ["ex:departure-1", "ex:arrival-1"],
        constraints=[Temporal(AllenRelation.BEFORE, ComponentRef("ex:arrival-1")),
                     Temporal(AllenRelation.DURING, COMPOSITE)]))
    return s


def causality_chain():
    s = _store(["spark-1", "fire-1", "evacuation-1", "traffic-jam-1"])
    for cause, effect, why in [("spark-1", "fire-1", "combustion"),
                               ("fire-1", "evacuation-1", "safety regulation"),
                               ("evacuation-1", "traffic-jam-1", "road capacity")]:
        build(s, CausalitySpec(f"ex:{cause}", f"ex:{effect}", why))
    return s


def correlation():
    s = _store(["earthquake-1", "tsunami-1", "landslide-1"])
    build(s, CausalitySpec("ex:earthquake-1", "ex:tsunami-1", "plate tectonics"))
    build(s, CausalitySpec("ex:earthquake-1", "ex:landslide-1", "ground shaking"))
    build(s, CorrelationSpec({"ex:tsunami-1", "ex:landslide-1"}, "common cause: earthquake"))
    return s


def documentation():
    s = _store(["press-conference-1", "recording-1"], ["video-1", "article-1"])
    build(s, DocumentationSpec("ex:press-conference-1",
                               ["ex:video-1", "ex:article-1", "ex:recording-1"]))
    return s


def interpretations():
    s = _store(["crash-1", "ice-1", "speeding-1"], ["driver-1"])
    part = build(s, ParticipationSpec("ex:crash-1", [("ex:driver-1", None, "dom:Driver")]))
    weather = build(s, CausalitySpec("ex:ice-1", "ex:crash-1", "friction loss"))
    driver = build(s, CausalitySpec("ex:speeding-1", "ex:crash-1", "braking distance"))
    build(s, InterpretationSpec("ex:crash-1", [part.situation, weather.situation],
                                specializes="dom:Accident", situation="ex:insurer-view"))
    build(s, InterpretationSpec("ex:crash-1", [part.situation, driver.situation],
                                specializes="dom:Offence", situation="ex:police-view"))
    return s


def regions():
    s = _store(["voyage-1"], ["ship-1"])
    attach_time(s, "ex:voyage-1", TimeInterval.from_iso(
        "2010-03-01T06:00:00.250Z/2010-03-04T18:30:00Z"))
    attach_location(s, "ex:ship-1", GeoBox(-33.9, -33.8, 18.4, 18.5))
    attach_trajectory(s, "ex:ship-1", Trajectory([
        (hours(6, 12), GeoBox(-34.0, -33.5, 18.0, 18.5)),
        (hours(12, 20), GeoBox(-33.5, -30.0, 17.0, 18.0)),
    ]))
    return s


def nonconformant():
    """Parses and loads, but validation reports errors (a causality with two causes)."""
    s = _store(["rain-1", "wind-1", "damage-1"])
    v = build(s, CausalitySpec("ex:rain-1", "ex:damage-1", "water ingress"))
    s.assert_edge(f"{v.situation}-cause", Property.CLASSIFIES, "ex:wind-1")
    s.assert_edge(v.situation, Property.INCLUDES_EVENT, "ex:wind-1")
    return s


def empty():
    return Store(EX)


CORPUS = {
    "fig-g": power_outage_store,
    "emergency": emergency_store,
    "participation": participation,
    "composition": composition,
    "relative-constraints": relative_constraints,
    "causality-chain": causality_chain,
    "correlation": correlation,
    "documentation": documentation,
    "interpretations": interpretations,
    "regions": regions,
    "nonconformant": nonconformant,
    "empty": empty,
}


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, make in CORPUS.items():
        path = out / f"{name}.f.ttl"
        path.write_bytes(serialize(make()).encode("utf-8"))
        print(f"wrote {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus")
