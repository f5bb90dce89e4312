"""Two systems exchange event descriptions as text.

A field unit writes what it observed.  The control room parses that file
into its own graph, which happens to use the same ``ex:`` label for a
different namespace.  Labels are local to a document, so the merge
renames the incoming one and keeps every IRI intact.  A damaged copy of
the file is rejected with a line and column.

    python3 demos/interchange_between_systems.py
"""
import tempfile
from pathlib import Path

from eventf import (CausalitySpec, DocumentationSpec, Kind, Store, build, dump,
                    load, parse, serialize, validate_store)
from eventf.errors import LoadError, ParseError

# The field unit.
field = Store({"ex": "http://field.example.org/"})
for e in ("ex:pole-down", "ex:outage"):
    field.new_entity(e, Kind.EVENT)
field.new_entity("ex:photo", Kind.OBJECT)
build(field, CausalitySpec("ex:pole-down", "ex:outage", "laws of physics", situation="ex:why"))
build(field, DocumentationSpec("ex:outage", ["ex:photo"], situation="ex:evidence"))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "field-report.f.ttl"
    dump(field, path)
    print(f"field unit wrote {path.stat().st_size} bytes\n")

    # The control room already tracks an unrelated event under its own ex: namespace.
    control = Store({"ex": "http://control.example.org/"})
    control.new_entity("ex:shift-start", Kind.EVENT)
    load(path, control)
    print("control room prefixes:", dict(sorted(control.prefixes.items())))
    print("events now known:", ", ".join(control.entities(Kind.EVENT)))
    print("merged graph clean:", validate_store(control).conformant)
    print("IRI of the outage:", control.expand("ex2:outage"))

    # Loading the same report again changes nothing.
    before = serialize(control)
    load(path, control)
    print("second load is a no-op:", serialize(control) == before)

    # A copy damaged in transit.
    damaged = path.read_bytes().replace(b"f:includesEvent", b"f:includesEvnt", 1)
    try:
        parse(damaged)
    except (ParseError, LoadError) as exc:
        print(f"\ndamaged copy rejected: {path.name}:{exc}")
