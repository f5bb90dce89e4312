"""``eventf`` command line: validate, query and reformat ``.f.ttl`` files.

Exit status: 0 ok, 1 validation errors (or warnings under ``--strict``, or a
violated constraint), 2 parse/load failure, 3 usage error.
"""
from __future__ import annotations

import argparse
import sys

from .errors import (DifferentInterpretedEvents, EventModelError, InvalidRegion,
                     LoadError, NotAnInterpretation, NotAPatternSituation,
                     ParseError, UnknownEntity)
from .graph import DataProperty, Store
from .interchange import parse, serialize, serialize_report
from .patterns import PatternKind, pattern_kind_of, view_of
from .reasoning import (Scope, causal_chain, diff_interpretations, find_events,
                        infer_correlations, parts_closure)
from .spacetime.constraints import Status, check_constraint
from .spacetime.regions import TimeInterval
from .validation import validate_store

OK, ERRORS, LOAD_FAILURE, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _load(paths) -> Store:
    store = Store()
    for path in paths:
        try:
            parse(_read(path), store)
        except (ParseError, LoadError) as exc:
            raise _FileError(path, exc) from None
        except OSError as exc:
            raise _FileError(path, exc.strerror or str(exc)) from None
    return store


class _FileError(Exception):
    def __init__(self, path, problem):
        super().__init__(f"{path}:{problem}" if isinstance(problem, EventModelError) else f"{path}: {problem}")


def _scope(args):
    return Scope(args.interpretation)


def cmd_validate(args, out):
    store = _load(args.files)
    report = validate_store(store)
    if args.format == "ttl":
        out.write(serialize_report(report, store.prefixes))
    else:
        out.write(report.to_text())
    if report.errors or (args.strict and report.warnings):
        return ERRORS
    return OK


def cmd_query(args, out):
    store = _load([args.file])
    if args.time_overlap is not None:
        try:
            interval = TimeInterval.from_iso(args.time_overlap)
        except InvalidRegion as exc:
            raise UsageError(f"--time-overlap: {exc}") from None
        events = find_events(store, time_overlap=interval)
    else:
        key = next(k for k in ("participant", "interpretant", "documenter") if getattr(args, k))
        events = find_events(store, **{key: getattr(args, key)})
    out.writelines(f"{e}\n" for e in events)
    return OK


def cmd_parts(args, out):
    store = _load([args.file])
    found = parts_closure(store, args.event, _scope(args), args.direction)
    out.writelines(f"{e}\n" for e in sorted(found))
    return OK


def cmd_causes(args, out):
    store = _load([args.file])
    graph = causal_chain(store, args.event, _scope(args), args.direction)
    if args.edges:
        for edge in graph.edges:
            why = edge.justification and (store.literal(edge.justification, DataProperty.LABEL)
                                          or edge.justification)
            out.write(f"{edge.cause} -> {edge.effect} [{why or 'unjustified'}]\n")
        if graph.cyclic:
            out.write("# cycle detected\n")
    else:
        out.writelines(f"{e}\n" for e in sorted(graph.related))
    return OK


def cmd_infer_correlations(args, out):
    store = _load([args.file])
    for found in infer_correlations(store, _scope(args)):
        a, b = found.events
        status = "asserted" if found.already_asserted else "new"
        out.write(f"{a} {b} {status} common-causes: {' '.join(found.common_causes)}\n")
    return OK


def cmd_diff(args, out):
    store = _load([args.file])
    d = diff_interpretations(store, args.a, args.b)
    for label, items in (("shared", d.shared), ("only-a", d.only_a), ("only-b", d.only_b)):
        out.writelines(f"{label} {s}\n" for s in items)
    for c in d.conflicts:
        out.write(f"conflict {c.effect}: {c.cause_a} [{c.situation_a}] vs {c.cause_b} [{c.situation_b}]\n")
    return OK


def cmd_fmt(args, out):
    text = serialize(_load([args.file]))
    if args.stdout:
        out.write(text)
        return OK
    data = text.encode("utf-8")
    if _read(args.file) != data:
        with open(args.file, "wb") as fh:
            fh.write(data)
    return OK


def cmd_check_constraints(args, out):
    store = _load([args.file])
    if pattern_kind_of(store, args.composition) is not PatternKind.COMPOSITION:
        raise UsageError(f"{args.composition} is not a composition situation")
    cv = view_of(store, args.composition)
    violated = False
    for param, spec in cv.constraints:
        if spec is None:
            out.write(f"MALFORMED {param}\n")
            violated = True
            continue
        for component in cv.components:
            result = check_constraint(store, cv, component, spec)
            violated |= result.status is Status.VIOLATED
            detail = f" {result.detail}" if result.detail else ""
            out.write(f"{result.status.name} {param} {component}{detail}\n")
    return ERRORS if violated else OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eventf", description="Event-Model-F knowledge-graph tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="validate one or more files merged into one graph")
    v.add_argument("files", nargs="+")
    v.add_argument("--strict", action="store_true", help="warnings also fail")
    v.add_argument("--format", choices=("text", "ttl"), default="text")
    v.set_defaults(run=cmd_validate)

    q = sub.add_parser("query", help="find events")
    q.add_argument("file")
    group = q.add_mutually_exclusive_group(required=True)
    group.add_argument("--participant", metavar="IRI")
    group.add_argument("--interpretant", metavar="IRI")
    group.add_argument("--documenter", metavar="IRI")
    group.add_argument("--time-overlap", metavar="ISO/ISO")
    q.set_defaults(run=cmd_query)

    pt = sub.add_parser("parts", help="transitive parts (or wholes) of an event")
    pt.add_argument("file")
    pt.add_argument("--event", required=True, metavar="IRI")
    pt.add_argument("--interpretation", metavar="IRI")
    pt.add_argument("--direction", choices=("parts", "wholes"), default="parts")
    pt.set_defaults(run=cmd_parts)

    c = sub.add_parser("causes", help="causal ancestors or descendants of an event")
    c.add_argument("file")
    c.add_argument("--event", required=True, metavar="IRI")
    c.add_argument("--direction", choices=("ancestors", "descendants"), default="ancestors")
    c.add_argument("--interpretation", metavar="IRI")
    c.add_argument("--edges", action="store_true", help="list causal edges instead of events")
    c.set_defaults(run=cmd_causes)

    ic = sub.add_parser("infer-correlations", help="event pairs sharing a common cause")
    ic.add_argument("file")
    ic.add_argument("--interpretation", metavar="IRI")
    ic.set_defaults(run=cmd_infer_correlations)

    d = sub.add_parser("diff", help="compare two interpretations of the same event")
    d.add_argument("file")
    d.add_argument("--a", required=True, metavar="IRI")
    d.add_argument("--b", required=True, metavar="IRI")
    d.set_defaults(run=cmd_diff)

    f = sub.add_parser("fmt", help="rewrite a file in canonical form")
    f.add_argument("file")
    f.add_argument("--stdout", action="store_true", help="print instead of rewriting")
    f.set_defaults(run=cmd_fmt)

    cc = sub.add_parser("check-constraints", help="evaluate a composition's constraints")
    cc.add_argument("file")
    cc.add_argument("--composition", required=True, metavar="IRI")
    cc.set_defaults(run=cmd_check_constraints)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.run(args, out)
    except UsageError as exc:
        err.write(f"eventf: usage error: {exc}\n")
        return USAGE
    except _FileError as exc:
        err.write(f"eventf: {exc}\n")
        return LOAD_FAILURE
    except (UnknownEntity, NotAnInterpretation, NotAPatternSituation,
            DifferentInterpretedEvents, ValueError) as exc:
        err.write(f"eventf: usage error: {exc}\n")
        return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
