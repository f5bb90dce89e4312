"""Text interchange format: a small Turtle subset with a canonical writer.

Grammar (the wire contract, files use the ``.f.ttl`` extension)::

    document   := ( directive | statement )*
    directive  := '@prefix' PNAME_NS IRIREF '.'
    statement  := PNAME predicates '.'
    predicates := verb objects ( ';' ( verb objects )? )*
    objects    := object ( ',' object )*
    verb       := 'a' | PNAME
    object     := PNAME | STRING ( '^^' PNAME )?

``#`` starts a comment that runs to the end of the line.  Strings are
double-quoted with backslash escapes (``\\" \\\\ \\n \\r \\t \\uXXXX
\\UXXXXXXXX``) and may not span lines.  There are no blank nodes, collections,
base IRIs or language tags.

Loading checks kinds, classes and the domain/range table.  Syntax problems
raise :class:`ParseError`; statements that are well-formed but rejected by
the graph raise :class:`LoadError`.  Both carry 1-based line/column positions.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EventModelError, InvalidRegion, LoadError, ParseError, UnknownEntity
from .graph import (DATA_PROPERTY_BY_NAME, F_NS, KIND_BY_LABEL, PREFIX_RE,
                    PROPERTY_BY_NAME, QNAME_RE, DataProperty, GraphView, Kind,
                    PatternClass, Property, Store)
from .spacetime.allen import AllenRelation
from .spacetime.regions import GeoBox, TimeInterval, Trajectory

DATATYPES = {
    "timeInterval": (TimeInterval, TimeInterval.from_iso, TimeInterval.to_iso),
    "geoBox": (GeoBox, GeoBox.from_lexical, GeoBox.to_lexical),
    "trajectory": (Trajectory, Trajectory.from_lexical, Trajectory.to_lexical),
}
DATATYPE_OF = {cls: name for name, (cls, _, _) in DATATYPES.items()}


# -- lexer -------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    type: str     # PREFIX_KW IRI NAME A STRING DTYPE DOT SEMI COMMA EOF
    text: str     # raw source text
    value: object
    offset: int
    line: int
    column: int


_WORD = re.compile(r"[A-Za-z0-9_-]+(?::[A-Za-z0-9_-]*)?|:[A-Za-z0-9_-]*")
_IRI = re.compile(r"<([^\x00-\x20<>\"{}|^`\\]*)>")
_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "r": "\r", "t": "\t"}
_PUNCT = {".": "DOT", ";": "SEMI", ",": "COMMA"}


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1         # line containing line_start
        self.line_start = 0

    def where(self, offset):
        if offset < self.line_start:
            self.line, self.line_start = 1, 0
        text = self.text
        nl = text.find("\n", self.line_start)
        while 0 <= nl < offset:
            self.line += 1
            self.line_start = nl + 1
            nl = text.find("\n", self.line_start)
        return self.line, offset - self.line_start + 1

    def error(self, offset, expected, found):
        line, col = self.where(offset)
        return ParseError(line, col, expected, found)

    def _skip(self):
        text, n = self.text, len(self.text)
        while self.pos < n:
            ch = text[self.pos]
            if ch in " \t\r\n":
                self.pos += 1
            elif ch == "#":
                end = text.find("\n", self.pos)
                self.pos = n if end < 0 else end
            else:
                break

    def tokens(self):
        text = self.text
        while True:
            self._skip()
            start = self.pos
            line, col = self.where(start)
            if start >= len(text):
                yield Token("EOF", "", None, start, line, col)
                return
            ch = text[start]

            def tok(type_, end, value=None):
                self.pos = end
                return Token(type_, text[start:end], value, start, line, col)

            if ch in _PUNCT:
                yield tok(_PUNCT[ch], start + 1)
            elif ch == "^":
                if text.startswith("^^", start):
                    yield tok("DTYPE", start + 2)
                else:
                    raise self.error(start, "'^^'", text[start:start + 2])
            elif ch == "@":
                m = re.compile(r"@[A-Za-z]+").match(text, start)
                if m is None or m.group() != "@prefix":
                    raise self.error(start, "'@prefix'", m.group() if m else ch)
                yield tok("PREFIX_KW", m.end())
            elif ch == "<":
                m = _IRI.match(text, start)
                if m is None:
                    raise self.error(start, "IRI reference '<...>'", text[start:start + 20].split("\n")[0])
                yield tok("IRI", m.end(), m.group(1))
            elif ch == '"':
                yield self._string(start, line, col)
            else:
                m = _WORD.match(text, start)
                if m is None:
                    raise self.error(start, "a name, literal or punctuation", ch)
                word = m.group()
                if word == "a":
                    yield tok("A", m.end())
                elif ":" not in word:
                    raise self.error(start, "prefixed name 'prefix:local'", word)
                else:
                    prefix, _, local = word.partition(":")
                    if not PREFIX_RE.fullmatch(prefix):
                        raise self.error(start, "prefix name", word)
                    if local and not QNAME_RE.fullmatch(word):
                        raise self.error(start + len(prefix) + 1, "local name", local)
                    yield tok("NAME", m.end(), (prefix, local))

    def _string(self, start, line, col):
        text, i, out = self.text, start + 1, []
        while True:
            if i >= len(text) or text[i] in "\n\r":
                raise self.error(i, "closing '\"'", text[i:i + 1] or "end of input")
            ch = text[i]
            if ch == '"':
                self.pos = i + 1
                return Token("STRING", text[start:i + 1], "".join(out), start, line, col)
            if ch == "\\":
                esc = text[i + 1:i + 2]
                if esc in _ESCAPES:
                    out.append(_ESCAPES[esc])
                    i += 2
                    continue
                if esc in ("u", "U"):
                    width = 4 if esc == "u" else 8
                    digits = text[i + 2:i + 2 + width]
                    if len(digits) == width and re.fullmatch(r"[0-9A-Fa-f]+", digits):
                        cp = int(digits, 16)
                        if cp <= 0x10FFFF and not 0xD800 <= cp <= 0xDFFF:
                            out.append(chr(cp))
                            i += 2 + width
                            continue
                raise self.error(i, "escape sequence", text[i:i + 2])
            out.append(ch)
            i += 1


# -- parser ------------------------------------------------------------------

@dataclass(frozen=True)
class Term:
    """A resolved object position: an entity name or a (typed) literal."""

    token: Token
    qname: str | None = None        # for names
    expanded: str | None = None
    literal: str | None = None      # for strings
    datatype: Token | None = None
    datatype_iri: str | None = None


@dataclass(frozen=True)
class Statement:
    subject: Term
    verb: Token
    verb_iri: str | None            # None for 'a'
    object: Term


class _Parser:
    def __init__(self, text: str):
        self.lexer = _Lexer(text)
        self.stream = self.lexer.tokens()
        self.tok = next(self.stream)
        self.prefixes = {}          # prefix -> (namespace, token)
        self.statements = []

    def advance(self):
        tok = self.tok
        self.tok = next(self.stream)
        return tok

    def fail(self, expected, tok=None):
        tok = tok or self.tok
        found = tok.text if tok.type != "EOF" else "end of input"
        return ParseError(tok.line, tok.column, expected, found)

    def expect(self, type_, expected):
        if self.tok.type != type_:
            raise self.fail(expected)
        return self.advance()

    def run(self):
        while self.tok.type != "EOF":
            if self.tok.type == "PREFIX_KW":
                self.directive()
            else:
                self.statement()
        return self

    def directive(self):
        self.advance()
        name = self.expect("NAME", "prefix declaration 'name:'")
        prefix, local = name.value
        if local:
            raise self.fail("prefix declaration ending in ':'", name)
        iri = self.expect("IRI", "namespace IRI '<...>'")
        self.expect("DOT", "'.'")
        namespace = iri.value
        for other, (ns, _) in self.prefixes.items():
            if ns == namespace and other != prefix:
                raise self.fail(f"a namespace not already bound to '{other}:'", iri)
        current = self.prefixes.get(prefix)
        if current is not None and current[0] != namespace:
            raise self.fail(f"the namespace already bound to '{prefix}:'", iri)
        self.prefixes[prefix] = (namespace, name)

    def name(self, expected):
        tok = self.tok
        if tok.type != "NAME" or not tok.value[1]:
            raise self.fail(expected)
        prefix, local = tok.value
        if prefix not in self.prefixes:
            raise self.fail(f"declared prefix (no @prefix for '{prefix}:')")
        self.advance()
        return Term(tok, qname=tok.text, expanded=self.prefixes[prefix][0] + local)

    def statement(self):
        subject = self.name("subject name or '@prefix'")
        while True:
            verb = self.tok
            if verb.type == "A":
                self.advance()
                verb_iri = None
            else:
                verb_iri = self.name("predicate ('a' or prefixed name)").expanded
            while True:
                self.statements.append(Statement(subject, verb, verb_iri, self.object()))
                if self.tok.type != "COMMA":
                    break
                self.advance()
            if self.tok.type == "SEMI":
                while self.tok.type == "SEMI":
                    self.advance()
                if self.tok.type == "DOT":
                    break
                continue
            break
        self.expect("DOT", "';', ',' or '.'")

    def object(self):
        tok = self.tok
        if tok.type == "STRING":
            self.advance()
            if self.tok.type == "DTYPE":
                self.advance()
                dt = self.name("datatype name")
                return Term(tok, literal=tok.value, datatype=dt.token, datatype_iri=dt.expanded)
            return Term(tok, literal=tok.value)
        return self.name("object (prefixed name or string)")


def _vocab(iri):
    return iri[len(F_NS):] if iri is not None and iri.startswith(F_NS) else None


def _decode(text):
    if isinstance(text, (bytes, bytearray)):
        try:
            return bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            head = bytes(text[:exc.start])
            line = head.count(b"\n") + 1
            column = len(head[head.rfind(b"\n") + 1:].decode("utf-8", "replace")) + 1
            raise ParseError(line, column, "UTF-8 text", repr(bytes(text[exc.start:exc.end]))) from None
    if text.startswith("﻿"):
        text = text[1:]
    return text


def parse_statements(text):
    """Syntax-only pass: returns ``(prefixes, statements)``."""
    p = _Parser(_decode(text)).run()
    return {k: ns for k, (ns, _) in p.prefixes.items()}, p.statements, p


# -- loader ------------------------------------------------------------------

def _load_error(tok, exc):
    return LoadError(tok.line, tok.column, exc)


def _bind_prefixes(store, declared):
    """Map each document prefix onto a store prefix for the same namespace.

    Prefix labels are document-local: a namespace the store already knows keeps
    the store's label, and a label taken by another namespace gets a numbered
    one (``ex`` becomes ``ex2``).
    """
    by_ns = {ns: p for p, ns in store.prefixes.items()}
    rename = {}
    for prefix, (ns, tok) in declared.items():
        if ns in by_ns:
            rename[prefix] = by_ns[ns]
            continue
        label, n = prefix, 2
        while label in store.prefixes:
            label, n = f"{prefix}{n}", n + 1
        try:
            store.declare_prefix(label, ns)
        except EventModelError as exc:
            raise _load_error(tok, exc) from None
        by_ns[ns] = rename[prefix] = label
    return rename


def parse(text, store: Store | None = None) -> Store:
    """Parse a document into a new store (or merge it into ``store``)."""
    _, statements, parser = parse_statements(text)
    store = store if store is not None else Store()
    rename = _bind_prefixes(store, parser.prefixes)

    def q(term):
        prefix, local = term.token.value
        return f"{rename[prefix]}:{local}"

    types, edges, literals = {}, [], []
    for st in statements:
        if st.verb_iri is None:
            name = _vocab(st.object.expanded)
            kind = KIND_BY_LABEL.get(name)
            cls = PatternClass.by_label(name) if name else None
            if kind is None and cls is None:
                raise ParseError(st.object.token.line, st.object.token.column,
                                 "a kind or pattern class (f:Event, f:Cause, ...)", st.object.token.text)
            types.setdefault(q(st.subject), []).append((st, kind, cls))
            continue
        name = _vocab(st.verb_iri)
        if name in PROPERTY_BY_NAME:
            if st.object.qname is None:
                raise ParseError(st.object.token.line, st.object.token.column,
                                 "entity name", st.object.token.text)
            edges.append((st, PROPERTY_BY_NAME[name]))
        elif name in DATA_PROPERTY_BY_NAME:
            prop = DATA_PROPERTY_BY_NAME[name]
            literals.append((st, prop, _literal_value(st, prop)))
        else:
            raise ParseError(st.verb.line, st.verb.column, "a known property", st.verb.text)

    for qname in sorted(types):
        entries = types[qname]
        kinds = [(st, k) for st, k, _ in entries if k is not None]
        classes = [(st, c) for st, _, c in entries if c is not None]
        for group, what in ((kinds, "kind"), (classes, "pattern class")):
            distinct = {v for _, v in group}
            if len(distinct) > 1:
                st = next(st for st, v in group if v != group[0][1])
                raise _load_error(st.object.token, ValueError(
                    f"{qname} given conflicting {what}s: {', '.join(sorted(str(v) for v in distinct))}"))
        cls = classes[0][1] if classes else None
        kind = kinds[0][1] if kinds else cls.default_kind
        if qname in store and store.kind(qname) is kind and store.pattern_class(qname) is cls:
            continue    # identical declaration from an earlier document: merge
        try:
            store.new_entity(qname, kind, cls)
        except EventModelError as exc:
            raise _load_error(entries[0][0].subject.token, exc) from None

    for st, prop in edges:
        for term in (st.subject, st.object):
            if q(term) not in store:
                raise _load_error(term.token, UnknownEntity(f"{q(term)} has no kind assertion"))
        try:
            store.assert_edge(q(st.subject), prop, q(st.object))
        except EventModelError as exc:
            raise _load_error(st.verb, exc) from None

    for st, prop, value in literals:
        if q(st.subject) not in store:
            raise _load_error(st.subject.token, UnknownEntity(f"{q(st.subject)} has no kind assertion"))
        try:
            store.set_literal(q(st.subject), prop, value)
        except EventModelError as exc:
            raise _load_error(st.object.token, exc) from None
    return store


def _literal_value(st, prop):
    term = st.object
    tok = term.token
    if term.literal is None:
        raise ParseError(tok.line, tok.column, "string literal", tok.text)
    if prop is DataProperty.VALUE:
        dtype = _vocab(term.datatype_iri)
        if dtype not in DATATYPES:
            where = term.datatype or tok
            raise ParseError(where.line, where.column,
                             "typed literal ^^f:timeInterval|f:geoBox|f:trajectory",
                             where.text if term.datatype else tok.text)
        try:
            return DATATYPES[dtype][1](term.literal)
        except InvalidRegion as exc:
            raise ParseError(tok.line, tok.column, f"{dtype} lexical form ({exc})", tok.text) from None
    if term.datatype is not None:
        raise ParseError(term.datatype.line, term.datatype.column, "plain string literal", term.datatype.text)
    if prop is DataProperty.RELATION:
        try:
            return AllenRelation(term.literal)
        except ValueError:
            raise ParseError(tok.line, tok.column, "Allen relation name", tok.text) from None
    return term.literal


def load(path, store: Store | None = None) -> Store:
    with open(path, "rb") as fh:
        return parse(fh.read(), store)


# -- writer ------------------------------------------------------------------

def quote(text: str) -> str:
    out = ['"']
    for ch in text:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def _literal_text(prop, value):
    if prop is DataProperty.VALUE:
        name = DATATYPE_OF[type(value)]
        return f"{quote(DATATYPES[name][2](value))}^^f:{name}"
    if prop is DataProperty.RELATION:
        return quote(value.value)
    return quote(value)


def serialize(view: GraphView) -> str:
    """Canonical text for the graph content; equal content gives equal bytes."""
    lines = [f"@prefix {p}: <{ns}> ." for p, ns in sorted(view.prefixes.items())]
    # the vocabulary is always written as f:, whatever else is declared
    blocks = []
    for subject in sorted(view.entities(), key=view.expand):
        types = [f"f:{view.kind(subject).value}"]
        cls = view.pattern_class(subject)
        if cls is not None:
            types.append(f"f:{cls.label}")
        preds = [f"a {', '.join(types)}"]
        for prop in Property:
            objs = view.objects(subject, prop)
            if objs:
                preds.append(f"f:{prop.value} {', '.join(sorted(objs, key=view.expand))}")
        for _, prop, value in view.literals(subject):
            preds.append(f"f:{prop.value} {_literal_text(prop, value)}")
        blocks.append(f"{subject} " + " ;\n    ".join(preds) + " .")
    text = "\n".join(lines) + "\n"
    if blocks:
        text += "\n" + "\n\n".join(blocks) + "\n"
    return text


def dump(view: GraphView, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(view))


# -- validation reports ------------------------------------------------------

REPORT_NS = "urn:eventf:report:"


def serialize_report(report, prefixes) -> str:
    """Write a ValidationReport in the interchange syntax.

    ``prefixes`` must cover every prefix used by the violating entities
    (normally ``store.prefixes``).
    """
    decl = dict(prefixes)
    decl["f-report"] = REPORT_NS
    lines = [f"@prefix {p}: <{ns}> ." for p, ns in sorted(decl.items())]
    blocks = [f"f-report:report a f:ValidationReport ;\n    f:target {quote(report.target)} ."]
    for i, v in enumerate(report.violations, 1):
        blocks.append(
            f"f-report:violation-{i} a f:Violation ;\n"
            f"    f:code {quote(v.code)} ;\n"
            f"    f:severity {quote(v.severity.value)} ;\n"
            f"    f:message {quote(v.message)} ;\n"
            f"    f:entity {', '.join(v.entities)} .")
    return "\n".join(lines) + "\n\n" + "\n\n".join(blocks) + "\n"


def parse_report(text):
    """Inverse of :func:`serialize_report`."""
    from .validation import Severity, ValidationReport, Violation

    _, statements, _ = parse_statements(text)
    fields = {}
    for st in statements:
        fields.setdefault(st.subject.qname, []).append(st)
    target, violations = None, []
    for subject in sorted(fields, key=lambda q: (len(q), q)):
        sts = fields[subject]
        types = {_vocab(st.object.expanded) for st in sts if st.verb_iri is None}
        values = {}
        for st in sts:
            if st.verb_iri is not None:
                values.setdefault(_vocab(st.verb_iri), []).append(st.object)
        if "ValidationReport" in types:
            target = values["target"][0].literal
        elif "Violation" in types:
            violations.append(Violation(
                values["code"][0].literal, Severity(values["severity"][0].literal),
                values["message"][0].literal, tuple(t.qname for t in values["entity"])))
        else:
            tok = sts[0].subject.token
            raise ParseError(tok.line, tok.column, "f:ValidationReport or f:Violation", tok.text)
    return ValidationReport(target or "store", tuple(violations))
