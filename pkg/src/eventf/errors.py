"""Exception hierarchy shared by all eventf modules."""


class EventModelError(Exception):
    """Base class for every error raised by eventf."""


# -- graph -------------------------------------------------------------------

class GraphError(EventModelError):
    pass


class DuplicateIri(GraphError):
    pass


class UndeclaredPrefix(GraphError):
    pass


class InvalidIri(GraphError):
    pass


class UnknownEntity(GraphError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class KindMismatch(GraphError, TypeError):
    pass


class DomainViolation(GraphError):
    pass


class RangeViolation(GraphError):
    pass


class LiteralError(GraphError, ValueError):
    pass


# -- spacetime ---------------------------------------------------------------

class InvalidRegion(EventModelError, ValueError):
    pass


class DegenerateInterval(EventModelError, ValueError):
    pass


class NotAComponent(EventModelError):
    pass


# -- patterns ----------------------------------------------------------------

class PatternError(EventModelError, ValueError):
    pass


class EmptyParticipants(PatternError):
    pass


class DuplicateRole(PatternError):
    pass


class EmptyComponents(PatternError):
    pass


class CompositeAmongComponents(PatternError):
    pass


class SelfCause(PatternError):
    pass


class TooFewCorrelates(PatternError):
    pass


class EmptyDocumenters(PatternError):
    pass


class SelfDocumentation(PatternError):
    pass


class EmptySituations(PatternError):
    pass


class NonPatternSituation(PatternError):
    pass


class NotAPatternSituation(PatternError):
    pass


# -- reasoning ---------------------------------------------------------------

class NotAnInterpretation(EventModelError):
    pass


class DifferentInterpretedEvents(EventModelError):
    pass


# -- interchange -------------------------------------------------------------

class ParseError(EventModelError):
    """Syntax error at a 1-based ``line``/``column`` position."""

    def __init__(self, line, column, expected, found):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        super().__init__(f"{line}:{column}: expected {expected}, found {found!r}")


class LoadError(EventModelError):
    """A well-formed statement that the graph rejected (kind conflict, range, ...)."""

    def __init__(self, line, column, cause):
        self.line = line
        self.column = column
        self.cause = cause
        super().__init__(f"{line}:{column}: {type(cause).__name__}: {cause}")
