"""Allen's thirteen interval relations.

Classification compares the four endpoint pairs of two intervals and looks
the resulting sign pattern up in a table.  Every proper interval pair maps to
exactly one row; point intervals sometimes produce a pattern that no row
carries, and those are reported as ``DegenerateInterval`` instead of being
forced into a relation.
"""
from __future__ import annotations

from enum import Enum

from ..errors import DegenerateInterval


class AllenRelation(Enum):
    BEFORE = "before"
    MEETS = "meets"
    OVERLAPS = "overlaps"
    STARTS = "starts"
    DURING = "during"
    FINISHES = "finishes"
    EQUALS = "equals"
    AFTER = "after"
    MET_BY = "metBy"
    OVERLAPPED_BY = "overlappedBy"
    STARTED_BY = "startedBy"
    CONTAINS = "contains"
    FINISHED_BY = "finishedBy"

    @property
    def inverse(self) -> AllenRelation:
        return _INVERSE[self]

    @classmethod
    def parse(cls, name: str) -> AllenRelation:
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown Allen relation {name!r}; expected one of "
                             f"{', '.join(r.value for r in cls)}") from None

    def __str__(self):
        return self.value


R = AllenRelation

_INVERSE = {
    R.BEFORE: R.AFTER, R.MEETS: R.MET_BY, R.OVERLAPS: R.OVERLAPPED_BY,
    R.STARTS: R.STARTED_BY, R.DURING: R.CONTAINS, R.FINISHES: R.FINISHED_BY,
    R.EQUALS: R.EQUALS,
}
_INVERSE.update({v: k for k, v in list(_INVERSE.items())})


def _sign(x, y):
    return (x > y) - (x < y)


# (a.start ? b.start, a.start ? b.end, a.end ? b.start, a.end ? b.end)
_SIGNATURES = {
    (-1, -1, -1, -1): R.BEFORE,
    (-1, -1, 0, -1): R.MEETS,
    (-1, -1, 1, -1): R.OVERLAPS,
    (0, -1, 1, -1): R.STARTS,
    (1, -1, 1, -1): R.DURING,
    (1, -1, 1, 0): R.FINISHES,
    (0, -1, 1, 0): R.EQUALS,
    (1, 1, 1, 1): R.AFTER,
    (1, 0, 1, 1): R.MET_BY,
    (1, -1, 1, 1): R.OVERLAPPED_BY,
    (0, -1, 1, 1): R.STARTED_BY,
    (-1, -1, 1, 1): R.CONTAINS,
    (-1, -1, 1, 0): R.FINISHED_BY,
}


def allen_relation(a, b) -> AllenRelation:
    """Return the relation that holds from interval ``a`` to interval ``b``.

    >>> from eventf.spacetime import TimeInterval
    >>> allen_relation(TimeInterval(1, 3), TimeInterval(3, 5))
    <AllenRelation.MEETS: 'meets'>
    """
    key = (_sign(a.start, b.start), _sign(a.start, b.end),
           _sign(a.end, b.start), _sign(a.end, b.end))
    try:
        return _SIGNATURES[key]
    except KeyError:
        raise DegenerateInterval(
            f"no Allen relation for [{a.start}, {a.end}] vs [{b.start}, {b.end}]") from None
