"""Regions, Allen's interval algebra and composition constraints."""
from .allen import AllenRelation, allen_relation
from .regions import (WORLD, GeoBox, TimeInterval, Trajectory, box_contains,
                      format_instant, parse_instant)

__all__ = [
    "AllenRelation", "allen_relation", "GeoBox", "TimeInterval", "Trajectory",
    "WORLD", "box_contains", "format_instant", "parse_instant",
    "COMPOSITE", "AbsoluteInterval", "ComponentRef", "ConstraintResult",
    "SpatialWithin", "SpatioTemporalWithin", "Status", "Temporal",
    "check_constraint", "participants_of",
]


def __getattr__(name):
    # constraints imports the graph module, which imports regions; load lazily
    from . import constraints
    try:
        return getattr(constraints, name)
    except AttributeError:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}") from None
