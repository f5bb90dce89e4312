"""Concrete region values: time intervals, lat/lon boxes and trajectories.

All three are immutable value objects with a canonical lexical form used by
the interchange format:

* ``TimeInterval``: ``2009-06-08T00:00:00.000Z/2009-06-14T00:00:00.000Z``
* ``GeoBox``: ``min_lat,min_lon;max_lat,max_lon``
* ``Trajectory``: ``interval@box`` legs joined with ``|``
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone

from ..errors import InvalidRegion

_EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)
_MS = timedelta(milliseconds=1)
# fromisoformat on 3.10 only takes 3 or 6 fraction digits; normalise first
_FRACTION = re.compile(r"(?<=:\d\d)\.(\d+)")
_INSTANT = re.compile(r"\d{4}-\d\d-\d\dT\d\d:\d\d:\d\d(?:\.\d+)?(?:[Zz]|[+-]\d\d:\d\d)?")


def parse_instant(text: str) -> int:
    """Parse an ISO-8601 instant into integer milliseconds since the epoch.

    Naive timestamps are taken as UTC; offsets are normalised to UTC.
    Sub-millisecond precision is rejected rather than rounded.
    """
    raw = text.strip()
    if not _INSTANT.fullmatch(raw):
        raise InvalidRegion(f"not an ISO-8601 instant: {text!r}")
    if raw.endswith(("Z", "z")):
        raw = raw[:-1] + "+00:00"
    fraction = _FRACTION.search(raw)
    if fraction:
        digits = fraction.group(1)
        if digits[3:].strip("0"):
            raise InvalidRegion(f"instant finer than a millisecond: {text!r}")
        raw = raw[:fraction.start()] + "." + digits[:3].ljust(3, "0") + raw[fraction.end():]
    try:
        dt = datetime.fromisoformat(raw)
    except ValueError:
        raise InvalidRegion(f"not an ISO-8601 instant: {text!r}") from None
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return (dt - _EPOCH) // _MS


def format_instant(ms: int) -> str:
    try:
        dt = _EPOCH + ms * _MS
    except OverflowError:
        raise InvalidRegion(f"instant out of range: {ms}") from None
    return (f"{dt.year:04d}-{dt.month:02d}-{dt.day:02d}T"
            f"{dt.hour:02d}:{dt.minute:02d}:{dt.second:02d}."
            f"{dt.microsecond // 1000:03d}Z")


@dataclass(frozen=True, order=True)
class TimeInterval:
    """Closed interval ``[start, end]`` in UTC milliseconds since the epoch."""

    start: int
    end: int

    def __post_init__(self):
        for v in (self.start, self.end):
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidRegion(f"interval endpoints must be integers, got {v!r}")
        if self.start > self.end:
            raise InvalidRegion(f"interval start {self.start} after end {self.end}")

    @property
    def degenerate(self) -> bool:
        return self.start == self.end

    @classmethod
    def from_iso(cls, text: str) -> TimeInterval:
        parts = text.split("/")
        if len(parts) != 2:
            raise InvalidRegion(f"expected 'start/end', got {text!r}")
        return cls(parse_instant(parts[0]), parse_instant(parts[1]))

    @classmethod
    def from_datetimes(cls, start: datetime, end: datetime) -> TimeInterval:
        return cls.from_iso(f"{start.isoformat()}/{end.isoformat()}")

    def to_iso(self) -> str:
        return f"{format_instant(self.start)}/{format_instant(self.end)}"

    def overlaps_closed(self, other: TimeInterval) -> bool:
        """True when the closed intervals share at least one instant."""
        return self.start <= other.end and other.start <= self.end

    def __str__(self):
        return self.to_iso()


def _coord(v, lo, hi, name):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InvalidRegion(f"{name} must be a number, got {v!r}")
    v = float(v)
    if not math.isfinite(v) or not lo <= v <= hi:
        raise InvalidRegion(f"{name} {v} outside [{lo}, {hi}]")
    return v


@dataclass(frozen=True, order=True)
class GeoBox:
    """Closed longitude-latitude rectangle, no antimeridian wrapping."""

    min_lat: float
    max_lat: float
    min_lon: float
    max_lon: float

    def __post_init__(self):
        object.__setattr__(self, "min_lat", _coord(self.min_lat, -90, 90, "min_lat"))
        object.__setattr__(self, "max_lat", _coord(self.max_lat, -90, 90, "max_lat"))
        object.__setattr__(self, "min_lon", _coord(self.min_lon, -180, 180, "min_lon"))
        object.__setattr__(self, "max_lon", _coord(self.max_lon, -180, 180, "max_lon"))
        if self.min_lat > self.max_lat or self.min_lon > self.max_lon:
            raise InvalidRegion(f"box minimum exceeds maximum: {self!r}")

    @classmethod
    def from_lexical(cls, text: str) -> GeoBox:
        try:
            lo, hi = text.split(";")
            min_lat, min_lon = (float(x) for x in lo.split(","))
            max_lat, max_lon = (float(x) for x in hi.split(","))
        except ValueError:
            raise InvalidRegion(f"expected 'lat,lon;lat,lon', got {text!r}") from None
        return cls(min_lat, max_lat, min_lon, max_lon)

    def to_lexical(self) -> str:
        # repr() gives the shortest round-tripping decimal, identical on every platform
        return (f"{self.min_lat!r},{self.min_lon!r};"
                f"{self.max_lat!r},{self.max_lon!r}")

    def __str__(self):
        return self.to_lexical()


WORLD = GeoBox(-90, 90, -180, 180)


def box_contains(outer: GeoBox, inner: GeoBox) -> bool:
    """True iff ``inner`` lies inside ``outer`` on both axes (closed bounds)."""
    return (outer.min_lat <= inner.min_lat and inner.max_lat <= outer.max_lat
            and outer.min_lon <= inner.min_lon and inner.max_lon <= outer.max_lon)


@dataclass(frozen=True)
class Trajectory:
    """Ordered (interval, box) legs; legs ascend in time and never overlap.

    Consecutive legs may touch (``prev.end == next.start``).
    """

    legs: tuple

    def __post_init__(self):
        legs = tuple(tuple(leg) for leg in self.legs)
        if not legs:
            raise InvalidRegion("trajectory needs at least one leg")
        for interval, box in legs:
            if not isinstance(interval, TimeInterval) or not isinstance(box, GeoBox):
                raise InvalidRegion(f"trajectory leg must be (TimeInterval, GeoBox): {(interval, box)!r}")
        for (prev, _), (nxt, _) in zip(legs, legs[1:]):
            if prev.end > nxt.start:
                raise InvalidRegion(f"trajectory legs overlap or are out of order: {prev} then {nxt}")
        object.__setattr__(self, "legs", legs)

    @classmethod
    def from_lexical(cls, text: str) -> Trajectory:
        legs = []
        for chunk in text.split("|"):
            interval, sep, box = chunk.partition("@")
            if not sep:
                raise InvalidRegion(f"trajectory leg must be 'interval@box', got {chunk!r}")
            legs.append((TimeInterval.from_iso(interval), GeoBox.from_lexical(box)))
        return cls(tuple(legs))

    def to_lexical(self) -> str:
        return "|".join(f"{i.to_iso()}@{b.to_lexical()}" for i, b in self.legs)

    def legs_overlapping(self, interval: TimeInterval):
        return [(i, b) for i, b in self.legs if i.overlaps_closed(interval)]

    def __str__(self):
        return self.to_lexical()
