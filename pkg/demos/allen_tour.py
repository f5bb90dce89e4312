"""The thirteen interval relations on a single timeline.

Each line places a second interval against a fixed reference and prints
the relation that holds, with its inverse.  Degenerate intervals (points)
are accepted where a relation can be read with closed endpoints.

    python3 demos/allen_tour.py
"""
from eventf import TimeInterval, allen_relation
from eventf.errors import DegenerateInterval

REFERENCE = TimeInterval(10, 20)
PROBES = [(2, 6), (4, 10), (6, 14), (10, 14), (12, 16), (14, 20), (10, 20),
          (10, 26), (6, 24), (6, 20), (16, 24), (20, 26), (24, 28)]


def bar(t, width=30):
    return "".join("#" if t.start <= x < t.end else "." for x in range(width))


print(f"{'':<14}{bar(REFERENCE)}  reference\n")
for start, end in PROBES:
    probe = TimeInterval(start, end)
    rel = allen_relation(probe, REFERENCE)
    print(f"{str(rel):<14}{bar(probe)}  inverse: {rel.inverse}")

print("\npoints against the reference:")
for t in (5, 10, 15, 20, 25):
    try:
        print(f"  {t:>2}: {allen_relation(TimeInterval(t, t), REFERENCE)}")
    except DegenerateInterval as exc:
        print(f"  {t:>2}: {exc}")
