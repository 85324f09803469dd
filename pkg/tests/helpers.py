"""Shared scope lists and small utilities for the test suite."""

from __future__ import annotations

# Every catalog the package ships: (type_str, b) with b meaningful only
# for A types (one catalog per 1 <= b <= l).
CATALOG_SCOPE = (
    [("A%d" % l, b) for l in range(1, 9) for b in range(1, l + 1)]
    + [("D%d" % l, None) for l in range(4, 9)]
    + [("E%d" % l, None) for l in (6, 7, 8)]
)

# The grid-reproduction scope: the explicit E grids, the D rows checked
# through both the row formulas and direct computation, and the A closed
# formula for every b.
TABLE_SCOPE = (
    [("A%d" % l, b) for l in range(2, 7) for b in range(1, l + 1)]
    + [("D%d" % l, None) for l in (4, 5, 6)]
    + [("E%d" % l, None) for l in (6, 7, 8)]
)

# One entry per underlying polynomial family (A types with default b).
TYPE16 = (
    [("A%d" % l, None) for l in range(1, 9)]
    + [("D%d" % l, None) for l in range(4, 9)]
    + [("E%d" % l, None) for l in (6, 7, 8)]
)


def type_label(type_str, b):
    return "%s b=%s" % (type_str, b) if b is not None else type_str
