"""Successor/predecessor queries on the exponent grid of S = {p1^i * p2^j}.

The grid decomposes into two rectangle families A (i >= 1) and P (i >= 0)
indexed by a level and a band t; each rectangle is carried by a translation
onto its tilde partner, and that translation maps every element's
coordinates to the coordinates of its successor in sorted S. Locating a
point in the tilde partition and undoing the translation gives the
predecessor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .cf_engine import ConvergentTable
from .core_arith import BudgetExceeded, GeneratorPair, LatticeError


class NoPredecessor(LatticeError):
    """(0, 0) is the least element of S."""


class GridPoint(NamedTuple):
    i: int  # exponent of p1
    j: int  # exponent of p2


@dataclass(frozen=True)
class RectangleId:
    """Position of a grid point inside the rectangle decomposition.

    family "A": source extents i in [k_{2L-1}+t*k_{2L}, +k_{2L}-1], j < h_{2L};
    family "P": source extents i < k_{2L+1}, j in [h_{2L}+t*h_{2L+1}, +h_{2L+1}-1].
    With tilde=True the same fields describe the translated (next-number)
    partition instead.
    """

    family: str  # "A" or "P"
    level: int
    band: int
    offset_r: int
    offset_s: int
    tilde: bool = False


def translation(table: ConvergentTable, family: str, level: int, band: int) -> tuple[int, int]:
    """Translation carrying the source rectangle onto its tilde partner."""
    if family == "A":
        return (
            -(table.k(2 * level - 1) + band * table.k(2 * level)),
            table.h(2 * level - 1) + band * table.h(2 * level),
        )
    if family == "P":
        return (
            table.k(2 * level) + band * table.k(2 * level + 1),
            -(table.h(2 * level) + band * table.h(2 * level + 1)),
        )
    raise ValueError(f"unknown family {family!r}")


def rectangle_point(table: ConvergentTable, rid: RectangleId) -> GridPoint:
    """Reconstruct the unique grid point a RectangleId denotes."""
    r, s = rid.offset_r, rid.offset_s
    dx, dy = translation(table, rid.family, rid.level, rid.band)
    if rid.family == "A":
        base = GridPoint(-dx + r, s)  # (k_{2L-1} + t*k_{2L} + r, s)
        return GridPoint(r, dy + s) if rid.tilde else base
    base = GridPoint(r, -dy + s)  # (r, h_{2L} + t*h_{2L+1} + s)
    return GridPoint(dx + r, s) if rid.tilde else base


def _ensure_source_depth(table: ConvergentTable, p: GridPoint) -> None:
    table.extend_until(p.j, seq="h", parity=0)
    table.extend_until(p.i, seq="k", parity=1)


def locate(table: ConvergentTable, p: GridPoint) -> RectangleId:
    """Find the unique source rectangle containing p.

    Follows the covering argument: find the P band for p.j; the point is a
    P rectangle cell iff p.i < k_{2L+1}, otherwise it falls in the A band
    for p.i (and then p.j < h_{2L} is guaranteed).
    """
    x, y = p
    if x < 0 or y < 0:
        raise ValueError(f"grid point must be non-negative, got {p}")
    _ensure_source_depth(table, p)

    lvl = 0
    while 2 * lvl + 2 <= table.depth and table.h(2 * lvl + 2) <= y:
        lvl += 1
    t, rem = divmod(y - table.h(2 * lvl), table.h(2 * lvl + 1))
    if x < table.k(2 * lvl + 1):
        return RectangleId("P", lvl, t, x, rem)

    lvl = 1
    while 2 * lvl + 1 <= table.depth and table.k(2 * lvl + 1) <= x:
        lvl += 1
    t, rem = divmod(x - table.k(2 * lvl - 1), table.k(2 * lvl))
    assert y < table.h(2 * lvl), "covering argument violated"
    return RectangleId("A", lvl, t, rem, y)


def locate_tilde(table: ConvergentTable, p: GridPoint) -> RectangleId:
    """Find the unique translated (tilde) rectangle containing p != (0, 0)."""
    x, y = p
    if x == 0 and y == 0:
        raise NoPredecessor("(0, 0) lies in no translated rectangle")
    if x < 0 or y < 0:
        raise ValueError(f"grid point must be non-negative, got {p}")
    table.extend_until(x, seq="k", parity=0)
    table.extend_until(y, seq="h", parity=1)

    if x >= 1:
        lvl = 0
        while 2 * lvl + 2 <= table.depth and table.k(2 * lvl + 2) <= x:
            lvl += 1
        t, rem = divmod(x - table.k(2 * lvl), table.k(2 * lvl + 1))
        if y < table.h(2 * lvl + 1):
            return RectangleId("P", lvl, t, rem, y, tilde=True)

    lvl = 1
    while 2 * lvl + 1 <= table.depth and table.h(2 * lvl + 1) <= y:
        lvl += 1
    t, rem = divmod(y - table.h(2 * lvl - 1), table.h(2 * lvl))
    assert x < table.k(2 * lvl), "covering argument violated"
    return RectangleId("A", lvl, t, x, rem, tilde=True)


def next_point(table: ConvergentTable, p: GridPoint) -> GridPoint:
    """Coordinates of the successor of p1^i * p2^j in sorted S."""
    rid = locate(table, p)
    dx, dy = translation(table, rid.family, rid.level, rid.band)
    return GridPoint(p.i + dx, p.j + dy)


def prev_point(table: ConvergentTable, p: GridPoint) -> GridPoint:
    """Coordinates of the predecessor; raises NoPredecessor at (0, 0)."""
    rid = locate_tilde(table, p)
    dx, dy = translation(table, rid.family, rid.level, rid.band)
    return GridPoint(p.i - dx, p.j - dy)


def value(pair: GeneratorPair, p: GridPoint) -> int:
    """Exact integer p1**i * p2**j."""
    bits = p.i * math.log2(pair.p1) + p.j * math.log2(pair.p2)
    if bits > pair.bit_budget:
        raise BudgetExceeded(
            f"value at {tuple(p)} needs ~{int(bits)} bits, budget is {pair.bit_budget}"
        )
    return pair.p1**p.i * pair.p2**p.j
