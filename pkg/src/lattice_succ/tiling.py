"""Materialized rectangle families, partition verification, and gap witnesses.

The partition verifier deliberately stays dumber than the theorem: it paints
every rectangle onto a dense window and checks each cell is covered exactly
once (the translated family leaves exactly the origin uncovered).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cf_engine import ConvergentTable
from .successor import GridPoint, next_point, value


@dataclass(frozen=True)
class Rectangle:
    """Inclusive integer extents of one rectangle of a family.

    family is "A", "P" (sources) or "A~", "P~" (translated partners).
    """

    family: str
    level: int
    band: int
    x_min: int
    x_max: int
    y_min: int
    y_max: int

    @property
    def width(self) -> int:
        return self.x_max - self.x_min + 1

    @property
    def height(self) -> int:
        return self.y_max - self.y_min + 1


@dataclass(frozen=True)
class GapWitness:
    """Consecutive pair of S spanning a large element-free integer interval."""

    level: int
    family: str
    point: GridPoint
    succ: GridPoint
    gap: int


@dataclass
class PartitionReport:
    ok: bool
    width: int
    height: int
    tilde: bool
    rectangle_count: int
    violations: list[tuple[tuple[int, int], int]]  # ((x, y), cover count)


def rectangles_in_window(
    table: ConvergentTable, W: int, H: int, tilde: bool = False
) -> list[Rectangle]:
    """All rectangles of the family-set intersecting [0, W) x [0, H).

    Full (unclipped) extents are reported; stable-sorted by family, level,
    band.
    """
    if W < 1 or H < 1:
        raise ValueError(f"window must be positive, got {W}x{H}")
    bound = max(W, H)
    table.extend_until(bound, seq="k", parity=1)
    table.extend_until(bound, seq="k", parity=0)
    table.extend_until(bound, seq="h", parity=0)
    table.extend_until(bound, seq="h", parity=1)

    rects: list[Rectangle] = []
    if not tilde:
        i = 1
        while table.k(2 * i - 1) < W:
            table.extend_to(2 * i + 1)
            for t in range(table.quotient(2 * i + 1)):
                x0 = table.k(2 * i - 1) + t * table.k(2 * i)
                if x0 >= W:
                    break
                rects.append(
                    Rectangle("A", i, t, x0, x0 + table.k(2 * i) - 1, 0, table.h(2 * i) - 1)
                )
            i += 1
        i = 0
        while table.h(2 * i) < H:
            table.extend_to(2 * i + 2)
            for t in range(table.quotient(2 * i + 2)):
                y0 = table.h(2 * i) + t * table.h(2 * i + 1)
                if y0 >= H:
                    break
                rects.append(
                    Rectangle("P", i, t, 0, table.k(2 * i + 1) - 1, y0, y0 + table.h(2 * i + 1) - 1)
                )
            i += 1
    else:
        i = 1
        while table.h(2 * i - 1) < H:
            table.extend_to(2 * i + 1)
            for t in range(table.quotient(2 * i + 1)):
                y0 = table.h(2 * i - 1) + t * table.h(2 * i)
                if y0 >= H:
                    break
                rects.append(
                    Rectangle("A~", i, t, 0, table.k(2 * i) - 1, y0, y0 + table.h(2 * i) - 1)
                )
            i += 1
        i = 0
        while table.k(2 * i) < W:
            table.extend_to(2 * i + 2)
            for t in range(table.quotient(2 * i + 2)):
                x0 = table.k(2 * i) + t * table.k(2 * i + 1)
                if x0 >= W:
                    break
                rects.append(
                    Rectangle("P~", i, t, x0, x0 + table.k(2 * i + 1) - 1, 0, table.h(2 * i + 1) - 1)
                )
            i += 1
    rects.sort(key=lambda r: (r.family, r.level, r.band))
    return rects


def verify_partition(
    table: ConvergentTable, W: int, H: int, tilde: bool = False
) -> PartitionReport:
    """Check every window cell lies in exactly one rectangle of the family-set.

    For the tilde families the origin must be covered by none.
    """
    rects = rectangles_in_window(table, W, H, tilde)
    counts = np.zeros((W, H), dtype=np.int32)
    for r in rects:
        x0, x1 = max(r.x_min, 0), min(r.x_max, W - 1)
        y0, y1 = max(r.y_min, 0), min(r.y_max, H - 1)
        if x0 <= x1 and y0 <= y1:
            counts[x0 : x1 + 1, y0 : y1 + 1] += 1
    expected = np.ones((W, H), dtype=np.int32)
    if tilde:
        expected[0, 0] = 0
    bad = np.argwhere(counts != expected)
    violations = [((int(x), int(y)), int(counts[x, y])) for x, y in bad[:20]]
    return PartitionReport(
        ok=bad.size == 0,
        width=W,
        height=H,
        tilde=tilde,
        rectangle_count=len(rects),
        violations=violations,
    )


def large_gap(table: ConvergentTable, level: int, family: str = "A") -> GapWitness:
    """Gap witness at the far corner of the last band of the given level.

    family "A" (level >= 1): point (k_{2i+1} - 1, h_{2i} - 1);
    family "P" (level >= 0): point (k_{2i+1} - 1, h_{2i+2} - 1).
    The successor follows from the rectangle translation; the gap is the
    exact integer difference of the two values.
    """
    i = level
    if family == "A":
        if i < 1:
            raise ValueError("A-family witnesses need level >= 1")
        table.extend_to(2 * i + 1)
        point = GridPoint(
            table.k(2 * i - 1) + (table.quotient(2 * i + 1) - 1) * table.k(2 * i) + table.k(2 * i) - 1,
            table.h(2 * i) - 1,
        )
    elif family == "P":
        if i < 0:
            raise ValueError("P-family witnesses need level >= 0")
        table.extend_to(2 * i + 2)
        point = GridPoint(
            table.k(2 * i + 1) - 1,
            table.h(2 * i) + (table.quotient(2 * i + 2) - 1) * table.h(2 * i + 1) + table.h(2 * i + 1) - 1,
        )
    else:
        raise ValueError(f"unknown family {family!r}")
    succ = next_point(table, point)
    gap = value(table.pair, succ) - value(table.pair, point)
    return GapWitness(level=level, family=family, point=point, succ=succ, gap=gap)
