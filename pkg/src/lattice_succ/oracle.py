"""Brute-force ground truth: sorted enumeration of S by merging.

The stream keeps one pending candidate per p2-exponent row; a new row is
opened whenever a row head with p1-exponent 0 is emitted. This gives every
element exactly once in increasing order with O(rows) memory.
"""

from __future__ import annotations

import heapq
from typing import Iterator

from .core_arith import LESS, AffineForm, GeneratorPair, ZERO_FORM, compare_affine
from .successor import GridPoint, value


class _AffineKey:
    """Heap key ordering p1^i * p2^j by i*alpha + j without forming products."""

    __slots__ = ("pair", "i", "j")

    def __init__(self, pair: GeneratorPair, i: int, j: int):
        self.pair = pair
        self.i = i
        self.j = j

    def __lt__(self, other: "_AffineKey") -> bool:
        # i1*alpha + j1 < i2*alpha + j2  iff  (i1-i2)*alpha - (j2-j1) < 0
        form = AffineForm(self.i - other.i, other.j - self.j)
        return compare_affine(self.pair, form, ZERO_FORM) == LESS


class SortedStream:
    """Single-consumer lazy enumeration of S in strictly increasing order.

    key="value" orders the frontier by the exact integers; key="affine"
    compares exponent forms instead, avoiding gigantic products during deep
    experiments.
    """

    def __init__(self, pair: GeneratorPair, key: str = "value"):
        if key not in ("value", "affine"):
            raise ValueError(f"key must be 'value' or 'affine', got {key!r}")
        self.pair = pair
        self.key = key
        self._heap: list[tuple] = [(self._key_for(0, 0), 0, 0)]

    def _key_for(self, i: int, j: int):
        if self.key == "value":
            return self.pair.p1**i * self.pair.p2**j
        return _AffineKey(self.pair, i, j)

    def __iter__(self) -> Iterator[GridPoint]:
        return self

    def __next__(self) -> GridPoint:
        _, i, j = heapq.heappop(self._heap)
        heapq.heappush(self._heap, (self._key_for(i + 1, j), i + 1, j))
        if i == 0:
            heapq.heappush(self._heap, (self._key_for(0, j + 1), 0, j + 1))
        return GridPoint(i, j)


def enumerate_sorted(pair: GeneratorPair, count: int) -> list[tuple[GridPoint, int]]:
    """First `count` elements of S as (coordinates, exact value)."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    stream = SortedStream(pair)
    out = []
    for _ in range(count):
        p = next(stream)
        out.append((p, value(pair, p)))
    return out


def naive_next(pair: GeneratorPair, p: GridPoint, key: str = "value") -> GridPoint:
    """Successor of p by fresh enumeration until value(p) is passed."""
    if key == "value":
        target = value(pair, p)
        for q in SortedStream(pair):
            if pair.p1**q.i * pair.p2**q.j > target:
                return q
    else:
        target = _AffineKey(pair, p.i, p.j)
        for q in SortedStream(pair, key="affine"):
            if target < _AffineKey(pair, q.i, q.j):
                return q
    raise AssertionError("unreachable: S is infinite")
