"""Simple continued fraction of alpha with primary and secondary convergents.

The partial quotients are discovered by exact Stern-Brocot descent: the next
quotient a_{m+1} is the largest t for which the mediant
(h_{m-1} + t*h_m)/(k_{m-1} + t*k_m) still lies on the same side of alpha as
convergent m-1, each probe a single big-integer power comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_arith import (
    GREATER,
    LESS,
    GeneratorPair,
    LatticeError,
    compare_fraction,
)


class IndexBeyondTable(LatticeError, IndexError):
    """Requested a convergent index the table has not been extended to."""


@dataclass(frozen=True)
class SecondaryConvergent:
    """Mediant (h_base + t*h_next)/(k_base + t*k_next), 0 < t < a_{base+2}."""

    numerator: int
    denominator: int
    base_index: int
    t: int


class ConvergentTable:
    """Lazily extended table of partial quotients and primary convergents.

    Row i stores (a_i, h_i, k_i), with a_0 = 0, h_0 = 0, k_0 = 1. Rows are
    appended whole and never rewritten, so concurrent readers never observe
    a partial row; concurrent extenders must be serialized externally.
    """

    def __init__(self, pair: GeneratorPair):
        self.pair = pair
        self._rows: list[tuple[int, int, int]] = [(0, 0, 1)]

    @property
    def depth(self) -> int:
        """Highest stored convergent index."""
        return len(self._rows) - 1

    def quotient(self, i: int) -> int:
        return self._row(i)[0]

    def h(self, i: int) -> int:
        return self._row(i)[1]

    def k(self, i: int) -> int:
        return self._row(i)[2]

    def _row(self, i: int) -> tuple[int, int, int]:
        if i < 0 or i > self.depth:
            raise IndexBeyondTable(f"index {i} beyond table depth {self.depth}")
        return self._rows[i]

    @property
    def quotients(self) -> list[int]:
        return [r[0] for r in self._rows]

    @property
    def convergents(self) -> list[tuple[int, int]]:
        return [(r[1], r[2]) for r in self._rows]

    def extend_to(self, i: int) -> "ConvergentTable":
        """Ensure quotients and convergents through index i are stored."""
        while self.depth < i:
            self._append_row()
        return self

    def extend_until(self, above: int, seq: str = "k", parity: int = 1) -> "ConvergentTable":
        """Grow until the last index of the given parity has h or k > above."""
        if seq not in ("h", "k"):
            raise ValueError(f"seq must be 'h' or 'k', got {seq!r}")
        while True:
            d = self.depth
            if d % 2 != parity:
                d -= 1
            if d >= 0:
                val = self.k(d) if seq == "k" else self.h(d)
                if val > above:
                    return self
            self._append_row()

    def _append_row(self) -> None:
        m = self.depth
        _, hm, km = self._rows[m]
        if m == 0:
            hp, kp = 1, 0  # conventional convergent -1 = 1/0
        else:
            _, hp, kp = self._rows[m - 1]
        # Convergent m-1 sits below alpha at even index, above at odd.
        side_prev = LESS if (m - 1) % 2 == 0 else GREATER

        def side(t: int) -> int:
            return compare_fraction(self.pair, hp + t * hm, kp + t * km)

        # The mediants stay on side_prev exactly for 1 <= t <= a_{m+1}.
        hi = 1
        while side(2 * hi) == side_prev:
            hi *= 2
        lo = hi  # side(lo) == side_prev, side(2*hi) flipped
        hi = 2 * hi
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if side(mid) == side_prev:
                lo = mid
            else:
                hi = mid
        a = lo
        self._rows.append((a, hp + a * hm, kp + a * km))


def secondary_convergents(table: ConvergentTable, level: int) -> list[SecondaryConvergent]:
    """Mediant chain strictly between convergents `level` and `level + 2`.

    Empty when a_{level+2} == 1.
    """
    if level < 0 or level + 2 > table.depth:
        raise IndexBeyondTable(
            f"secondary convergents at level {level} need depth {level + 2}, "
            f"table has {table.depth}"
        )
    a = table.quotient(level + 2)
    h_base, k_base = table.h(level), table.k(level)
    h_next, k_next = table.h(level + 1), table.k(level + 1)
    return [
        SecondaryConvergent(h_base + t * h_next, k_base + t * k_next, level, t)
        for t in range(1, a)
    ]
