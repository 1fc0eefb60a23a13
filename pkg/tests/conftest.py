from functools import lru_cache

import pytest

from lattice_succ import ConvergentTable, validate_pair

# Pairs covering primes, a composite, and non-coprime composite generators.
PAIR_ARGS = [(2, 3), (2, 5), (3, 5), (2, 12), (6, 10)]


@lru_cache(maxsize=None)
def pair_for(p1: int, p2: int):
    return validate_pair(p1, p2)


@lru_cache(maxsize=None)
def table_for(p1: int, p2: int) -> ConvergentTable:
    # Tables are append-only, so sharing one per pair across tests is safe.
    return ConvergentTable(pair_for(p1, p2))


def safe_depth(table: ConvergentTable, target: int, k_cap: int = 100_000) -> int:
    """Extend toward `target` but stop once denominators pass k_cap.

    Keeps power comparisons inside the default bit budget for pairs whose
    continued fraction has huge partial quotients (e.g. (6, 10)).
    """
    while table.depth < target and table.k(table.depth) < k_cap:
        table.extend_to(table.depth + 1)
    return min(table.depth, target)


@pytest.fixture
def pair23():
    return pair_for(2, 3)


@pytest.fixture
def table23() -> ConvergentTable:
    return table_for(2, 3)
