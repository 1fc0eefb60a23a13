"""Executable verifiers for the upper/lower sequence and fractional-part theorems.

All checks run through exact affine-form comparisons; nothing here shortcuts
via the statements under test.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cf_engine import ConvergentTable
from .core_arith import (
    EQUAL,
    GREATER,
    LESS,
    AffineForm,
    GeneratorPair,
    LatticeError,
    compare_affine,
    f,
    g,
)


class InternalConsistencyError(LatticeError):
    """A tie that irrationality forbids was observed; indicates a bug."""


@dataclass(frozen=True)
class FracPartRecord:
    """f/g values at n together with the two fractional parts.

    z = f(n)*alpha - n and y = n - g(n)*alpha; both lie in (0, alpha) and
    z + y = alpha.
    """

    n: int
    fval: int
    gval: int
    z: AffineForm
    y: AffineForm


@dataclass
class VerifyReport:
    ok: bool
    checked: int
    failures: list[str] = field(default_factory=list)


def frac_parts(pair: GeneratorPair, n: int) -> FracPartRecord:
    fn = f(pair, n)
    gn = fn - 1
    return FracPartRecord(n, fn, gn, AffineForm(fn, n), AffineForm(-gn, -n))


def verify_fg_at_convergents(table: ConvergentTable, max_index: int) -> VerifyReport:
    """Check f and g at every primary/secondary convergent numerator.

    f(h_{2j} + t*h_{2j+1}) = k_{2j} + t*k_{2j+1} (g one less) for
    0 < t <= a_{2j+2}, and g(h_{2l-1} + t*h_{2l}) = k_{2l-1} + t*k_{2l}
    (f one more) for 0 <= t <= a_{2l+1}, over all levels within max_index.
    """
    table.extend_to(max_index + 1)
    pair = table.pair
    report = VerifyReport(ok=True, checked=0)

    def check(n: int, expected_f: int, expected_g: int, label: str) -> None:
        fn = f(pair, n)
        gn = g(pair, n)
        report.checked += 1
        if fn != expected_f or gn != expected_g:
            report.ok = False
            report.failures.append(
                f"{label}: n={n}, f={fn} (want {expected_f}), g={gn} (want {expected_g})"
            )

    for j in range(0, (max_index - 1) // 2 + 1):
        if 2 * j + 2 > max_index + 1:
            break
        for t in range(1, table.quotient(2 * j + 2) + 1):
            n = table.h(2 * j) + t * table.h(2 * j + 1)
            k = table.k(2 * j) + t * table.k(2 * j + 1)
            check(n, k, k - 1, f"even base 2j={2 * j}, t={t}")

    for l in range(1, max_index // 2 + 1):
        if 2 * l + 1 > max_index + 1:
            break
        for t in range(0, table.quotient(2 * l + 1) + 1):
            n = table.h(2 * l - 1) + t * table.h(2 * l)
            k = table.k(2 * l - 1) + t * table.k(2 * l)
            check(n, k + 1, k, f"odd base 2l-1={2 * l - 1}, t={t}")

    return report


def check_strictly_decreasing(pair: GeneratorPair, forms: list[AffineForm]) -> VerifyReport:
    """Verify forms[0] > forms[1] > ... exactly; report the first bad link."""
    report = VerifyReport(ok=True, checked=max(len(forms) - 1, 0))
    for idx in range(len(forms) - 1):
        if compare_affine(pair, forms[idx], forms[idx + 1]) != GREATER:
            report.ok = False
            report.failures.append(
                f"link {idx}: {forms[idx]} is not > {forms[idx + 1]}"
            )
            break
    return report


def _ceil_chain(table: ConvergentTable, max_index: int) -> list[tuple[int, int]]:
    """(numerator, denominator) walk h_1, h_1+h_2, ..., h_3, ... up to max_index."""
    chain = []
    l = 1
    while 2 * l + 1 <= max_index:
        for t in range(table.quotient(2 * l + 1)):
            chain.append(
                (table.h(2 * l - 1) + t * table.h(2 * l), table.k(2 * l - 1) + t * table.k(2 * l))
            )
        l += 1
    chain.append((table.h(2 * l - 1), table.k(2 * l - 1)))
    return chain


def _floor_chain(table: ConvergentTable, max_index: int) -> list[tuple[int, int]]:
    """(numerator, denominator) walk h_0, h_0+h_1, ..., h_2, ... up to max_index."""
    chain = []
    j = 0
    while 2 * j + 2 <= max_index:
        for t in range(table.quotient(2 * j + 2)):
            chain.append(
                (table.h(2 * j) + t * table.h(2 * j + 1), table.k(2 * j) + t * table.k(2 * j + 1))
            )
        j += 1
    chain.append((table.h(2 * j), table.k(2 * j)))
    return chain


def verify_monotone_fractional_chains(table: ConvergentTable, max_index: int) -> VerifyReport:
    """Check the two strictly decreasing fractional-part chains.

    Ceil parts h - k*alpha along the odd-anchored chain, floor parts
    k*alpha - h along the even-anchored chain.
    """
    table.extend_to(max(max_index, 1))
    pair = table.pair
    ceil_forms = [AffineForm(-k, -h) for h, k in _ceil_chain(table, max_index)]
    floor_forms = [AffineForm(k, h) for h, k in _floor_chain(table, max_index)]
    r1 = check_strictly_decreasing(pair, ceil_forms)
    r2 = check_strictly_decreasing(pair, floor_forms)
    return VerifyReport(
        ok=r1.ok and r2.ok,
        checked=r1.checked + r2.checked,
        failures=[f"ceil chain: {m}" for m in r1.failures]
        + [f"floor chain: {m}" for m in r2.failures],
    )


def minimal_fractional_subsequences(
    table: ConvergentTable, N: int
) -> tuple[list[int], list[int]]:
    """Strict running-minimum records of z_n and y_n over n = 1..N.

    z_n = f(n)*alpha - n with z_0 = alpha seeding the minimum; a record is a
    strictly smaller value than everything before it. Returns the two index
    lists. A tie between distinct indices is impossible for irrational alpha
    and raises InternalConsistencyError.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    pair = table.pair
    n_records: list[int] = []
    m_records: list[int] = []
    z_min = AffineForm(1, 0)  # z_0 = alpha
    y_min = None
    # Incremental f: maintain p1**fn > p2**n > p1**(fn-1).
    fn = f(pair, 1)
    pow1 = pair.p1**fn
    pow2 = pair.p2
    for n in range(1, N + 1):
        if n > 1:
            pow2 *= pair.p2
            while pow1 <= pow2:
                fn += 1
                pow1 *= pair.p1
        z = AffineForm(fn, n)
        y = AffineForm(-(fn - 1), -n)
        cz = compare_affine(pair, z, z_min)
        if cz == EQUAL:
            raise InternalConsistencyError(f"z_{n} ties the running minimum")
        if cz == LESS:
            z_min = z
            n_records.append(n)
        if y_min is None:
            y_min = y
            m_records.append(n)
        else:
            cy = compare_affine(pair, y, y_min)
            if cy == EQUAL:
                raise InternalConsistencyError(f"y_{n} ties the running minimum")
            if cy == LESS:
                y_min = y
                m_records.append(n)
    return n_records, m_records


def predicted_record_indices(table: ConvergentTable, N: int) -> tuple[list[int], list[int]]:
    """Convergent-numerator chains up to N that the records must equal.

    n-chain: walk from h_0 = 0 by h_{2i-1} repeated a_{2i} times (i >= 1),
    dropping the initial 0; m-chain: walk from h_1 by h_{2i} repeated
    a_{2i+1} times (i >= 1).
    """
    n_chain: list[int] = []
    x = 0
    i = 1
    while True:
        table.extend_to(2 * i)
        step = table.h(2 * i - 1)
        done = False
        for _ in range(table.quotient(2 * i)):
            x += step
            if x > N:
                done = True
                break
            n_chain.append(x)
        if done:
            break
        i += 1

    m_chain: list[int] = []
    x = table.h(1)
    if x <= N:
        m_chain.append(x)
    i = 1
    while True:
        table.extend_to(2 * i + 1)
        step = table.h(2 * i)
        done = False
        for _ in range(table.quotient(2 * i + 1)):
            x += step
            if x > N:
                done = True
                break
            m_chain.append(x)
        if done:
            break
        i += 1
    return n_chain, m_chain
