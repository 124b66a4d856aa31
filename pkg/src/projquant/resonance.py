"""Resonant and critical shift values.

A shift is resonant when two Casimir eigenvalues of different total degrees
coincide; the witnessing shift is determined by the labels because the
quadratic terms in the shift cancel.  A resonance (i, p; j, q) is critical
when additionally 0 <= p - q <= i - j, the condition under which the
degree-lowering correction can actually reach the colliding block.

Criticality verdicts are complete: `critical_lower_bound` is non-decreasing
and unbounded in the degree, so a finite scan certifies that no critical
tuple exists beyond the returned bound.  Resonance verdicts are only
complete up to the enumeration cap, which the classification result records
(resonances exist at unbounded order, e.g. shift 0 in dimension two via the
tuple (7,3;6,0)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .casimir import LabelRangeError, check_label
from .poly import as_fraction


@dataclass(frozen=True, order=True)
class ResonanceTuple:
    i: int
    p: int
    j: int
    q: int
    delta: Fraction
    critical: bool


def resonant_delta(n: int, i: int, p: int, j: int, q: int) -> Fraction:
    """The unique shift at which the (i,p) and (j,q) eigenvalues agree.

    Closed form obtained by cancelling the shift-quadratic terms; it is
    validated against the defining eigenvalue equality in the tests."""
    check_label(n, i, p)
    check_label(n, j, q)
    if i <= j:
        raise LabelRangeError(f"need i > j, got i={i}, j={j}")
    numerator = (i * i - j * j + (n - p) * i - (n - q) * j
                 + p * (p - 1) - q * (q - 1))
    return Fraction(numerator, (n + 1) * (i - j))


def is_critical(i: int, p: int, j: int, q: int) -> bool:
    return 0 <= p - q <= i - j


def _max_tableau(n: int, i: int) -> int:
    return 0 if n == 1 else i // 2


def critical_lower_bound(n: int, i: int) -> Fraction:
    """Lower bound for every critical shift witnessed at degree i.

    Equals the resonant shift of (i, floor(i/2); 0, 0); in dimension one the
    tableau label is pinned to 0 and the bound (i+1)/2 still dominates all
    resonances (i, 0; j, 0)."""
    if i < 1:
        raise ValueError("degree must be >= 1")
    return resonant_delta(n, i, _max_tableau(n, i), 0, 0)


def critical_bound_index(n: int, delta) -> int:
    """Smallest degree beyond which no critical tuple can reach this shift."""
    d = as_fraction(delta)
    i = 1
    while critical_lower_bound(n, i) <= d:
        i += 1
    return i


def one_dimensional_resonances(i: int, j: int) -> Fraction:
    """Resonant shifts in dimension one: 1 + (i + j - 1)/2, all critical."""
    if i <= j or j < 0:
        raise LabelRangeError(f"need i > j >= 0, got i={i}, j={j}")
    return 1 + Fraction(i + j - 1, 2)


def _tuples_at(n: int, delta: Fraction, max_i: int) -> list[ResonanceTuple]:
    found = []
    for i in range(1, max_i + 1):
        for p in range(_max_tableau(n, i) + 1):
            for j in range(i):
                for q in range(_max_tableau(n, j) + 1):
                    if resonant_delta(n, i, p, j, q) == delta:
                        found.append(ResonanceTuple(
                            i, p, j, q, delta, is_critical(i, p, j, q)))
    return found


@dataclass(frozen=True)
class ShiftClassification:
    delta: Fraction
    max_order: int               # resonance verdict complete up to this cap
    critical_bound: int          # criticality verdict complete, certified
    tuples: tuple[ResonanceTuple, ...]

    @property
    def kind(self) -> str:
        if any(t.critical for t in self.tuples):
            return "critical"
        if self.tuples:
            return "resonant"
        return "generic"


def classify_shift(n: int, delta, max_order: int) -> ShiftClassification:
    """Enumerate witnessing tuples up to max(max_order, critical bound)."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    d = as_fraction(delta)
    bound = critical_bound_index(n, d)
    cap = max(max_order, bound)
    return ShiftClassification(d, cap, bound, tuple(_tuples_at(n, d, cap)))


def critical_values_in_interval(n: int, lo, hi) -> list[tuple[Fraction, list[ResonanceTuple]]]:
    """Complete list of critical shifts in [lo, hi], grouped by value.

    Completeness: a critical tuple at degree i has shift at least
    critical_lower_bound(n, i), so degrees at and beyond the bound index for
    hi cannot contribute."""
    lo = as_fraction(lo)
    hi = as_fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    grouped: dict[Fraction, list[ResonanceTuple]] = {}
    for i in range(1, critical_bound_index(n, hi)):
        for p in range(_max_tableau(n, i) + 1):
            for j in range(i):
                for q in range(_max_tableau(n, j) + 1):
                    if not is_critical(i, p, j, q):
                        continue
                    d = resonant_delta(n, i, p, j, q)
                    if lo <= d <= hi:
                        grouped.setdefault(d, []).append(ResonanceTuple(
                            i, p, j, q, d, True))
    return sorted(grouped.items())
