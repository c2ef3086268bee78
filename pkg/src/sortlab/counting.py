"""Comparison and move accounting shared by every sort in the package.

All algorithms in this library query the element order exclusively through
`counted_less` / `counted_compare`, so the `comparisons` field of a Tally is
an exact count of pairwise order queries.  The kappa statistic is the linear
coefficient in ``comparisons = n*log2(n) + kappa*n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

LESS = -1
EQUAL = 0
GREATER = 1


@dataclass
class Tally:
    """Mutable counters owned by a single sort invocation.

    `comparisons` increases by exactly one per instrumented comparator call
    and never decreases.  `swaps` counts element exchanges and moves (index
    bookkeeping, such as permuting an index array, is not counted).
    """

    comparisons: int = 0
    swaps: int = 0


def counted_less(a, b, tally: Tally) -> bool:
    """One counted order query: is ``a < b`` under the element order."""
    tally.comparisons += 1
    return a < b


def counted_compare(a, b, tally: Tally) -> int:
    """Three-way ordering of ``a`` vs ``b``; counts as a single comparison.

    Returns LESS (-1), EQUAL (0) or GREATER (1).
    """
    tally.comparisons += 1
    if a < b:
        return LESS
    if b < a:
        return GREATER
    return EQUAL


def counted_swap(seq, i: int, j: int, tally: Tally) -> None:
    """Exchange two slots; no-op exchanges (i == j) are not counted."""
    if i != j:
        seq[i], seq[j] = seq[j], seq[i]
        tally.swaps += 1


def counted_move(tally: Tally, k: int = 1) -> None:
    """Account for ``k`` single-element moves (hole filling, shifting)."""
    tally.swaps += k


def kappa(comparisons: int, n: int) -> float:
    """Linear-term constant ``(comparisons - n*log2(n)) / n``.

    Zero for n == 1 by convention; n == 0 is rejected because the statistic
    is undefined there.
    """
    if n < 1:
        raise ValueError(f"kappa undefined for n={n}")
    if n == 1:
        return 0.0
    return (comparisons - n * math.log2(n)) / n


@dataclass(frozen=True)
class SortStats:
    """Per-run record: size, exact counts, wall time, and derived kappa."""

    n: int
    comparisons: int
    swaps: int
    elapsed_ns: int
    kappa: float

    @classmethod
    def from_tally(cls, n: int, tally: Tally, elapsed_ns: int = 0) -> "SortStats":
        k = kappa(tally.comparisons, n) if n >= 1 else 0.0
        return cls(n=n, comparisons=tally.comparisons, swaps=tally.swaps,
                   elapsed_ns=elapsed_ns, kappa=k)

    def deterministic_key(self) -> tuple:
        """All fields except elapsed time, which never takes part in
        determinism or acceptance checks."""
        return (self.n, self.comparisons, self.swaps, self.kappa)
