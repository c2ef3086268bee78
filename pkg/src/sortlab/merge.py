"""Top-down Mergesort whose temporary space is a region of the same array.

The buffer region holds foreign elements ("dummies"); all data movement is
by swap, so the array as a whole stays a permutation of its input at every
instant.  That property is what lets QuickMergesort run Mergesort inside the
array being sorted.  Merging [lo,mid) with [mid,hi) first swaps the left run
out into the buffer, then merges back to the original place; the write
pointer can never overrun the right run's read pointer because the left run
is at least as long as what remains to its left.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .counting import Tally, counted_less, counted_move, counted_swap
from .insertion import insertion_sort
from .mergeinsertion import mergeinsertion_sort


@dataclass(frozen=True)
class BaseCase:
    """Base-sorter selector: segments of size <= threshold are delegated.

    kind "none" with threshold 1 means plain Mergesort all the way down.
    """

    kind: str = "none"  # none | insertion | mergeinsertion
    threshold: int = 1
    improved: bool = True  # merge-insertion variant toggle

    @staticmethod
    def none() -> "BaseCase":
        return BaseCase("none", 1)

    @staticmethod
    def insertion(threshold: int = 9) -> "BaseCase":
        return BaseCase("insertion", threshold)

    @staticmethod
    def merge_insertion(threshold: int, improved: bool = True) -> "BaseCase":
        return BaseCase("mergeinsertion", threshold, improved)


def growing_threshold(n: int) -> int:
    """Base-case size cap 40*log10(n) used for growing merge-insertion
    base cases."""
    return max(1, int(40 * math.log10(n))) if n >= 2 else 1


def sort_base(a, lo: int, hi: int, base: BaseCase, tally: Tally) -> None:
    if hi - lo <= 1 or base.kind == "none":
        return
    if base.kind == "insertion":
        insertion_sort(a, tally, lo, hi)
    elif base.kind == "mergeinsertion":
        mergeinsertion_sort(a, improved=base.improved, tally=tally, lo=lo, hi=hi)
    else:
        raise ValueError(f"unknown base-case sorter {base.kind!r}")


@dataclass
class BufferedSegment:
    """A sortable range [lo, hi) of ``data`` plus a disjoint swap-buffer
    region [buf_lo, buf_hi) of the same array."""

    data: list
    lo: int
    hi: int
    buf_lo: int
    buf_hi: int
    base: BaseCase = field(default_factory=BaseCase.none)


def merge_with_buffer(seg: BufferedSegment, mid: int, tally: Tally) -> None:
    """Merge the sorted runs [lo, mid) and [mid, hi) using the buffer.

    The left run is swapped out first, per the buffer discipline; after the
    merge the buffer holds exactly the dummy multiset it started with.
    At most (hi - lo) - 1 comparisons.
    """
    a, lo, hi, b = seg.data, seg.lo, seg.hi, seg.buf_lo
    n1 = mid - lo
    if seg.buf_hi - b < n1:
        raise ValueError(
            f"buffer of {seg.buf_hi - b} slots cannot hold a run of {n1}")
    for i in range(n1):
        counted_swap(a, lo + i, b + i, tally)
    i, j, w = 0, mid, lo
    while i < n1 and j < hi:
        if counted_less(a[j], a[b + i], tally):  # ties take the left run
            counted_swap(a, w, j, tally)
            j += 1
        else:
            counted_swap(a, w, b + i, tally)
            i += 1
        w += 1
    while i < n1:
        counted_swap(a, w, b + i, tally)
        i += 1
        w += 1
    # j == hi or w == j here; the right-run remainder is already in place.


def mergesort_external(seg: BufferedSegment, tally: Tally | None = None) -> Tally:
    """Top-down Mergesort of [lo, hi) against a buffer of >= ceil(n/2) slots.

    The recursion stack is the only extra space beyond the buffer region.
    """
    tally = tally if tally is not None else Tally()
    need = (seg.hi - seg.lo + 1) // 2
    if seg.hi - seg.lo > max(seg.base.threshold, 1) \
            and seg.buf_hi - seg.buf_lo < need:
        raise ValueError(
            f"buffer of {seg.buf_hi - seg.buf_lo} slots is smaller than "
            f"ceil(n/2) = {need}")
    _mergesort(seg, seg.lo, seg.hi, tally)
    return tally


def _mergesort(seg: BufferedSegment, lo: int, hi: int, tally: Tally) -> None:
    n = hi - lo
    if n <= max(seg.base.threshold, 1):
        sort_base(seg.data, lo, hi, seg.base, tally)
        return
    mid = lo + (n + 1) // 2  # the left (swapped-out) run is the ceil half
    _mergesort(seg, lo, mid, tally)
    _mergesort(seg, mid, hi, tally)
    sub = BufferedSegment(seg.data, lo, hi, seg.buf_lo, seg.buf_hi, seg.base)
    merge_with_buffer(sub, mid, tally)


def mergesort(a, tally: Tally | None = None,
              base: BaseCase | None = None) -> Tally:
    """Standalone external Mergesort of a whole list.

    Appends ceil(n/2) scratch slots so the swap-buffer machinery applies
    unchanged, then truncates them again.
    """
    tally = tally if tally is not None else Tally()
    n = len(a)
    if n <= 1:
        return tally
    need = (n + 1) // 2
    work = list(a) + list(a[:need])
    seg = BufferedSegment(work, 0, n, n, n + need,
                          base if base is not None else BaseCase.none())
    mergesort_external(seg, tally)
    a[:] = work[:n]
    return tally


def mergesort_allocated(a, lo: int, hi: int, tally: Tally,
                        base: BaseCase | None = None) -> None:
    """Classic top-down Mergesort with a heap-allocated temporary.

    Same splits, same tie rule, hence the same comparison counts as the
    swap-buffer version; used as the worst-case fallback Y where sacrificing
    internality is acceptable.
    """
    if base is None:
        base = BaseCase.none()
    tmp = [None] * ((hi - lo + 1) // 2)
    _mergesort_alloc(a, lo, hi, tmp, base, tally)


def _mergesort_alloc(a, lo: int, hi: int, tmp, base: BaseCase,
                     tally: Tally) -> None:
    n = hi - lo
    if n <= max(base.threshold, 1):
        sort_base(a, lo, hi, base, tally)
        return
    mid = lo + (n + 1) // 2
    _mergesort_alloc(a, lo, mid, tmp, base, tally)
    _mergesort_alloc(a, mid, hi, tmp, base, tally)
    n1 = mid - lo
    tmp[:n1] = a[lo:mid]
    counted_move(tally, n1)
    i, j, w = 0, mid, lo
    while i < n1 and j < hi:
        if counted_less(a[j], tmp[i], tally):
            a[w] = a[j]
            j += 1
        else:
            a[w] = tmp[i]
            i += 1
        counted_move(tally)
        w += 1
    while i < n1:
        a[w] = tmp[i]
        counted_move(tally)
        i += 1
        w += 1
