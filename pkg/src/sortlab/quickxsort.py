"""The QuickXsort combinator and its instantiations.

Partition around the median of a Theta(sqrt(n)) sample, sort one side with
an external algorithm X using the other side as its temporary area, then
recurse on the other side.  QuickMergesort prefers the larger side for X as
long as a third of the array is left as buffer; QuickWeakHeapsort runs the
external weak-heap sort on the smaller side with the other side's prefix as
output area.  QuickXYsort adds the worst-case guard: whenever the pivot
lands more than n*delta(n) off the median, the whole segment is handed to a
worst-case efficient fallback Y.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .counting import Tally, counted_less, counted_move, counted_swap
from .insertion import insertion_sort
from .merge import BaseCase, BufferedSegment, mergesort_allocated, mergesort_external
from .mergeinsertion import mergeinsertion_sort
from .weakheap import WeakHeap, external_extract_all

_MASK64 = (1 << 64) - 1

# Below twice the minimum sample size, pivot sampling degenerates; such
# segments go straight to the base-case sorter.
DIRECT_SORT_CUTOFF = 6


class SplitMix64:
    """Deterministic 64-bit stream; mirrored bit for bit by the numba
    kernels so pure and kernel runs draw identical samples."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next() % bound


def default_sample_size(n: int) -> int:
    """Largest odd integer <= ceil(sqrt(n)), capped at n."""
    if n <= 1:
        return 1
    k = math.isqrt(n - 1) + 1  # ceil(sqrt(n))
    k = min(k, n)
    if k % 2 == 0:
        k -= 1
    return max(k, 1)


def default_delta(n: int) -> float:
    return 1.0 / math.log2(n) if n > 2 else 0.25


@dataclass(frozen=True)
class PivotPolicy:
    """Sample-size rule, median-selection method, and RNG seed."""

    sample_size_rule: Optional[Callable[[int], int]] = None
    selection_method: str = "sample_median"  # sample_median | median3 | minimum
    rng_seed: int = 0


@dataclass(frozen=True)
class GuardPolicy:
    """QuickXYsort guard: switch to Y when |split - n/2| > n*delta(n)."""

    delta: Optional[Callable[[int], float]] = None
    fallback: Optional[Callable] = None  # fallback(a, lo, hi, tally)


def partition(a, lo: int, hi: int, pivot_index: int, tally: Tally) -> int:
    """Rearrange [lo, hi) so strictly smaller elements precede the pivot and
    the rest follow; exactly (hi - lo) - 1 comparisons.  Returns the pivot's
    final position."""
    last = hi - 1
    counted_swap(a, pivot_index, last, tally)
    pivot = a[last]
    store = lo
    for i in range(lo, last):
        if counted_less(a[i], pivot, tally):
            counted_swap(a, i, store, tally)
            store += 1
    counted_swap(a, store, last, tally)
    return store


def _median3_index(a, i: int, j: int, k: int, tally: Tally) -> int:
    if counted_less(a[j], a[i], tally):
        if counted_less(a[k], a[j], tally):
            return j
        return k if counted_less(a[k], a[i], tally) else i
    if counted_less(a[k], a[i], tally):
        return i
    return k if counted_less(a[k], a[j], tally) else j


def _select_inner_pivot(a, lo: int, hi: int, tally: Tally) -> int:
    """Pivot for one quickselect round: median of 3 for short ranges, the
    ninther (median of 3 medians of 3) once the range is long enough for
    nine distinct probes to pay off."""
    n = hi - lo
    if n < 50:
        return _median3_index(a, lo, lo + (n >> 1), hi - 1, tally)
    s = (n - 1) >> 3
    m0 = _median3_index(a, lo, lo + s, lo + 2 * s, tally)
    m1 = _median3_index(a, lo + 3 * s, lo + 4 * s, lo + 5 * s, tally)
    m2 = _median3_index(a, lo + 6 * s, lo + 7 * s, hi - 1, tally)
    return _median3_index(a, m0, m1, m2, tally)


def _quickselect(a, lo: int, hi: int, target: int, tally: Tally) -> None:
    """Place the element of rank target-lo at position target (in-place
    selection by partitioning)."""
    while True:
        n = hi - lo
        if n <= 1:
            return
        if n == 2:
            if counted_less(a[lo + 1], a[lo], tally):
                counted_swap(a, lo, lo + 1, tally)
            return
        pidx = _select_inner_pivot(a, lo, hi, tally)
        p = partition(a, lo, hi, pidx, tally)
        if p == target:
            return
        if target < p:
            hi = p
        else:
            lo = p + 1


def _reverse_block(a, i: int, j: int, tally: Tally) -> None:
    while i < j - 1:
        counted_swap(a, i, j - 1, tally)
        i += 1
        j -= 1


def _sample_partition(a, lo: int, hi: int, k: int, tally: Tally) -> int:
    """Partition [lo, hi) around the sample median sitting at lo + k//2.

    The selection already split the sample around its median, so only the
    n - k outside elements are compared; the sample halves are then spliced
    around the pivot's final position by block rotation (swaps, but no
    comparisons).  Sample elements equal to the pivot may stay on its left,
    which the recursion tolerates (both sides exclude the pivot slot).
    """
    t = lo + (k >> 1)
    pivot = a[t]
    store = lo + k
    for i in range(lo + k, hi):
        if counted_less(a[i], pivot, tally):
            counted_swap(a, i, store, tally)
            store += 1
    q = store - (lo + k)
    # [S< | piv | S>= | R< | R>=]  ->  [S< | R< | piv | S>= | R>=]
    mid = lo + k  # boundary between (piv | S>=) and R<
    _reverse_block(a, t, mid, tally)
    _reverse_block(a, mid, store, tally)
    _reverse_block(a, t, store, tally)
    return t + q


def select_pivot(a, lo: int, hi: int, policy: PivotPolicy, rng: SplitMix64,
                 tally: Tally) -> int:
    """Index of the pivot element chosen by the policy.

    The default draws an odd-size sample without replacement by partial
    shuffle and selects its median by quickselect; those comparisons are
    counted like any other.
    """
    pidx, _ = _select_pivot_sampled(a, lo, hi, policy, rng, tally)
    return pidx


def _select_pivot_sampled(a, lo: int, hi: int, policy: PivotPolicy,
                          rng: SplitMix64, tally: Tally) -> tuple[int, int]:
    """select_pivot plus the sample size (0 when no sample was drawn), so
    the caller can partition without re-comparing the sample."""
    n = hi - lo
    if n == 1:
        return lo, 0
    method = policy.selection_method
    if method == "median3":
        return _median3_index(a, lo, lo + (n >> 1), hi - 1, tally), 0
    if method == "minimum":
        # Adversarial choice used to exercise the QuickXYsort guard.
        m = lo
        for i in range(lo + 1, hi):
            if counted_less(a[i], a[m], tally):
                m = i
        return m, 0
    if method != "sample_median":
        raise ValueError(f"unknown pivot selection method {method!r}")
    rule = policy.sample_size_rule or default_sample_size
    k = max(1, min(rule(n), n))
    for i in range(k):
        j = i + rng.below(n - i)
        counted_swap(a, lo + i, lo + j, tally)
    target = lo + (k >> 1)
    _quickselect(a, lo, lo + k, target, tally)
    return target, k


def _pivot_split(a, lo: int, hi: int, policy: PivotPolicy, rng: SplitMix64,
                 tally: Tally) -> int:
    """Choose a pivot and partition [lo, hi) around it; returns the pivot's
    final position.  The sampled-median path skips re-comparing the sample
    elements against their own median."""
    pidx, k = _select_pivot_sampled(a, lo, hi, policy, rng, tally)
    if k > 1:
        return _sample_partition(a, lo, hi, k, tally)
    return partition(a, lo, hi, pidx, tally)


def _sort_directly(a, lo: int, hi: int, base: BaseCase, tally: Tally) -> None:
    if hi - lo <= 1:
        return
    if base.kind == "mergeinsertion":
        mergeinsertion_sort(a, improved=base.improved, tally=tally, lo=lo, hi=hi)
    else:
        # Binary insertion also covers the threshold-1 configuration, whose
        # base sorter has nothing sensible to do with a tiny segment.
        insertion_sort(a, tally, lo, hi)


def _check_permutation(a, snapshot) -> None:
    if sorted(a) != snapshot:
        raise AssertionError("array is no longer a permutation of its input")


def _mergesort_phase(a, xlo: int, xhi: int, buf_lo: int, base: BaseCase,
                     tally: Tally) -> None:
    if xhi - xlo <= 1:
        return
    need = (xhi - xlo + 1) // 2
    seg = BufferedSegment(a, xlo, xhi, buf_lo, buf_lo + need, base)
    mergesort_external(seg, tally)


def _weakheap_phase(a, xlo: int, xhi: int, out_lo: int, tally: Tally) -> None:
    """ExternalWeakHeapsort of [xlo, xhi) with the output area starting at
    out_lo (inside the other partition side).

    Each extraction swaps the minimum into the next output slot and parks
    the displaced dummy at the node whose active bit was just cleared; a
    final block swap carries the sorted run home across the pivot.  The full
    array stays a permutation of its input throughout.
    """
    m = xhi - xlo
    if m <= 1:
        return
    heap = WeakHeap(a, xlo, m, tally=tally, track_active=True)
    heap.construct()
    slot = [out_lo]

    def emit(value, deactivated):
        s = slot[0]
        dummy = a[s]
        a[s] = value
        a[xlo + deactivated] = dummy
        counted_move(tally, 2)
        slot[0] = s + 1

    external_extract_all(heap, emit)
    for i in range(m):
        counted_swap(a, xlo + i, out_lo + i, tally)


def _one_third_step(a, lo: int, hi: int, p: int, base: BaseCase, tally: Tally,
                    snapshot=None) -> tuple[int, int]:
    """One QuickMergesort step after partitioning at p: sort the larger part
    with Mergesort if the other part offers ceil(larger/2) buffer slots,
    otherwise sort the smaller part; return the still-unsorted range."""
    left_n = p - lo
    right_n = hi - p - 1
    if left_n >= right_n:
        if right_n >= (left_n + 1) // 2:
            _mergesort_phase(a, lo, p, p + 1, base, tally)
            new = (p + 1, hi)
        else:
            _mergesort_phase(a, p + 1, hi, lo, base, tally)
            new = (lo, p)
    else:
        if left_n >= (right_n + 1) // 2:
            _mergesort_phase(a, p + 1, hi, lo, base, tally)
            new = (lo, p)
        else:
            _mergesort_phase(a, lo, p, p + 1, base, tally)
            new = (p + 1, hi)
    if snapshot is not None:
        _check_permutation(a, snapshot)
    return new


def quickmergesort(a, policy: PivotPolicy | None = None,
                   base: BaseCase | None = None, tally: Tally | None = None,
                   lo: int = 0, hi: int | None = None, debug: bool = False,
                   depth_out: list | None = None) -> Tally:
    """Internal Mergesort via the QuickXsort construction."""
    if hi is None:
        hi = len(a)
    policy = policy if policy is not None else PivotPolicy()
    base = base if base is not None else BaseCase.none()
    tally = tally if tally is not None else Tally()
    rng = SplitMix64(policy.rng_seed)
    snapshot = sorted(a) if debug else None
    direct = max(base.threshold, DIRECT_SORT_CUTOFF - 1)
    depth = 0
    while hi - lo > direct:
        depth += 1
        p = _pivot_split(a, lo, hi, policy, rng, tally)
        if snapshot is not None:
            _check_permutation(a, snapshot)
        lo, hi = _one_third_step(a, lo, hi, p, base, tally, snapshot)
    _sort_directly(a, lo, hi, base, tally)
    if snapshot is not None:
        _check_permutation(a, snapshot)
    if depth_out is not None:
        depth_out.append(depth)
    return tally


def quickweakheapsort(a, policy: PivotPolicy | None = None,
                      tally: Tally | None = None, lo: int = 0,
                      hi: int | None = None, debug: bool = False,
                      depth_out: list | None = None) -> Tally:
    """QuickXsort with ExternalWeakHeapsort as X.

    The heap is always built on the side that fits into the other side's
    output area, i.e. the smaller one.
    """
    if hi is None:
        hi = len(a)
    policy = policy if policy is not None else PivotPolicy()
    tally = tally if tally is not None else Tally()
    rng = SplitMix64(policy.rng_seed)
    snapshot = sorted(a) if debug else None
    depth = 0
    while hi - lo >= DIRECT_SORT_CUTOFF:
        depth += 1
        p = _pivot_split(a, lo, hi, policy, rng, tally)
        if snapshot is not None:
            _check_permutation(a, snapshot)
        left_n = p - lo
        right_n = hi - p - 1
        if left_n <= right_n:
            _weakheap_phase(a, lo, p, p + 1, tally)
            lo = p + 1
        else:
            _weakheap_phase(a, p + 1, hi, lo, tally)
            hi = p
        if snapshot is not None:
            _check_permutation(a, snapshot)
    insertion_sort(a, tally, lo, hi)
    if snapshot is not None:
        _check_permutation(a, snapshot)
    if depth_out is not None:
        depth_out.append(depth)
    return tally


def quickxysort(a, policy: PivotPolicy | None = None,
                guard: GuardPolicy | None = None,
                base: BaseCase | None = None, tally: Tally | None = None,
                lo: int = 0, hi: int | None = None, debug: bool = False,
                depth_out: list | None = None) -> Tally:
    """QuickMergesort with a worst-case guard.

    After each partition of a segment of size n, if the split is more than
    n*delta(n) off the median the whole segment (pivot work included, hence
    the +1n in the worst-case bound) is sorted by the fallback Y; the
    default Y is Mergesort with an allocated buffer, worst case
    n*log2(n) - 0.91n.
    """
    if hi is None:
        hi = len(a)
    policy = policy if policy is not None else PivotPolicy()
    guard = guard if guard is not None else GuardPolicy()
    base = base if base is not None else BaseCase.none()
    tally = tally if tally is not None else Tally()
    delta = guard.delta or default_delta
    fallback = guard.fallback or (
        lambda arr, flo, fhi, t: mergesort_allocated(arr, flo, fhi, t))
    rng = SplitMix64(policy.rng_seed)
    snapshot = sorted(a) if debug else None
    direct = max(base.threshold, DIRECT_SORT_CUTOFF - 1)
    depth = 0
    while hi - lo > direct:
        depth += 1
        n = hi - lo
        p = _pivot_split(a, lo, hi, policy, rng, tally)
        if snapshot is not None:
            _check_permutation(a, snapshot)
        if abs((p - lo) - n / 2) > n * delta(n):
            fallback(a, lo, hi, tally)
            if snapshot is not None:
                _check_permutation(a, snapshot)
            lo = hi
            break
        lo, hi = _one_third_step(a, lo, hi, p, base, tally, snapshot)
    _sort_directly(a, lo, hi, base, tally)
    if snapshot is not None:
        _check_permutation(a, snapshot)
    if depth_out is not None:
        depth_out.append(depth)
    return tally
