"""Binary insertion: the shared insert primitive of MergeInsertion and the
full binary-search Insertionsort.

Inserting into k slots costs ceil(log2 k) or ceil(log2 k) - 1 comparisons.
The search uses the floor midpoint with the strict greater-than test sending
the probe right, so when the candidate range has odd size the larger half is
the low-index side.  That bias is what MergeInsertion's average-case bound
relies on: low positions are the unlikely ones, so they sit on the longer
search paths.
"""
from __future__ import annotations

from dataclasses import dataclass

from .counting import Tally, counted_less, counted_move


@dataclass
class InsertionWindow:
    """A binary-insert call site: ``phi[f:f+d]`` indexes a sorted chain in
    ``data`` and the element indexed by ``phi[t]`` is to be inserted.

    Only ``phi`` entries move, never the data elements themselves.
    """

    data: list
    phi: list
    f: int
    d: int
    t: int


def binary_insert(w: InsertionWindow, tally: Tally) -> int:
    """Insert ``phi[t]`` into the sorted chain ``phi[f:f+d]``.

    Returns the landing slot in [f, f+d].  Uses ceil(log2(d+1)) or one fewer
    comparisons; phi moves are index bookkeeping and are not counted as
    swaps.
    """
    data, phi, f, d, t = w.data, w.phi, w.f, w.d, w.t
    # Bring the element next to the chain, shifting the gap entries right.
    for j in range(t, f + d, -1):
        phi[j - 1], phi[j] = phi[j], phi[j - 1]
    lo, hi = f, f + d
    elem = data[phi[f + d]]
    while lo < hi:
        mid = (lo + hi) // 2
        if counted_less(data[phi[mid]], elem, tally):
            lo = mid + 1
        else:
            hi = mid
    for j in range(f + d, lo, -1):
        phi[j - 1], phi[j] = phi[j], phi[j - 1]
    return lo


def binary_insert_count_bounds(d: int) -> tuple[int, int]:
    """Admissible comparison counts for a window of d sorted positions."""
    k = d + 1
    exact = (k - 1).bit_length()  # ceil(log2 k)
    return (max(exact - 1, 0), exact)


def insertion_sort(a, tally: Tally | None = None, lo: int = 0,
                   hi: int | None = None) -> Tally:
    """Sort ``a[lo:hi]`` by successive binary insertion (no indirection).

    Element k lands among the previous k-1 by binary search; shifting the
    tail right counts one move per element shifted.
    """
    if hi is None:
        hi = len(a)
    tally = tally if tally is not None else Tally()
    for end in range(lo + 1, hi):
        elem = a[end]
        loc, rc = lo, end
        while loc < rc:
            mid = (loc + rc) // 2
            if counted_less(a[mid], elem, tally):
                loc = mid + 1
            else:
                rc = mid
        if loc != end:
            counted_move(tally, end - loc)
            a[loc + 1:end + 1] = a[loc:end]
            a[loc] = elem
    return tally
