"""Weak heaps: construction, join, Dutton's in-place sort, and the external
variant with active bits.

A weak heap is a binary tree in which every node stores an element no larger
than anything in its right subtree, and the root has no left child.  It is
laid out in an array ``s[0..n)`` plus one reverse bit per node:

    left child of i   = 2*i + r[i]
    right child of i  = 2*i + 1 - r[i]
    parent of i       = i // 2

Flipping ``r[i]`` exchanges the child roles, i.e. reverses the subtree in
O(1).  The distinguished ancestor of j is the first ancestor reached while
ascending from a left child; it is the nearest node known to be <= s[j].
"""
from __future__ import annotations

from array import array

from .counting import Tally, counted_less, counted_move, counted_swap


class PackedBits:
    """Bit array packed into 64-bit words (n/w extra words of memory)."""

    __slots__ = ("_words", "n")

    def __init__(self, n: int, fill: int = 0):
        self.n = n
        word = 0xFFFFFFFFFFFFFFFF if fill else 0
        self._words = array("Q", [word] * ((n + 63) >> 6))

    def get(self, i: int) -> int:
        return (self._words[i >> 6] >> (i & 63)) & 1

    def set(self, i: int, value: int) -> None:
        if value:
            self._words[i >> 6] |= 1 << (i & 63)
        else:
            self._words[i >> 6] &= ~(1 << (i & 63))

    def flip(self, i: int) -> None:
        self._words[i >> 6] ^= 1 << (i & 63)


def _forward_less(a, b, tally):
    return counted_less(a, b, tally)


def _reverse_less(a, b, tally):
    # Max-orientation: used by the in-place sort so ascending output lands
    # in place.  Still exactly one counted comparison.
    return counted_less(b, a, tally)


class WeakHeap:
    """Array-backed weak heap over ``data[lo:lo+n]``.

    The heap indexes its nodes 0..n-1 relative to ``lo``.  ``active`` bits
    exist only when requested (the external sort deactivates emptied leaves;
    inactive nodes are treated as absent children).
    """

    __slots__ = ("data", "lo", "n", "r", "active", "tally", "_less")

    def __init__(self, data, lo: int = 0, n: int | None = None, *,
                 tally: Tally | None = None, track_active: bool = False,
                 reverse: bool = False):
        self.data = data
        self.lo = lo
        self.n = len(data) - lo if n is None else n
        self.r = PackedBits(self.n)
        self.active = PackedBits(self.n, fill=1) if track_active else None
        self.tally = tally if tally is not None else Tally()
        self._less = _reverse_less if reverse else _forward_less

    # -- navigation (no element comparisons) --------------------------------

    def d_ancestor(self, j: int) -> int:
        """First ancestor reached by ascending while j is a left child."""
        if j <= 0:
            raise ValueError("the root has no distinguished ancestor")
        r = self.r
        while (j & 1) == r.get(j >> 1):
            j >>= 1
        return j >> 1

    def d_child(self, i: int, limit: int) -> int:
        """Bottommost node with index < limit whose distinguished ancestor
        is i: the right child of i followed by left children."""
        r = self.r
        x = 2 * i + 1 - r.get(i)
        while True:
            c = 2 * x + r.get(x)
            if c >= limit:
                return x
            x = c

    def _first_on_special_path(self, v: int) -> int:
        # The special path of v starts at its right child; for the root,
        # whose reverse bit never flips, that is node 1.
        return 2 * v + 1 - self.r.get(v)

    def _is_present(self, j: int, size: int) -> bool:
        if j >= size:
            return False
        return self.active is None or bool(self.active.get(j))

    # -- ordering work -------------------------------------------------------

    def join(self, i: int, j: int) -> bool:
        """Combine the weak heap rooted at j with its distinguished ancestor
        i (one comparison).  If s[j] < s[i] the elements are swapped and
        r[j] is flipped.  Returns True when a swap happened."""
        if i == j:
            raise ValueError("join requires two distinct nodes")
        d, lo = self.data, self.lo
        if self._less(d[lo + j], d[lo + i], self.tally):
            counted_swap(d, lo + i, lo + j, self.tally)
            self.r.flip(j)
            return True
        return False

    def construct(self) -> None:
        """Bottom-up construction: join every node with its distinguished
        ancestor, n-1 comparisons in total."""
        for j in range(self.n - 1, 0, -1):
            self.join(self.d_ancestor(j), j)

    # -- invariant scan (test support) --------------------------------------

    def half_tree_ordered(self) -> bool:
        """Full scan of property (3): every active non-root element is >= its
        distinguished ancestor's element."""
        d, lo = self.data, self.lo
        for j in range(1, self.n):
            if self.active is not None and not self.active.get(j):
                continue
            a = self.d_ancestor(j)
            if self._less(d[lo + j], d[lo + a], Tally()):
                return False
        return True


def construct(values, tally: Tally | None = None) -> WeakHeap:
    """Build a weak heap over ``values`` in place (exactly n-1 comparisons;
    an empty input yields an empty heap with 0 comparisons)."""
    h = WeakHeap(values, tally=tally)
    h.construct()
    return h


def sort_weakheap(a, tally: Tally | None = None, lo: int = 0,
                  hi: int | None = None) -> Tally:
    """Standard in-place WeakHeapsort (Dutton).

    Built with reversed orientation so the maximum sits at the root and the
    sorted ascending result lands in place.  Worst case is bounded by
    n*ceil(log2 n) - 2**ceil(log2 n) + n - 1 comparisons.
    """
    if hi is None:
        hi = len(a)
    n = hi - lo
    tally = tally if tally is not None else Tally()
    if n <= 1:
        return tally
    h = WeakHeap(a, lo, n, tally=tally, reverse=True)
    h.construct()
    r = h.r
    for size in range(n - 1, 0, -1):
        # Root holds the max of a[lo:lo+size+1]; park it and re-establish
        # the ordering along the special path of the shrunk heap.
        counted_swap(a, lo, lo + size, tally)
        if size < 2:
            break
        m = 1
        while True:
            c = 2 * m + r.get(m)
            if c >= size:
                break
            m = c
        while m >= 1:
            h.join(0, m)
            m >>= 1
    return tally


def _fill_hole(h: WeakHeap) -> int:
    """Fill the hole at the root after the minimum was taken out.

    The hole travels down special paths (right child once, then left
    children), each landing filled by moving the bottom element up; that
    costs zero comparisons.  The node left empty at the end is deactivated
    and its index returned.  Joins with each level's root restore the
    half-tree ordering; the bottom node of every special path needs no join
    because the element moved up from it was already <= its right subtree.
    The joins of a level touch nothing below that bottom node, so they can
    run before the hole descends further without changing any outcome.
    """
    d, lo, r, active = h.data, h.lo, h.r, h.active
    v = 0
    while True:
        c = h._first_on_special_path(v)
        if not h._is_present(c, h.n):
            active.set(v, 0)
            return v
        spine = [c]
        while True:
            x = 2 * spine[-1] + r.get(spine[-1])
            if not h._is_present(x, h.n):
                break
            spine.append(x)
        bottom = spine[-1]
        d[lo + v] = d[lo + bottom]
        counted_move(h.tally)
        for p in reversed(spine[:-1]):
            h.join(v, p)
        v = bottom


def external_extract_all(h: WeakHeap, emit) -> None:
    """Drain a constructed weak heap in ascending order.

    ``emit(value, deactivated_index)`` is called once per element with the
    current minimum and the node whose active bit was cleared while filling
    the hole (the slot where the QuickXsort embedding parks its dummy).
    """
    for _ in range(h.n):
        value = h.data[h.lo]
        deactivated = _fill_hole(h)
        emit(value, deactivated)


def sort_external_weakheap(a, out, tally: Tally | None = None, lo: int = 0,
                           hi: int | None = None, out_lo: int = 0) -> Tally:
    """ExternalWeakHeapsort: weak heap plus active bits plus an output area.

    ``out[out_lo:out_lo+n]`` receives the segment sorted ascending; the
    source slots are left holding stale values (the QuickXsort embedding in
    `sortlab.quickxsort` uses the swap discipline instead, keeping the full
    array a permutation of its input).
    """
    if hi is None:
        hi = len(a)
    n = hi - lo
    tally = tally if tally is not None else Tally()
    if n == 0:
        return tally
    h = WeakHeap(a, lo, n, tally=tally, track_active=True)
    h.construct()
    slot = [out_lo]

    def emit(value, _deactivated):
        out[slot[0]] = value
        counted_move(tally)
        slot[0] += 1

    external_extract_all(h, emit)
    return tally
