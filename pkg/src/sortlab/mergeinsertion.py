"""Ford-Johnson MergeInsertion on a weak-heap tournament tree.

The whole input is first arranged into a tournament: pair up, the winners
pair up again, and so on.  A weak heap stores exactly this structure (every
join is one match, reverse bits record who moved where), except that at each
odd-sized round the last element sits out, so the construction performs
sum over rounds of floor(m/2) comparisons rather than n-1.

Sorting then proceeds level by level.  At level m the floor(m/2) winners
occupy chain slots 0..floor(m/2)-1 of the index array phi, already sorted by
the smaller levels.  Their partners are recovered from the tree (the
bottommost special-path descendant below each winner) and staged right after
the chain, losers of low chain slots staged last.  The partner of the chain
tail extends the chain for free; the rest are inserted by binary search in
blocks delimited by t_k = (2^(k+1) + (-1)^k) / 3, each block taken in an
order that keeps every staged element at a fixed pickup slot while the
rotations shift its neighbours underneath it.

Inserting an element of block k probes a window that ends at the current
chain end and starts just after the slot its partner held when the level
began; that window has exactly 2^k - 1 positions for complete blocks, so
the basic variant always spends k comparisons there.  The improved variant
tracks the partner's current slot instead (insertions left of it push it
right), which can shrink the window below a power of two and save one
comparison.  Only phi moves; the tree and the data never change, so the
tournament relations stay valid for the outer levels.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .counting import Tally
from .insertion import InsertionWindow, binary_insert
from .weakheap import WeakHeap


def block_boundary(k: int) -> int:
    """t_k = (2^(k+1) + (-1)^k) / 3; block k inserts b_{t_k} .. b_{t_{k-1}+1}."""
    if k < 0:
        raise ValueError("block index must be non-negative")
    return (2 ** (k + 1) + (1 if k % 2 == 0 else -1)) // 3


@dataclass
class BlockSchedule:
    """Insertion block k with its boundary t_k."""

    k: int
    t_k: int = field(init=False)

    def __post_init__(self):
        self.t_k = block_boundary(self.k)


@dataclass
class TournamentState:
    """Weak-heap tournament plus the indirection layer phi (absolute indices
    into the underlying array).  ``current_a_index`` is the improved
    variant's partner-slot bookkeeping, live only during a merge level."""

    heap: WeakHeap
    phi: list
    current_a_index: list | None = None


def pair_construct(state: TournamentState, m: int) -> None:
    """Arrange ``m`` elements into the tournament.

    Processes indices top down; the last index of every odd-sized round is
    the round's bye and is not joined, so the total comparison count is the
    sum of floor(round/2) over the rounds (equal to m-1 only for m = 2^k).
    """
    heap = state.heap
    k = m
    for i in range(m - 1, 0, -1):
        if i + 1 == k:
            if k % 2 == 0:
                heap.join(heap.d_ancestor(i), i)
            k //= 2
        else:
            heap.join(heap.d_ancestor(i), i)


def merge_step(state: TournamentState, m: int, tally: Tally,
               improved: bool = False) -> None:
    """Insert the level-m losers into the sorted chain of winners."""
    heap, phi = state.heap, state.phi
    lo = heap.lo
    half = m // 2
    nb = (m + 1) // 2          # number of losers, bye included when m is odd
    limit = m - (m & 1)        # the bye (at index m-1) is never a partner
    for l in range(half):
        phi[limit - 1 - l] = lo + heap.d_child(phi[l] - lo, limit)
    chain = half + 1           # partner of the chain tail appended for free
    if nb == 1:
        return
    apos = None
    if improved:
        # apos[j]: current chain slot of the partner of the j-th staged
        # loser; the bye (j == nb for odd m) gets -1, i.e. an open window.
        apos = [half - j for j in range(nb + 1)]
        state.current_a_index = apos
    k = 1
    t_prev = block_boundary(1)
    while True:
        k += 1
        top = min(block_boundary(k), nb)
        pickup = half + top - 1
        for j in range(top, t_prev, -1):
            f = apos[j] + 1 if improved else half + 1 - j
            w = InsertionWindow(data=heap.data, phi=phi, f=f,
                                d=chain - f, t=pickup)
            slot = binary_insert(w, tally)
            chain += 1
            if improved:
                for jj in range(2, nb + 1):
                    if apos[jj] >= slot:
                        apos[jj] += 1
        if top == nb:
            state.current_a_index = None
            return
        t_prev = top


def mergeinsertion_sort(a, improved: bool = False, tally: Tally | None = None,
                        lo: int = 0, hi: int | None = None) -> Tally:
    """Sort ``a[lo:hi]`` ascending with MergeInsertion.

    ``improved`` enables the partner-tracking variant, which never spends
    more comparisons than the basic one on the same (duplicate-free) input.
    """
    if hi is None:
        hi = len(a)
    n = hi - lo
    tally = tally if tally is not None else Tally()
    if n <= 1:
        return tally
    heap = WeakHeap(a, lo, n, tally=tally)
    state = TournamentState(heap=heap, phi=list(range(lo, hi)))
    pair_construct(state, n)
    levels = []
    m = n
    while m > 2:
        levels.append(m)
        m //= 2
    for m in reversed(levels):
        merge_step(state, m, tally, improved)
    out = [a[i] for i in state.phi]
    a[lo:hi] = out
    return tally
