"""sortlab: comparison-counting sorting laboratory.

Weak heaps, ExternalWeakHeapsort, swap-buffer Mergesort, binary
Insertionsort, Ford-Johnson MergeInsertion, and the QuickXsort construction
(QuickMergesort, QuickWeakHeapsort, QuickXYsort), all with exact comparison
accounting, plus a benchmark harness that estimates the n*log2(n) + kappa*n
constants.
"""

from .counting import (EQUAL, GREATER, LESS, SortStats, Tally, counted_compare,
                       counted_less, counted_swap, kappa)
from .insertion import InsertionWindow, binary_insert, insertion_sort
from .merge import (BaseCase, BufferedSegment, growing_threshold,
                    merge_with_buffer, mergesort, mergesort_external)
from .mergeinsertion import (BlockSchedule, TournamentState, block_boundary,
                             merge_step, mergeinsertion_sort, pair_construct)
from .quickxsort import (GuardPolicy, PivotPolicy, SplitMix64, partition,
                         quickmergesort, quickweakheapsort, quickxysort,
                         select_pivot)
from .weakheap import (WeakHeap, construct, sort_external_weakheap,
                       sort_weakheap)

__version__ = "0.1.0"

__all__ = [
    "Tally", "SortStats", "counted_compare", "counted_less", "counted_swap",
    "kappa", "LESS", "EQUAL", "GREATER",
    "WeakHeap", "construct", "sort_weakheap", "sort_external_weakheap",
    "BaseCase", "BufferedSegment", "merge_with_buffer", "mergesort",
    "mergesort_external", "growing_threshold",
    "InsertionWindow", "binary_insert", "insertion_sort",
    "TournamentState", "BlockSchedule", "block_boundary", "pair_construct",
    "merge_step", "mergeinsertion_sort",
    "PivotPolicy", "GuardPolicy", "SplitMix64", "partition", "select_pivot",
    "quickmergesort", "quickweakheapsort", "quickxysort",
]
