"""Invariant suite behind `sortlab verify` and the property acceptance
criteria: sortedness and permutation preservation across input classes,
exact construction counts, binary-insert comparison bounds, the QuickXYsort
guard bound, determinism, and pure-versus-kernel count agreement.  No
randomized-kappa estimation happens here."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .counting import Tally
from .harness import (ALGORITHMS, ExperimentConfig, derive_seed, make_input,
                      permutation, run_experiment, run_single)
from .insertion import InsertionWindow, binary_insert, binary_insert_count_bounds
from .quickxsort import GuardPolicy, PivotPolicy, SplitMix64, quickxysort
from .weakheap import WeakHeap, construct

PROPERTY_SIZES = (0, 1, 2, 3, 17, 64, 1000)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _input_classes(n: int, seed: int):
    yield "random", make_input(n, seed)
    yield "sorted", list(range(n))
    yield "reverse", list(range(n - 1, -1, -1))
    yield "all-equal", [7] * n
    yield "few-distinct", [v % 4 for v in make_input(n, seed + 1)]


def check_sorted_permutation() -> CheckResult:
    """Every algorithm x every input class yields a sorted permutation."""
    for algo in ALGORITHMS:
        for n in PROPERTY_SIZES:
            for cls, data in _input_classes(n, derive_seed(1, n, 0, 0)):
                for engine in ("pure", "kernel"):
                    work = list(data)
                    ref = sorted(work)
                    try:
                        run_single(algo, work, seed=5, engine=engine,
                                   check_depth=False)
                    except Exception as exc:  # noqa: BLE001
                        return CheckResult("sorted-permutation", False,
                                           f"{algo}/{cls}/n={n}/{engine}: {exc}")
                    if work != ref:
                        return CheckResult("sorted-permutation", False,
                                           f"{algo}/{cls}/n={n}/{engine}: "
                                           "output not a sorted permutation")
    return CheckResult("sorted-permutation", True)


def check_debug_permutation_preservation() -> CheckResult:
    """Full-array permutation checks after every partition and X-phase."""
    from .quickxsort import quickmergesort, quickweakheapsort
    for n in (64, 257, 1000):
        for cls, data in _input_classes(n, derive_seed(2, n, 0, 0)):
            for fn in (quickmergesort, quickweakheapsort, quickxysort):
                work = list(data)
                try:
                    fn(work, policy=PivotPolicy(rng_seed=11), debug=True)
                except AssertionError as exc:
                    return CheckResult("debug-permutation", False,
                                       f"{fn.__name__}/{cls}/n={n}: {exc}")
                if work != sorted(data):
                    return CheckResult("debug-permutation", False,
                                       f"{fn.__name__}/{cls}/n={n}: unsorted")
    return CheckResult("debug-permutation", True)


def check_construct_comparisons() -> CheckResult:
    """Weak heap construction uses exactly n-1 comparisons."""
    for n in (0, 1, 2, 3, 17, 64, 513, 1000):
        t = Tally()
        construct(make_input(n, derive_seed(3, n, 0, 0)), t)
        if t.comparisons != max(n - 1, 0):
            return CheckResult("construct-n-minus-1", False,
                               f"n={n}: {t.comparisons} comparisons")
    return CheckResult("construct-n-minus-1", True)


def check_half_tree_ordering() -> CheckResult:
    """Property (3) holds for all nodes after construction."""
    for n in (1, 2, 5, 17, 64, 257):
        h = construct(make_input(n, derive_seed(4, n, 0, 0)))
        if n and not h.half_tree_ordered():
            return CheckResult("half-tree-ordering", False, f"n={n}")
    return CheckResult("half-tree-ordering", True)


def check_binary_insert_counts() -> CheckResult:
    """Per-call comparison count is ceil(log2(d+1)) or one fewer, and the
    d=2 midpoint bias resolves larger-than-both in one comparison."""
    rng = SplitMix64(99)
    for d in (0, 1, 2, 3, 4, 7, 15, 16, 31, 100):
        for trial in range(20):
            data = sorted(rng.below(10 * (d + 2)) for _ in range(d))
            data.append(rng.below(10 * (d + 2)))
            phi = list(range(d + 1))
            t = Tally()
            binary_insert(InsertionWindow(data, phi, 0, d, d), t)
            lo, hi = binary_insert_count_bounds(d)
            if not lo <= t.comparisons <= hi:
                return CheckResult("binary-insert-counts", False,
                                   f"d={d}: {t.comparisons} not in [{lo},{hi}]")
    t = Tally()
    binary_insert(InsertionWindow([10, 20, 99], [0, 1, 2], 0, 2, 2), t)
    if t.comparisons != 1:
        return CheckResult("binary-insert-counts", False,
                           f"bias: larger-than-both took {t.comparisons}")
    t = Tally()
    binary_insert(InsertionWindow([10, 20, 5], [0, 1, 2], 0, 2, 2), t)
    if t.comparisons != 2:
        return CheckResult("binary-insert-counts", False,
                           f"bias: smaller-than-both took {t.comparisons}")
    return CheckResult("binary-insert-counts", True)


def check_quickxysort_guard_bound() -> CheckResult:
    """Rigged worst-pivot runs stay within n*log2(n) + 2n comparisons."""
    n = 2 ** 14
    arr = np.empty(n, np.int64)
    kernels.fill_permutation(arr, np.uint64(17))
    stats = np.zeros(3, np.int64)
    kernels.k_quickxysort(arr, np.uint64(3), kernels.PIVOT_MINIMUM,
                          kernels.BASE_INSERTION, 9, 1, stats)
    bound = n * math.log2(n) + 2 * n
    if stats[kernels.CMP] > bound or not np.all(arr[:-1] <= arr[1:]):
        return CheckResult("quickxysort-guard-bound", False,
                           f"{int(stats[kernels.CMP])} > {bound:.0f}")
    # pure engine at a smaller size, same bound shape
    data = make_input(2 ** 10, 23)
    t = quickxysort(data, policy=PivotPolicy(selection_method="minimum",
                                             rng_seed=3))
    bound = 2 ** 10 * math.log2(2 ** 10) + 2 * 2 ** 10
    if t.comparisons > bound or data != sorted(data):
        return CheckResult("quickxysort-guard-bound", False,
                           f"pure: {t.comparisons} > {bound:.0f}")
    return CheckResult("quickxysort-guard-bound", True)


def check_recursion_depth() -> CheckResult:
    """Sampled quick* runs stay within depth 8*log2(n)."""
    for algo in ("quickmergesort", "quickmergesort_mi", "quickweakheapsort",
                 "quickxysort"):
        for n in (64, 1000, 2 ** 14):
            for trial in range(3):
                data = make_input(n, derive_seed(5, n, trial, 0))
                try:
                    run_single(algo, data, seed=trial, engine="kernel",
                               check_depth=True)
                except Exception as exc:  # noqa: BLE001
                    return CheckResult("recursion-depth", False,
                                       f"{algo}/n={n}: {exc}")
    return CheckResult("recursion-depth", True)


def check_determinism() -> CheckResult:
    """Identical (algorithm, input, seed) gives bit-identical stats, across
    engines, repeated runs, and thread counts (elapsed time excluded)."""
    for algo in ALGORITHMS:
        data = make_input(257, 12345)
        runs = []
        for _ in range(2):
            for engine in ("pure", "kernel"):
                work = list(data)
                runs.append(run_single(algo, work, seed=9, engine=engine,
                                       check_depth=False).deterministic_key())
        if len(set(runs)) != 1:
            return CheckResult("determinism", False, f"{algo}: {runs}")
    base = dict(algorithm="quickmergesort", n_schedule=[512, 1024], trials=8,
                seed=77)
    one = run_experiment(ExperimentConfig(**base, threads=1))
    two = run_experiment(ExperimentConfig(**base, threads=2))
    strip = lambda recs: [(r.algorithm, r.n, r.trials, r.mean_comparisons,
                           r.stddev_comparisons, r.mean_kappa, r.mean_swaps)
                          for r in recs]
    if strip(one) != strip(two):
        return CheckResult("determinism", False, "thread count changed records")
    return CheckResult("determinism", True)


def check_engines_agree() -> CheckResult:
    """Pure and kernel engines report identical comparison/swap counts."""
    for algo in ALGORITHMS:
        for n in (2, 3, 6, 7, 17, 64, 257):
            for trial in range(2):
                iseed = derive_seed(6, n, trial, 0)
                pseed = derive_seed(6, n, trial, 1)
                d1 = make_input(n, iseed)
                d2 = list(d1)
                k1 = run_single(algo, d1, seed=pseed, engine="pure",
                                check_depth=False).deterministic_key()
                k2 = run_single(algo, d2, seed=pseed, engine="kernel",
                                check_depth=False).deterministic_key()
                if k1 != k2 or d1 != d2:
                    return CheckResult("engines-agree", False,
                                       f"{algo}/n={n}/t={trial}: {k1} != {k2}")
    buf = np.empty(500, np.int64)
    kernels.fill_permutation(buf, np.uint64(4242))
    if list(buf) != permutation(500, 4242):
        return CheckResult("engines-agree", False, "permutation streams differ")
    return CheckResult("engines-agree", True)


ALL_CHECKS = (
    check_sorted_permutation,
    check_debug_permutation_preservation,
    check_construct_comparisons,
    check_half_tree_ordering,
    check_binary_insert_counts,
    check_quickxysort_guard_bound,
    check_recursion_depth,
    check_determinism,
    check_engines_agree,
)


def verify(verbose: bool = True) -> list:
    results = []
    for fn in ALL_CHECKS:
        res = fn()
        results.append(res)
        if verbose:
            mark = "PASS" if res.ok else "FAIL"
            line = f"[{mark}] {res.name}"
            if res.detail:
                line += f": {res.detail}"
            print(line)
    return results
