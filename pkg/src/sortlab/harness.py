"""Experiment driver and verification oracle.

Runs seeded trials of any algorithm in the registry, aggregates exact
comparison counts into kappa estimates (comparisons = n*log2(n) + kappa*n),
enumerates all permutations for small n, and provides the closed-form
bounds the tests check against.  Trials are reproducible: every (config
seed, n, trial index) triple derives fixed input and pivot seeds, so records
are bit-identical across runs and thread counts (elapsed times excepted;
they never take part in acceptance logic).
"""
from __future__ import annotations

import csv
import math
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Optional

import numpy as np

from . import kernels
from .counting import SortStats, Tally, kappa
from .insertion import insertion_sort
from .merge import BaseCase, mergesort
from .mergeinsertion import mergeinsertion_sort
from .quickxsort import (PivotPolicy, SplitMix64, quickmergesort,
                         quickweakheapsort, quickxysort)
from .weakheap import sort_external_weakheap, sort_weakheap

_MASK64 = (1 << 64) - 1


class ConfigError(ValueError):
    """Invalid experiment configuration (unknown algorithm, bad sizes...)."""


class InvariantViolation(AssertionError):
    """A library invariant failed during a run; the run is aborted."""


# --------------------------------------------------------------------------
# deterministic seed derivation and input generation
# --------------------------------------------------------------------------

def derive_seed(base: int, n: int, trial: int, salt: int) -> int:
    r = SplitMix64(base)
    r.state ^= (n * 0x9E3779B97F4A7C15 + trial * 0xBF58476D1CE4E5B9
                + salt * 0x94D049BB133111EB) & _MASK64
    return r.next()


def permutation(n: int, seed: int) -> list:
    """Pure twin of kernels.fill_permutation: same seed, same permutation."""
    out = list(range(n))
    rng = SplitMix64(seed)
    for i in range(n - 1):
        j = i + rng.below(n - i)
        if j != i:
            out[i], out[j] = out[j], out[i]
    return out


def make_input(n: int, seed: int, dup_factor: Optional[int] = None) -> list:
    keys = permutation(n, seed)
    if dup_factor and dup_factor > 1:
        keys = [k // dup_factor for k in keys]
    return keys


# --------------------------------------------------------------------------
# algorithm registry
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class _Algo:
    name: str
    run_pure: Callable  # (list, seed, pivot, base) -> (Tally, depth|None)
    run_kernel: Callable  # (ndarray, seed, pivot, base) -> stats ndarray


def _policy(seed: int, pivot: str) -> PivotPolicy:
    method = {"sqrt": "sample_median", "median3": "median3",
              "minimum": "minimum"}.get(pivot)
    if method is None:
        raise ConfigError(f"unknown pivot policy {pivot!r}")
    return PivotPolicy(selection_method=method, rng_seed=seed)


def _resolve_base(algo: str, n: int, base_threshold) -> BaseCase:
    """Translate the config's base_threshold knob for one algorithm."""
    if algo == "quickmergesort_mi":
        if base_threshold in (None, "grow"):
            from .merge import growing_threshold
            return BaseCase.merge_insertion(growing_threshold(n))
        return BaseCase.merge_insertion(int(base_threshold))
    if base_threshold == "grow":
        from .merge import growing_threshold
        return BaseCase.insertion(growing_threshold(n))
    if base_threshold is None:
        if algo in ("quickmergesort", "quickxysort"):
            return BaseCase.insertion(9)
        return BaseCase.none()
    thr = int(base_threshold)
    return BaseCase.insertion(thr) if thr > 1 else BaseCase.none()


def _base_ids(base: BaseCase) -> tuple[int, int, int]:
    kind = {"none": kernels.BASE_NONE, "insertion": kernels.BASE_INSERTION,
            "mergeinsertion": kernels.BASE_MERGEINSERTION}[base.kind]
    return kind, base.threshold, 1 if base.improved else 0


def _pivot_id(pivot: str) -> int:
    return {"sqrt": kernels.PIVOT_SQRT, "median3": kernels.PIVOT_MEDIAN3,
            "minimum": kernels.PIVOT_MINIMUM}[pivot]


def _pure_weakheapsort(a, seed, pivot, base):
    return sort_weakheap(a), None


def _pure_external_weakheapsort(a, seed, pivot, base):
    out = [None] * len(a)
    t = sort_external_weakheap(a, out)
    a[:] = out
    return t, None


def _pure_mergesort(a, seed, pivot, base):
    return mergesort(a, base=base), None


def _pure_insertionsort(a, seed, pivot, base):
    return insertion_sort(a), None


def _pure_mergeinsertion(a, seed, pivot, base):
    return mergeinsertion_sort(a, improved=False), None


def _pure_mergeinsertion_improved(a, seed, pivot, base):
    return mergeinsertion_sort(a, improved=True), None


def _pure_quickmergesort(a, seed, pivot, base):
    d = []
    t = quickmergesort(a, policy=_policy(seed, pivot), base=base, depth_out=d)
    return t, d[0]


def _pure_quickweakheapsort(a, seed, pivot, base):
    d = []
    t = quickweakheapsort(a, policy=_policy(seed, pivot), depth_out=d)
    return t, d[0]


def _pure_quickxysort(a, seed, pivot, base):
    d = []
    t = quickxysort(a, policy=_policy(seed, pivot), base=base, depth_out=d)
    return t, d[0]


def _kernel_stats() -> np.ndarray:
    return np.zeros(3, np.int64)


def _kernel_weakheapsort(arr, seed, pivot, base):
    stats = _kernel_stats()
    kernels.k_weakheapsort(arr, stats)
    return stats


def _kernel_external_weakheapsort(arr, seed, pivot, base):
    stats = _kernel_stats()
    out = np.empty_like(arr)
    kernels.k_external_weakheapsort(arr, out, stats)
    arr[:] = out
    return stats


def _kernel_mergesort(arr, seed, pivot, base):
    stats = _kernel_stats()
    kind, thr, imp = _base_ids(base)
    kernels.k_mergesort(arr, kind, thr, imp, stats)
    return stats


def _kernel_insertionsort(arr, seed, pivot, base):
    stats = _kernel_stats()
    kernels.k_insertionsort(arr, stats)
    return stats


def _kernel_mergeinsertion(arr, seed, pivot, base):
    stats = _kernel_stats()
    kernels.k_mergeinsertion(arr, 0, stats)
    return stats


def _kernel_mergeinsertion_improved(arr, seed, pivot, base):
    stats = _kernel_stats()
    kernels.k_mergeinsertion(arr, 1, stats)
    return stats


def _kernel_quickmergesort(arr, seed, pivot, base):
    stats = _kernel_stats()
    kind, thr, imp = _base_ids(base)
    kernels.k_quickmergesort(arr, np.uint64(seed), _pivot_id(pivot), kind,
                             thr, imp, stats)
    return stats


def _kernel_quickweakheapsort(arr, seed, pivot, base):
    stats = _kernel_stats()
    kernels.k_quickweakheapsort(arr, np.uint64(seed), _pivot_id(pivot), stats)
    return stats


def _kernel_quickxysort(arr, seed, pivot, base):
    stats = _kernel_stats()
    kind, thr, imp = _base_ids(base)
    kernels.k_quickxysort(arr, np.uint64(seed), _pivot_id(pivot), kind, thr,
                          imp, stats)
    return stats


ALGORITHMS: dict[str, _Algo] = {
    "weakheapsort": _Algo("weakheapsort", _pure_weakheapsort,
                          _kernel_weakheapsort),
    "external_weakheapsort": _Algo("external_weakheapsort",
                                   _pure_external_weakheapsort,
                                   _kernel_external_weakheapsort),
    "mergesort": _Algo("mergesort", _pure_mergesort, _kernel_mergesort),
    "insertionsort": _Algo("insertionsort", _pure_insertionsort,
                           _kernel_insertionsort),
    "mergeinsertion": _Algo("mergeinsertion", _pure_mergeinsertion,
                            _kernel_mergeinsertion),
    "mergeinsertion_improved": _Algo("mergeinsertion_improved",
                                     _pure_mergeinsertion_improved,
                                     _kernel_mergeinsertion_improved),
    "quickmergesort": _Algo("quickmergesort", _pure_quickmergesort,
                            _kernel_quickmergesort),
    "quickmergesort_mi": _Algo("quickmergesort_mi", _pure_quickmergesort,
                               _kernel_quickmergesort),
    "quickweakheapsort": _Algo("quickweakheapsort", _pure_quickweakheapsort,
                               _kernel_quickweakheapsort),
    "quickxysort": _Algo("quickxysort", _pure_quickxysort,
                         _kernel_quickxysort),
}

_DEPTH_TRACKED = {"quickmergesort", "quickmergesort_mi", "quickweakheapsort",
                  "quickxysort"}


# --------------------------------------------------------------------------
# single runs
# --------------------------------------------------------------------------

def run_single(algorithm: str, data, seed: int = 0, pivot: str = "sqrt",
               base_threshold=None, engine: str = "kernel",
               check_depth: bool = True) -> SortStats:
    """Sort ``data`` (a list or int64 array) once, returning exact stats.

    The input object is sorted in place.  Raises InvariantViolation if the
    output is not sorted or a quick* recursion is suspiciously deep.
    """
    algo = ALGORITHMS.get(algorithm)
    if algo is None:
        raise ConfigError(f"unknown algorithm {algorithm!r}")
    n = len(data)
    base = _resolve_base(algorithm, n, base_threshold)
    if engine == "pure":
        work = data
        t0 = time.perf_counter_ns()
        tally, depth = algo.run_pure(work, seed, pivot, base)
        elapsed = time.perf_counter_ns() - t0
        comparisons, swaps = tally.comparisons, tally.swaps
        out_ok = all(work[i] <= work[i + 1] for i in range(n - 1))
    elif engine == "kernel":
        work = data if isinstance(data, np.ndarray) else np.asarray(data, np.int64)
        t0 = time.perf_counter_ns()
        stats = algo.run_kernel(work, seed, pivot, base)
        elapsed = time.perf_counter_ns() - t0
        comparisons, swaps = int(stats[kernels.CMP]), int(stats[kernels.SWP])
        depth = int(stats[kernels.DEPTH]) if algorithm in _DEPTH_TRACKED else None
        if work is not data:
            data[:] = work.tolist()
        out_ok = bool(np.all(work[:-1] <= work[1:])) if n else True
    else:
        raise ConfigError(f"unknown engine {engine!r}")
    if not out_ok:
        raise InvariantViolation(f"{algorithm}: output not sorted (n={n})")
    if (check_depth and depth is not None and n >= 2
            and algorithm in _DEPTH_TRACKED):
        if depth > 8 * math.log2(n):
            raise InvariantViolation(
                f"{algorithm}: recursion depth {depth} exceeds 8*log2({n})")
    tally_out = Tally(comparisons, swaps)
    return SortStats.from_tally(n, tally_out, elapsed)


# --------------------------------------------------------------------------
# experiments
# --------------------------------------------------------------------------

@dataclass
class ExperimentConfig:
    algorithm: str
    n_schedule: list
    trials: int
    seed: int = 0
    pivot: str = "sqrt"
    base_threshold: object = None  # None | int | "grow"
    output: Optional[str] = None
    engine: str = "kernel"
    threads: int = 1
    dup_factor: Optional[int] = None


@dataclass(frozen=True)
class ExperimentRecord:
    algorithm: str
    n: int
    trials: int
    mean_comparisons: float
    stddev_comparisons: float
    mean_kappa: float
    mean_swaps: float
    mean_elapsed_ns: float


def _run_trial(cfg: ExperimentConfig, n: int, trial: int) -> tuple:
    input_seed = derive_seed(cfg.seed, n, trial, 0)
    pivot_seed = derive_seed(cfg.seed, n, trial, 1)
    if cfg.engine == "kernel":
        # same stream as make_input, drawn at kernel speed
        data = np.empty(n, np.int64)
        kernels.fill_permutation(data, np.uint64(input_seed))
        if cfg.dup_factor and cfg.dup_factor > 1:
            data //= cfg.dup_factor
    else:
        data = make_input(n, input_seed, cfg.dup_factor)
    stats = run_single(cfg.algorithm, data, seed=pivot_seed, pivot=cfg.pivot,
                       base_threshold=cfg.base_threshold, engine=cfg.engine,
                       check_depth=not cfg.dup_factor)
    return stats.comparisons, stats.swaps, stats.elapsed_ns


def run_experiment(cfg: ExperimentConfig) -> list:
    """One record per n: `trials` seeded random permutations, aggregated.

    Deterministic given cfg.seed; trial-level threading never changes the
    counts because results are keyed by trial index.
    """
    if cfg.algorithm not in ALGORITHMS:
        raise ConfigError(f"unknown algorithm {cfg.algorithm!r}")
    if cfg.trials < 1:
        raise ConfigError("trials must be >= 1")
    if any(n < 1 for n in cfg.n_schedule):
        raise ConfigError("sizes must be >= 1")
    records = []
    for n in cfg.n_schedule:
        results = [None] * cfg.trials
        if cfg.threads > 1:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                for t, res in enumerate(pool.map(
                        lambda t: _run_trial(cfg, n, t), range(cfg.trials))):
                    results[t] = res
        else:
            for t in range(cfg.trials):
                results[t] = _run_trial(cfg, n, t)
        cmps = [r[0] for r in results]
        swps = [r[1] for r in results]
        nss = [r[2] for r in results]
        mean_c = sum(cmps) / cfg.trials
        var = sum((c - mean_c) ** 2 for c in cmps) / cfg.trials
        records.append(ExperimentRecord(
            algorithm=cfg.algorithm, n=n, trials=cfg.trials,
            mean_comparisons=mean_c, stddev_comparisons=math.sqrt(var),
            mean_kappa=kappa(mean_c, n), mean_swaps=sum(swps) / cfg.trials,
            mean_elapsed_ns=sum(nss) / cfg.trials))
    if cfg.output:
        write_csv(cfg.output, records)
    return records


# --------------------------------------------------------------------------
# CSV contract
# --------------------------------------------------------------------------

CSV_HEADER = ["algo", "n", "trials", "mean_cmps", "stddev_cmps", "kappa",
              "mean_swaps", "mean_ns"]


def write_csv(path: str, records: list, append: bool = False) -> None:
    mode = "a" if append else "w"
    with open(path, mode, newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        if not append:
            w.writerow(CSV_HEADER)
        for r in records:
            w.writerow([r.algorithm, r.n, r.trials, repr(r.mean_comparisons),
                        repr(r.stddev_comparisons), repr(r.mean_kappa),
                        repr(r.mean_swaps), repr(r.mean_elapsed_ns)])


def read_csv(path: str) -> list:
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != CSV_HEADER:
            raise ConfigError(f"unexpected CSV header {header!r}")
        for row in reader:
            records.append(ExperimentRecord(
                algorithm=row[0], n=int(row[1]), trials=int(row[2]),
                mean_comparisons=float(row[3]),
                stddev_comparisons=float(row[4]), mean_kappa=float(row[5]),
                mean_swaps=float(row[6]), mean_elapsed_ns=float(row[7])))
    return records


# --------------------------------------------------------------------------
# exhaustive enumeration and closed-form oracles
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExhaustiveStats:
    algorithm: str
    n: int
    min: int
    max: int
    mean: Fraction
    counts: Counter = field(compare=False)


def exhaustive_stats(algorithm: str, n: int,
                     engine: str = "kernel") -> ExhaustiveStats:
    """Exact comparison-count statistics over all n! permutations (n <= 10).

    Seeded algorithms run with pivot seed 0 for every permutation, so the
    enumeration is deterministic.
    """
    if algorithm not in ALGORITHMS:
        raise ConfigError(f"unknown algorithm {algorithm!r}")
    if n > 10:
        raise ConfigError(f"exhaustive enumeration capped at n=10 (got {n})")
    if n < 0:
        raise ConfigError("n must be non-negative")
    counts: Counter = Counter()
    if n <= 1:
        counts[0] = max(math.factorial(n), 1)
    else:
        for perm in permutations(range(n)):
            data = list(perm)
            stats = run_single(algorithm, data, seed=0, engine=engine,
                               check_depth=False)
            counts[stats.comparisons] += 1
    total = sum(counts.values())
    mean = Fraction(sum(c * m for c, m in counts.items()), total)
    return ExhaustiveStats(algorithm=algorithm, n=n, min=min(counts),
                           max=max(counts), mean=mean, counts=counts)


def lower_bound(n: int) -> int:
    """Information-theoretic bound ceil(log2 n!) on worst-case comparisons."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (math.factorial(n) - 1).bit_length()


def mergeinsertion_worstcase_formula(n: int) -> int:
    """F(n) = sum_{k=1..n} ceil(log2(3k/4)), MergeInsertion's exact worst
    case; the k-th term is bit-exact via ceil(log2 m) = (m-1).bit_length()."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum((3 * k - 1).bit_length() - 2 for k in range(1, n + 1))
