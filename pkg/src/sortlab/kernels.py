"""numba kernels for the benchmark harness.

Each kernel re-implements one of the pure-Python sorts over int64 keys and
tallies comparisons/swaps in a 3-slot stats array [comparisons, swaps,
depth].  Control flow, tie rules, RNG draws and no-op-swap skipping mirror
the pure code exactly, so a kernel run and a pure run of the same
(algorithm, input, seed) produce identical counts; tests enforce that.
"""
from __future__ import annotations

import numpy as np
from numba import njit

# stats slots
CMP, SWP, DEPTH = 0, 1, 2

# base-case sorter ids
BASE_NONE, BASE_INSERTION, BASE_MERGEINSERTION = 0, 1, 2
# pivot method ids
PIVOT_SQRT, PIVOT_MEDIAN3, PIVOT_MINIMUM = 0, 1, 2

_U = np.uint64


# --------------------------------------------------------------------------
# splitmix64, mirrored bit for bit by sortlab.quickxsort.SplitMix64
# --------------------------------------------------------------------------

@njit(cache=True)
def _rng_next(state):
    state[0] = state[0] + _U(0x9E3779B97F4A7C15)
    z = state[0]
    z = (z ^ (z >> _U(30))) * _U(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> _U(27))) * _U(0x94D049BB133111EB)
    return z ^ (z >> _U(31))


@njit(cache=True)
def _rng_below(state, bound):
    return np.int64(_rng_next(state) % _U(bound))


@njit(cache=True)
def fill_permutation(out, seed):
    """Seeded Fisher-Yates permutation of 0..n-1 into ``out``."""
    n = out.shape[0]
    for i in range(n):
        out[i] = i
    state = np.empty(1, np.uint64)
    state[0] = _U(seed)
    for i in range(n - 1):
        j = i + _rng_below(state, n - i)
        if j != i:
            t = out[i]
            out[i] = out[j]
            out[j] = t


# --------------------------------------------------------------------------
# weak heap primitives
# --------------------------------------------------------------------------

@njit(cache=True)
def _wh_join(a, lo, r, i, j, stats):
    stats[CMP] += 1
    if a[lo + j] < a[lo + i]:
        t = a[lo + i]
        a[lo + i] = a[lo + j]
        a[lo + j] = t
        stats[SWP] += 1
        r[j] = 1 - r[j]


@njit(cache=True)
def _wh_join_rev(a, lo, r, i, j, stats):
    # max-orientation join for the in-place sort
    stats[CMP] += 1
    if a[lo + j] > a[lo + i]:
        t = a[lo + i]
        a[lo + i] = a[lo + j]
        a[lo + j] = t
        stats[SWP] += 1
        r[j] = 1 - r[j]


@njit(cache=True)
def _wh_construct(a, lo, n, r, stats, reverse):
    for j in range(n - 1, 0, -1):
        i = j
        while (i & 1) == r[i >> 1]:
            i >>= 1
        i >>= 1
        if reverse:
            _wh_join_rev(a, lo, r, i, j, stats)
        else:
            _wh_join(a, lo, r, i, j, stats)


@njit(cache=True)
def k_weakheap_construct(a, stats):
    n = a.shape[0]
    if n == 0:
        return
    r = np.zeros(n, np.uint8)
    _wh_construct(a, 0, n, r, stats, False)


@njit(cache=True)
def k_weakheapsort(a, stats):
    n = a.shape[0]
    if n <= 1:
        return
    r = np.zeros(n, np.uint8)
    _wh_construct(a, 0, n, r, stats, True)
    for size in range(n - 1, 0, -1):
        t = a[0]
        a[0] = a[size]
        a[size] = t
        stats[SWP] += 1
        if size < 2:
            break
        m = 1
        while True:
            c = 2 * m + r[m]
            if c >= size:
                break
            m = c
        while m >= 1:
            _wh_join_rev(a, 0, r, 0, m, stats)
            m >>= 1


@njit(cache=True)
def _ewhs_drain(a, lo, n, r, active, out, out_lo, dummy_mode, stats):
    """Extract all n minima into out[out_lo:out_lo+n].

    dummy_mode 1 swaps the displaced output element into the slot of the
    node deactivated by the hole filling (QuickXsort embedding; out is then
    the same array as a).
    """
    for t in range(n):
        value = a[lo]
        # fill the hole at the root
        v = 0
        while True:
            c = 2 * v + 1 - r[v]
            if c >= n or active[c] == 0:
                active[v] = 0
                deactivated = v
                break
            # descend the special path of v
            bottom = c
            while True:
                x = 2 * bottom + r[bottom]
                if x >= n or active[x] == 0:
                    break
                bottom = x
            a[lo + v] = a[lo + bottom]
            stats[SWP] += 1
            # restore: join the spine nodes above the bottom with v
            p = bottom >> 1
            while p > v:
                _wh_join(a, lo, r, v, p, stats)
                p >>= 1
            v = bottom
        if dummy_mode == 1:
            dummy = out[out_lo + t]
            out[out_lo + t] = value
            a[lo + deactivated] = dummy
            stats[SWP] += 2
        else:
            out[out_lo + t] = value
            stats[SWP] += 1


@njit(cache=True)
def k_external_weakheapsort(a, out, stats):
    n = a.shape[0]
    if n == 0:
        return
    r = np.zeros(n, np.uint8)
    active = np.ones(n, np.uint8)
    _wh_construct(a, 0, n, r, stats, False)
    _ewhs_drain(a, 0, n, r, active, out, 0, 0, stats)


# --------------------------------------------------------------------------
# binary insertion
# --------------------------------------------------------------------------

@njit(cache=True)
def k_insertionsort(a, stats):
    _insertion(a, 0, a.shape[0], stats)


@njit(cache=True)
def _insertion(a, lo, hi, stats):
    for end in range(lo + 1, hi):
        elem = a[end]
        l = lo
        rr = end
        while l < rr:
            mid = (l + rr) >> 1
            stats[CMP] += 1
            if a[mid] < elem:
                l = mid + 1
            else:
                rr = mid
        if l != end:
            stats[SWP] += end - l
            for p in range(end, l, -1):
                a[p] = a[p - 1]
            a[l] = elem


# --------------------------------------------------------------------------
# merge-insertion on the weak-heap tournament
# --------------------------------------------------------------------------

@njit(cache=True)
def _block_boundary(k):
    s = np.int64(1) if k % 2 == 0 else np.int64(-1)
    return ((np.int64(1) << (k + 1)) + s) // 3


@njit(cache=True)
def _mi_construct(a, lo, n, r, stats):
    # the last index of every odd-sized round is the bye and is not joined
    k = n
    for i in range(n - 1, 0, -1):
        if i + 1 == k:
            if k % 2 == 0:
                j = i
                while (j & 1) == r[j >> 1]:
                    j >>= 1
                _wh_join(a, lo, r, j >> 1, i, stats)
            k //= 2
        else:
            j = i
            while (j & 1) == r[j >> 1]:
                j >>= 1
            _wh_join(a, lo, r, j >> 1, i, stats)


@njit(cache=True)
def _d_child(r, i, limit):
    x = 2 * i + 1 - r[i]
    while True:
        c = 2 * x + r[x]
        if c >= limit:
            return x
        x = c


@njit(cache=True)
def _phi_binary_insert(a, lo, phi, f, d, t, stats):
    """Insert phi[t] into the sorted chain phi[f:f+d]; returns the slot."""
    for j in range(t, f + d, -1):
        tmp = phi[j - 1]
        phi[j - 1] = phi[j]
        phi[j] = tmp
    l = f
    rr = f + d
    elem = a[lo + phi[f + d]]
    while l < rr:
        mid = (l + rr) >> 1
        stats[CMP] += 1
        if a[lo + phi[mid]] < elem:
            l = mid + 1
        else:
            rr = mid
    for j in range(f + d, l, -1):
        tmp = phi[j - 1]
        phi[j - 1] = phi[j]
        phi[j] = tmp
    return l


@njit(cache=True)
def _mergeinsertion(a, lo, hi, improved, stats):
    n = hi - lo
    if n <= 1:
        return
    r = np.zeros(n, np.uint8)
    phi = np.empty(n, np.int64)
    for i in range(n):
        phi[i] = i
    _mi_construct(a, lo, n, r, stats)
    nlevels = 0
    m = n
    while m > 2:
        nlevels += 1
        m //= 2
    apos = np.empty(n // 2 + 2, np.int64)
    for li in range(nlevels - 1, -1, -1):
        m = n
        for _ in range(li):
            m //= 2
        half = m // 2
        nb = (m + 1) // 2
        limit = m - (m & 1)
        for l in range(half):
            phi[limit - 1 - l] = _d_child(r, phi[l], limit)
        chain = half + 1
        if nb == 1:
            continue
        if improved:
            for j in range(nb + 1):
                apos[j] = half - j
        k = 1
        t_prev = _block_boundary(1)
        while True:
            k += 1
            top = min(_block_boundary(k), nb)
            pickup = half + top - 1
            for j in range(top, t_prev, -1):
                if improved:
                    f = apos[j] + 1
                else:
                    f = half + 1 - j
                slot = _phi_binary_insert(a, lo, phi, f, chain - f, pickup, stats)
                chain += 1
                if improved:
                    for jj in range(2, nb + 1):
                        if apos[jj] >= slot:
                            apos[jj] += 1
            if top == nb:
                break
            t_prev = top
    tmp = np.empty(n, np.int64)
    for i in range(n):
        tmp[i] = a[lo + phi[i]]
    for i in range(n):
        a[lo + i] = tmp[i]


@njit(cache=True)
def k_mergeinsertion(a, improved, stats):
    _mergeinsertion(a, 0, a.shape[0], improved, stats)


# --------------------------------------------------------------------------
# mergesort with a swap buffer inside the array
# --------------------------------------------------------------------------

@njit(cache=True)
def _sort_base(a, lo, hi, base_kind, improved, stats):
    if hi - lo <= 1:
        return
    if base_kind == BASE_INSERTION:
        _insertion(a, lo, hi, stats)
    elif base_kind == BASE_MERGEINSERTION:
        _mergeinsertion(a, lo, hi, improved, stats)


@njit(cache=True)
def _merge_back(a, lo, mid, hi, blo, stats):
    n1 = mid - lo
    for i in range(n1):
        t = a[lo + i]
        a[lo + i] = a[blo + i]
        a[blo + i] = t
        stats[SWP] += 1
    i = 0
    j = mid
    w = lo
    while i < n1 and j < hi:
        stats[CMP] += 1
        if a[j] < a[blo + i]:
            if w != j:
                t = a[w]
                a[w] = a[j]
                a[j] = t
                stats[SWP] += 1
            j += 1
        else:
            t = a[w]
            a[w] = a[blo + i]
            a[blo + i] = t
            stats[SWP] += 1
            i += 1
        w += 1
    while i < n1:
        t = a[w]
        a[w] = a[blo + i]
        a[blo + i] = t
        stats[SWP] += 1
        i += 1
        w += 1


@njit(cache=True)
def _msx(a, lo, hi, blo, base_kind, base_threshold, improved, stats):
    # Explicit stack (ceil(log2 n) merge frames), left child expanded first.
    thr = base_threshold if base_threshold > 1 else 1
    slo = np.empty(140, np.int64)
    shi = np.empty(140, np.int64)
    sst = np.empty(140, np.uint8)  # 0 = expand, 1 = merge runs
    top = 0
    slo[0] = lo
    shi[0] = hi
    sst[0] = 0
    while top >= 0:
        clo = slo[top]
        chi = shi[top]
        st = sst[top]
        top -= 1
        n = chi - clo
        if st == 1:
            _merge_back(a, clo, clo + (n + 1) // 2, chi, blo, stats)
            continue
        if n <= thr:
            _sort_base(a, clo, chi, base_kind, improved, stats)
            continue
        mid = clo + (n + 1) // 2
        top += 1
        slo[top] = clo
        shi[top] = chi
        sst[top] = 1
        top += 1
        slo[top] = mid
        shi[top] = chi
        sst[top] = 0
        top += 1
        slo[top] = clo
        shi[top] = mid
        sst[top] = 0


@njit(cache=True)
def k_mergesort(a, base_kind, base_threshold, improved, stats):
    n = a.shape[0]
    if n <= 1:
        return
    need = (n + 1) // 2
    work = np.empty(n + need, np.int64)
    work[:n] = a
    work[n:] = a[:need]
    _msx(work, 0, n, n, base_kind, base_threshold, improved, stats)
    a[:] = work[:n]


@njit(cache=True)
def _merge_alloc(a, lo, mid, hi, tmp, stats):
    n1 = mid - lo
    for i in range(n1):
        tmp[i] = a[lo + i]
    stats[SWP] += n1
    i = 0
    j = mid
    w = lo
    while i < n1 and j < hi:
        stats[CMP] += 1
        if a[j] < tmp[i]:
            a[w] = a[j]
            j += 1
        else:
            a[w] = tmp[i]
            i += 1
        stats[SWP] += 1
        w += 1
    while i < n1:
        a[w] = tmp[i]
        stats[SWP] += 1
        i += 1
        w += 1


@njit(cache=True)
def _ms_alloc(a, lo, hi, tmp, stats):
    # allocated-buffer mergesort, threshold 1: the QuickXYsort fallback Y
    slo = np.empty(140, np.int64)
    shi = np.empty(140, np.int64)
    sst = np.empty(140, np.uint8)
    top = 0
    slo[0] = lo
    shi[0] = hi
    sst[0] = 0
    while top >= 0:
        clo = slo[top]
        chi = shi[top]
        st = sst[top]
        top -= 1
        n = chi - clo
        if st == 1:
            _merge_alloc(a, clo, clo + (n + 1) // 2, chi, tmp, stats)
            continue
        if n <= 1:
            continue
        mid = clo + (n + 1) // 2
        top += 1
        slo[top] = clo
        shi[top] = chi
        sst[top] = 1
        top += 1
        slo[top] = mid
        shi[top] = chi
        sst[top] = 0
        top += 1
        slo[top] = clo
        shi[top] = mid
        sst[top] = 0


# --------------------------------------------------------------------------
# pivot selection and partitioning
# --------------------------------------------------------------------------

@njit(cache=True)
def _partition(a, lo, hi, pidx, stats):
    last = hi - 1
    if pidx != last:
        t = a[pidx]
        a[pidx] = a[last]
        a[last] = t
        stats[SWP] += 1
    pivot = a[last]
    store = lo
    for i in range(lo, last):
        stats[CMP] += 1
        if a[i] < pivot:
            if i != store:
                t = a[i]
                a[i] = a[store]
                a[store] = t
                stats[SWP] += 1
            store += 1
    if store != last:
        t = a[store]
        a[store] = a[last]
        a[last] = t
        stats[SWP] += 1
    return store


@njit(cache=True)
def _median3(a, i, j, k, stats):
    stats[CMP] += 1
    if a[j] < a[i]:
        stats[CMP] += 1
        if a[k] < a[j]:
            return j
        stats[CMP] += 1
        if a[k] < a[i]:
            return k
        return i
    stats[CMP] += 1
    if a[k] < a[i]:
        return i
    stats[CMP] += 1
    if a[k] < a[j]:
        return k
    return j


@njit(cache=True)
def _select_inner_pivot(a, lo, hi, stats):
    n = hi - lo
    if n < 50:
        return _median3(a, lo, lo + (n >> 1), hi - 1, stats)
    s = (n - 1) >> 3
    m0 = _median3(a, lo, lo + s, lo + 2 * s, stats)
    m1 = _median3(a, lo + 3 * s, lo + 4 * s, lo + 5 * s, stats)
    m2 = _median3(a, lo + 6 * s, lo + 7 * s, hi - 1, stats)
    return _median3(a, m0, m1, m2, stats)


@njit(cache=True)
def _quickselect(a, lo, hi, target, stats):
    while True:
        n = hi - lo
        if n <= 1:
            return
        if n == 2:
            stats[CMP] += 1
            if a[lo + 1] < a[lo]:
                t = a[lo]
                a[lo] = a[lo + 1]
                a[lo + 1] = t
                stats[SWP] += 1
            return
        pidx = _select_inner_pivot(a, lo, hi, stats)
        p = _partition(a, lo, hi, pidx, stats)
        if p == target:
            return
        if target < p:
            hi = p
        else:
            lo = p + 1


@njit(cache=True)
def _reverse_block(a, i, j, stats):
    while i < j - 1:
        t = a[i]
        a[i] = a[j - 1]
        a[j - 1] = t
        stats[SWP] += 1
        i += 1
        j -= 1


@njit(cache=True)
def _sample_partition(a, lo, hi, k, stats):
    # mirrors quickxsort._sample_partition: the sample [lo, lo+k) is already
    # split around its median, so only the outside elements are compared
    t = lo + (k >> 1)
    pivot = a[t]
    store = lo + k
    for i in range(lo + k, hi):
        stats[CMP] += 1
        if a[i] < pivot:
            if i != store:
                tmp = a[i]
                a[i] = a[store]
                a[store] = tmp
                stats[SWP] += 1
            store += 1
    q = store - (lo + k)
    mid = lo + k
    _reverse_block(a, t, mid, stats)
    _reverse_block(a, mid, store, stats)
    _reverse_block(a, t, store, stats)
    return t + q


@njit(cache=True)
def _isqrt(x):
    if x < 0:
        return np.int64(0)
    s = np.int64(np.sqrt(np.float64(x)))
    while (s + 1) * (s + 1) <= x:
        s += 1
    while s * s > x:
        s -= 1
    return s


@njit(cache=True)
def _sample_size(n):
    if n <= 1:
        return np.int64(1)
    k = _isqrt(n - 1) + 1
    if k > n:
        k = np.int64(n)
    if k % 2 == 0:
        k -= 1
    if k < 1:
        k = np.int64(1)
    return k


@njit(cache=True)
def _select_pivot(a, lo, hi, method, state, stats):
    # returns (pivot index, sample size or 0 when no sample was drawn)
    n = hi - lo
    if n == 1:
        return lo, np.int64(0)
    if method == PIVOT_MEDIAN3:
        return _median3(a, lo, lo + (n >> 1), hi - 1, stats), np.int64(0)
    if method == PIVOT_MINIMUM:
        m = lo
        for i in range(lo + 1, hi):
            stats[CMP] += 1
            if a[i] < a[m]:
                m = i
        return m, np.int64(0)
    k = _sample_size(n)
    for i in range(k):
        j = i + _rng_below(state, n - i)
        if j != i:
            t = a[lo + i]
            a[lo + i] = a[lo + j]
            a[lo + j] = t
            stats[SWP] += 1
    target = lo + (k >> 1)
    _quickselect(a, lo, lo + k, target, stats)
    return target, k


@njit(cache=True)
def _pivot_split(a, lo, hi, method, state, stats):
    pidx, k = _select_pivot(a, lo, hi, method, state, stats)
    if k > 1:
        return _sample_partition(a, lo, hi, k, stats)
    return _partition(a, lo, hi, pidx, stats)


# --------------------------------------------------------------------------
# the QuickXsort combinators
# --------------------------------------------------------------------------

@njit(cache=True)
def _direct_sort(a, lo, hi, base_kind, improved, stats):
    if hi - lo <= 1:
        return
    if base_kind == BASE_MERGEINSERTION:
        _mergeinsertion(a, lo, hi, improved, stats)
    else:
        _insertion(a, lo, hi, stats)


@njit(cache=True)
def _one_third_step(a, lo, hi, p, base_kind, base_threshold, improved, stats):
    left_n = p - lo
    right_n = hi - p - 1
    if left_n >= right_n:
        if right_n >= (left_n + 1) // 2:
            if left_n > 1:
                _msx(a, lo, p, p + 1, base_kind, base_threshold, improved, stats)
            return p + 1, hi
        if right_n > 1:
            _msx(a, p + 1, hi, lo, base_kind, base_threshold, improved, stats)
        return lo, p
    if left_n >= (right_n + 1) // 2:
        if right_n > 1:
            _msx(a, p + 1, hi, lo, base_kind, base_threshold, improved, stats)
        return lo, p
    if left_n > 1:
        _msx(a, lo, p, p + 1, base_kind, base_threshold, improved, stats)
    return p + 1, hi


@njit(cache=True)
def k_quickmergesort(a, seed, pivot_method, base_kind, base_threshold,
                     improved, stats):
    lo = np.int64(0)
    hi = np.int64(a.shape[0])
    state = np.empty(1, np.uint64)
    state[0] = _U(seed)
    direct = max(base_threshold, 5)
    depth = np.int64(0)
    while hi - lo > direct:
        depth += 1
        p = _pivot_split(a, lo, hi, pivot_method, state, stats)
        lo, hi = _one_third_step(a, lo, hi, p, base_kind, base_threshold,
                                 improved, stats)
    _direct_sort(a, lo, hi, base_kind, improved, stats)
    stats[DEPTH] = depth


@njit(cache=True)
def k_quickweakheapsort(a, seed, pivot_method, stats):
    lo = np.int64(0)
    hi = np.int64(a.shape[0])
    n0 = hi - lo
    state = np.empty(1, np.uint64)
    state[0] = _U(seed)
    r = np.zeros(n0, np.uint8)
    active = np.empty(n0, np.uint8)
    depth = np.int64(0)
    while hi - lo >= 6:
        depth += 1
        p = _pivot_split(a, lo, hi, pivot_method, state, stats)
        left_n = p - lo
        right_n = hi - p - 1
        if left_n <= right_n:
            xlo, xhi, out_lo = lo, p, p + 1
            lo = p + 1
        else:
            xlo, xhi, out_lo = p + 1, hi, lo
            hi = p
        m = xhi - xlo
        if m > 1:
            for i in range(m):
                r[i] = 0
                active[i] = 1
            _wh_construct(a, xlo, m, r, stats, False)
            _ewhs_drain(a, xlo, m, r, active, a, out_lo, 1, stats)
            for i in range(m):
                t = a[xlo + i]
                a[xlo + i] = a[out_lo + i]
                a[out_lo + i] = t
                stats[SWP] += 1
    _insertion(a, lo, hi, stats)
    stats[DEPTH] = depth


@njit(cache=True)
def k_quickxysort(a, seed, pivot_method, base_kind, base_threshold,
                  improved, stats):
    lo = np.int64(0)
    hi = np.int64(a.shape[0])
    state = np.empty(1, np.uint64)
    state[0] = _U(seed)
    direct = max(base_threshold, 5)
    depth = np.int64(0)
    tmp = np.empty((a.shape[0] + 1) // 2, np.int64)
    while hi - lo > direct:
        depth += 1
        n = hi - lo
        p = _pivot_split(a, lo, hi, pivot_method, state, stats)
        delta = 1.0 / np.log2(n) if n > 2 else 0.25
        if abs((p - lo) - n / 2) > n * delta:
            _ms_alloc(a, lo, hi, tmp, stats)
            lo = hi
            break
        lo, hi = _one_third_step(a, lo, hi, p, base_kind, base_threshold,
                                 improved, stats)
    _direct_sort(a, lo, hi, base_kind, improved, stats)
    stats[DEPTH] = depth
