"""Compiled R_g-cutset subset search for graphs with at most 64 vertices.

Vertex sets are int64 bitmasks (bit 63 is just another vertex; all bit
tricks used here are sign-agnostic).  Subsets of one cardinality are split
into chunks by their two smallest members; chunk order equals the
lexicographic order of sorted index tuples, so the lexicographically least
hit is the first hit of the lowest-numbered chunk with any hit.  Chunks are
dealt round-robin to workers; the result does not depend on the worker count.
"""

from __future__ import annotations

import numba
import numpy as np
from numba import njit, prange

# the system TBB is older than numba accepts; results never depend on the layer
numba.config.THREADING_LAYER = "omp"

_DEBRUIJN = 0x03F79D71B4CB0A89
_TABLE = np.zeros(64, dtype=np.int64)
for _i in range(64):
    _TABLE[(((1 << _i) * _DEBRUIJN) % (1 << 64)) >> 58] = _i
_DB = np.int64(_DEBRUIJN)

MODE_FIRST, MODE_COUNT, MODE_FILL = 0, 1, 2


@njit(cache=True, inline="always")
def _lowbit_index(low):
    return _TABLE[((low * _DB) >> 58) & 63]


@njit(cache=True)
def is_rg_cutset_mask(adj, full, S, g):
    rem = full & ~S
    if rem == 0:
        return False
    ncomp = 0
    while rem != 0:
        seed = rem & -rem
        comp = seed
        frontier = seed
        size = 0
        while frontier != 0:
            reach = np.int64(0)
            f = frontier
            while f != 0:
                low = f & -f
                reach |= adj[_lowbit_index(low)]
                size += 1
                f ^= low
            frontier = reach & rem & ~comp
            comp |= frontier
        if size <= g:
            return False
        if ncomp == 0 and comp == rem:
            return False
        ncomp += 1
        rem &= ~comp
    return True


@njit(cache=True)
def _scan_chunk(adj, n, full, g, base, start, r, mode, out, out_pos):
    """Scan all ``base | {r elements of [start, n)}`` in lexicographic order.

    MODE_FIRST returns 1 and stores the mask in ``out[out_pos]`` at the first
    hit; MODE_COUNT returns the number of hits; MODE_FILL stores every hit.
    """
    hits = 0
    if r == 0:
        if is_rg_cutset_mask(adj, full, base, g):
            if mode != MODE_COUNT:
                out[out_pos] = base
            return 1
        return 0
    if n - start < r:
        return 0
    idx = np.empty(r, dtype=np.int64)
    for i in range(r):
        idx[i] = start + i
    while True:
        S = base
        for i in range(r):
            S |= np.int64(1) << idx[i]
        if is_rg_cutset_mask(adj, full, S, g):
            if mode == MODE_FIRST:
                out[out_pos] = S
                return 1
            if mode == MODE_FILL:
                out[out_pos + hits] = S
            hits += 1
        i = r - 1
        while i >= 0 and idx[i] == n - r + i:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for j in range(i + 1, r):
            idx[j] = idx[j - 1] + 1
    return hits


@njit(parallel=True, cache=True)
def _run_chunks(adj, n, full, g, bases, starts, r, mode, offsets, out, workers):
    nchunks = bases.shape[0]
    result = np.zeros(nchunks, dtype=np.int64)
    best = np.full(1, nchunks, dtype=np.int64)
    for w in prange(workers):
        for c in range(w, nchunks, workers):
            if mode == MODE_FIRST and best[0] < c:
                continue
            pos = offsets[c] if mode == MODE_FILL else c
            h = _scan_chunk(adj, n, full, g, bases[c], starts[c], r, mode, out, pos)
            result[c] = h
            if mode == MODE_FIRST and h > 0 and c < best[0]:
                best[0] = c
    return result


def _chunks(n: int, k: int):
    p = min(2, k)
    bases, starts = [], []
    if p == 0:
        bases, starts = [0], [0]
    elif p == 1:
        for i in range(n):
            bases.append(1 << i)
            starts.append(i + 1)
    else:
        for i in range(n):
            for j in range(i + 1, n):
                bases.append((1 << i) | (1 << j))
                starts.append(j + 1)
    to64 = np.array([b - (1 << 64) if b >= 1 << 63 else b for b in bases], dtype=np.int64)
    return to64, np.array(starts, dtype=np.int64), k - p


def _full(n: int) -> np.int64:
    return np.int64(-1) if n == 64 else np.int64((1 << n) - 1)


def _as_mask(x: int) -> int:
    return int(x) & ((1 << 64) - 1)


def adjacency_array(rows) -> np.ndarray:
    return np.array([r - (1 << 64) if r >= 1 << 63 else r for r in rows], dtype=np.int64)


def _workers(threads: int | None) -> int:
    limit = numba.config.NUMBA_NUM_THREADS
    t = limit if threads is None else max(1, min(int(threads), limit))
    numba.set_num_threads(t)
    return t


def first_cutset(adj: np.ndarray, n: int, k: int, g: int, threads: int | None = None) -> int | None:
    """Lexicographically least R_g-cutset of cardinality ``k`` as a bitmask."""
    if k > n:
        return None
    bases, starts, r = _chunks(n, k)
    out = np.zeros(bases.shape[0], dtype=np.int64)
    workers = _workers(threads)
    res = _run_chunks(adj, n, _full(n), g, bases, starts, r, MODE_FIRST,
                      np.zeros(1, dtype=np.int64), out, workers)
    hit = np.flatnonzero(res)
    return _as_mask(out[hit[0]]) if hit.size else None


def all_cutsets(adj: np.ndarray, n: int, k: int, g: int, threads: int | None = None) -> list[int]:
    """Every R_g-cutset of cardinality ``k``, in lexicographic order."""
    if k > n:
        return []
    bases, starts, r = _chunks(n, k)
    workers = _workers(threads)
    dummy = np.zeros(1, dtype=np.int64)
    counts = _run_chunks(adj, n, _full(n), g, bases, starts, r, MODE_COUNT, dummy, dummy, workers)
    offsets = np.zeros(bases.shape[0], dtype=np.int64)
    if counts.size > 1:
        offsets[1:] = np.cumsum(counts)[:-1]
    out = np.zeros(max(int(counts.sum()), 1), dtype=np.int64)
    _run_chunks(adj, n, _full(n), g, bases, starts, r, MODE_FILL, offsets, out, workers)
    return [_as_mask(x) for x in out[: int(counts.sum())]]
