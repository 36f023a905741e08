"""Hot subset-enumeration kernels.

Everything here counts vertex subsets of a bitmask-encoded graph: a subset W
(a mask) totally dominates iff the OR of the open-neighborhood masks of its
members covers every live bit. Counting is grouped by subset size, which is
exactly the coefficient vector of the total domination polynomial; counts
fit int64 comfortably inside the 26-bit enumeration budget.

Two interchangeable implementations exist: a numba-jitted mask loop (default)
and a chunked pure-numpy sweep. Set TDPOLY_BACKEND=numpy to force the
fallback, TDPOLY_BACKEND=numba to insist on the jit; unset/auto prefers
numba and silently degrades when it is not importable. Results are
bit-identical across backends.
"""

from __future__ import annotations

import os

import numpy as np

BACKEND_ENV_VAR = "TDPOLY_BACKEND"

# int64 masks leave headroom well past the oracle's 26-bit enumeration cap.
MAX_KERNEL_BITS = 62

_EMPTY_I64 = np.zeros(0, dtype=np.int64)

try:
    from numba import njit

    _HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    _HAS_NUMBA = False


def active_backend() -> str:
    """Resolve the backend name from the environment ('numba' or 'numpy')."""
    choice = os.environ.get(BACKEND_ENV_VAR, "auto").strip().lower() or "auto"
    if choice == "auto":
        return "numba" if _HAS_NUMBA else "numpy"
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not _HAS_NUMBA:
            raise RuntimeError("TDPOLY_BACKEND=numba but numba is not importable")
        return "numba"
    raise ValueError(f"{BACKEND_ENV_VAR} must be 'numba', 'numpy' or 'auto', got {choice!r}")


if _HAS_NUMBA:

    @njit(cache=True)
    def _size_counts_nb(nbr, required, forbidden, atleast_masks, atleast_mins):
        n = nbr.shape[0]
        full = (np.int64(1) << n) - 1
        counts = np.zeros(n + 1, dtype=np.int64)
        n_atleast = atleast_masks.shape[0]
        for mask in range(np.int64(1) << n):
            if mask & required != required:
                continue
            if mask & forbidden != 0:
                continue
            cover = np.int64(0)
            size = 0
            m = mask
            v = 0
            while m:
                if m & 1:
                    cover |= nbr[v]
                    size += 1
                m >>= 1
                v += 1
            if cover != full:
                continue
            ok = True
            for j in range(n_atleast):
                hits = 0
                m = mask & atleast_masks[j]
                while m:
                    m &= m - 1
                    hits += 1
                if hits < atleast_mins[j]:
                    ok = False
                    break
            if ok:
                counts[size] += 1
        return counts

    @njit(cache=True)
    def _first_dominating_size_nb(nbr):
        # Gosper's hack walks the masks of each popcount in ascending order,
        # so the first covering mask found is at the minimum size.
        n = nbr.shape[0]
        limit = np.int64(1) << n
        for k in range(2, n + 1):
            mask = (np.int64(1) << k) - 1
            while mask < limit:
                cover = np.int64(0)
                m = mask
                v = 0
                while m:
                    if m & 1:
                        cover |= nbr[v]
                    m >>= 1
                    v += 1
                if cover == limit - 1:
                    return k
                c = mask & (-mask)
                r = mask + c
                mask = (((r ^ mask) >> 2) // c) | r
        return -1


def _size_counts_np(nbr, required, forbidden, atleast_masks, atleast_mins):
    n = len(nbr)
    full = (np.int64(1) << n) - np.int64(1)
    counts = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    chunk = min(total, 1 << 16)
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        ok = (masks & required) == required
        ok &= (masks & forbidden) == 0
        cover = np.zeros(masks.shape, dtype=np.int64)
        for v in range(n):
            hit = (masks >> v) & 1 == 1
            cover[hit] |= nbr[v]
        ok &= cover == full
        for j in range(len(atleast_masks)):
            ok &= np.bitwise_count(masks & atleast_masks[j]) >= atleast_mins[j]
        sizes = np.bitwise_count(masks[ok]).astype(np.int64)
        counts += np.bincount(sizes, minlength=n + 1)
    return counts


def size_counts(
    neighbor_masks: np.ndarray,
    required: int = 0,
    forbidden: int = 0,
    atleast_masks: np.ndarray | None = None,
    atleast_mins: np.ndarray | None = None,
) -> np.ndarray:
    """Count qualifying totally dominating subsets, grouped by size.

    ``neighbor_masks[v]`` is the open-neighborhood bitmask of live vertex v
    (labels compressed to bits 0..n-1). A mask qualifies if it contains all
    ``required`` bits, avoids all ``forbidden`` bits, meets every
    (atleast_masks[j], atleast_mins[j]) intersection minimum, and its
    members' neighborhoods cover every bit. Returns int64 counts of length
    n + 1 indexed by subset size.
    """
    nbr = np.ascontiguousarray(neighbor_masks, dtype=np.int64)
    n = nbr.shape[0]
    if n > MAX_KERNEL_BITS:
        raise ValueError(f"kernel supports at most {MAX_KERNEL_BITS} bits, got {n}")
    if n == 0:
        # One empty subset; it covers the empty vertex set.
        return np.ones(1, dtype=np.int64) if required == 0 else np.zeros(1, dtype=np.int64)
    al_masks = _EMPTY_I64 if atleast_masks is None else np.ascontiguousarray(atleast_masks, dtype=np.int64)
    al_mins = _EMPTY_I64 if atleast_mins is None else np.ascontiguousarray(atleast_mins, dtype=np.int64)
    if al_masks.shape != al_mins.shape:
        raise ValueError("atleast_masks and atleast_mins must pair up")
    if active_backend() == "numba":
        return _size_counts_nb(nbr, np.int64(required), np.int64(forbidden), al_masks, al_mins)
    return _size_counts_np(nbr, np.int64(required), np.int64(forbidden), al_masks, al_mins)


def first_dominating_size(neighbor_masks: np.ndarray) -> int:
    """Smallest size of a totally dominating subset, -1 if none exists.

    The numba path exits early at the first covering subset (ascending by
    size); the numpy path derives the answer from the full count vector.
    Both agree by construction.
    """
    nbr = np.ascontiguousarray(neighbor_masks, dtype=np.int64)
    if nbr.shape[0] == 0:
        return -1
    if active_backend() == "numba":
        return int(_first_dominating_size_nb(nbr))
    counts = _size_counts_np(nbr, np.int64(0), np.int64(0), _EMPTY_I64, _EMPTY_I64)
    hits = np.nonzero(counts)[0]
    return int(hits[0]) if hits.size else -1
