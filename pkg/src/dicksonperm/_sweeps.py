"""Batched brute-force sweeps over the polynomial degree.

Every kernel here advances the image vector (D_k(0), ..., D_k(n-1)) mod n
one degree at a time with the two-term recurrence and nothing else: no gcd
criteria, no doubling shortcuts. That keeps these sweeps usable as ground
truth against the analytic paths, at machine speed.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np
from numba import njit

_BLOCK_ROWS = 4096


@njit(cache=True, nogil=True)
def _perm_flags(n, a, kmax):
    flags = np.zeros(kmax + 1, dtype=np.uint8)
    prev = np.empty(n, dtype=np.int64)
    cur = np.empty(n, dtype=np.int64)
    for u in range(n):
        prev[u] = 2 % n
        cur[u] = u
    seen = np.full(n, -1, dtype=np.int64)
    for k in range(1, kmax + 1):
        ok = True
        for u in range(n):
            v = cur[u]
            if seen[v] == k:
                ok = False
                break
            seen[v] = k
        flags[k] = 1 if ok else 0
        if k < kmax:
            for u in range(n):
                t = (u * cur[u] - a * prev[u]) % n
                if t < 0:
                    t += n
                prev[u] = cur[u]
                cur[u] = t
    return flags


@njit(cache=True, nogil=True)
def _identity_flags(n, a, kmax):
    flags = np.zeros(kmax + 1, dtype=np.uint8)
    prev = np.empty(n, dtype=np.int64)
    cur = np.empty(n, dtype=np.int64)
    for u in range(n):
        prev[u] = 2 % n
        cur[u] = u
    for k in range(1, kmax + 1):
        same = True
        for u in range(n):
            if cur[u] != u:
                same = False
                break
        flags[k] = 1 if same else 0
        if k < kmax:
            for u in range(n):
                t = (u * cur[u] - a * prev[u]) % n
                if t < 0:
                    t += n
                prev[u] = cur[u]
                cur[u] = t
    return flags


@njit(cache=True, nogil=True)
def _step_block(n, a, prev, cur, out):
    # On entry prev/cur hold degrees k-1 and k; out[i] receives degree k+i.
    for i in range(out.shape[0]):
        for u in range(n):
            out[i, u] = np.int16(cur[u])
        for u in range(n):
            t = (u * cur[u] - a * prev[u]) % n
            if t < 0:
                t += n
            prev[u] = cur[u]
            cur[u] = t


def perm_flags(n: int, a: int, kmax: int) -> np.ndarray:
    """flags[k] = 1 iff u -> D_k(u, a) mod n is injective, for k = 1..kmax."""
    if n < 1 or kmax < 1:
        raise ValueError("need n >= 1 and kmax >= 1")
    return _perm_flags(n, a % n, kmax)


def identity_flags(n: int, a: int, kmax: int) -> np.ndarray:
    """flags[k] = 1 iff u -> D_k(u, a) mod n fixes every point, for k = 1..kmax."""
    if n < 1 or kmax < 1:
        raise ValueError("need n >= 1 and kmax >= 1")
    return _identity_flags(n, a % n, kmax)


def iter_image_blocks(n: int, a: int, kmax: int, rows: int = _BLOCK_ROWS) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (k0, block) covering degrees 1..kmax; block[i] maps degree k0+i.

    Blocks are views into one reused int16 buffer: copy rows that must
    outlive the iteration step.
    """
    if not 1 <= n < 2**15:
        raise ValueError("int16 image storage needs 1 <= n < 32768")
    if kmax < 1:
        raise ValueError("need kmax >= 1")
    a %= n
    prev = np.full(n, 2 % n, dtype=np.int64)
    cur = np.arange(n, dtype=np.int64)
    buf = np.empty((min(rows, kmax), n), dtype=np.int16)
    k = 1
    while k <= kmax:
        b = min(rows, kmax - k + 1)
        _step_block(n, a, prev, cur, buf[:b])
        yield k, buf[:b]
        k += b
