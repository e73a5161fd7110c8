"""Exhaustive induced-map tables, the dumbest possible ground truth.

Everything here is produced by the two-term recurrence alone (via the
shared sweep kernels); the fast evaluator and the congruence machinery
never touch this module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _sweeps
from .criteria import profile
from .errors import CapExceededError
from .numth import factorize

TABLE_CAP_DEFAULT = 2000


@dataclass(frozen=True)
class InducedMapTable:
    """Image vector of every unit degree mod w(n).

    images[i] holds (D_k(0), ..., D_k(n-1)) mod n for k = ks[i]; memory
    grows as phi(w(n)) * n, which is what the cap is for.
    """

    n: int
    w: int
    ks: tuple[int, ...]
    images: np.ndarray

    def image(self, k: int) -> np.ndarray:
        i = int(np.searchsorted(self.ks, k))
        if i == len(self.ks) or self.ks[i] != k:
            raise KeyError(f"{k} is not a unit mod {self.w}")
        return self.images[i]


def build_table(n: int, cap: int = TABLE_CAP_DEFAULT) -> InducedMapTable:
    """Tabulate the map of every unit degree k mod w(n) by the recurrence."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if n > cap:
        raise CapExceededError(f"map table capped at n <= {cap}, got {n}")
    w = profile(factorize(n)).w
    units = np.gcd(np.arange(w + 1, dtype=np.int64), w) == 1
    ks = np.nonzero(units)[0]
    images = np.empty((len(ks), n), dtype=np.int16)
    pos = 0
    for k0, block in _sweeps.iter_image_blocks(n, 1, w):
        picked = block[units[k0:k0 + block.shape[0]]]
        images[pos:pos + len(picked)] = picked
        pos += len(picked)
    assert pos == len(ks)
    return InducedMapTable(n, w, tuple(int(k) for k in ks), images)


def distinct_maps(t: InducedMapTable) -> int:
    """Number of distinct image vectors in the table."""
    return len({t.images[i].tobytes() for i in range(len(t.ks))})
