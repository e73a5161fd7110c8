"""Permutation criteria: the refined modulus w(n), the classical v(n), and
a direct injectivity check used as their ground truth.

For n = 2^e * p_1^e_1 * ... * p_r^e_r the per-factor moduli are
l_i = p_i^(e_i - 1) * (p_i^2 - 1) / 2 for odd primes and
l_0 = 3*2^(e-1) (e < 3) or 3*2^(e-2) (e >= 3); w(n) is their lcm, and the
degree-k map permutes Z_n exactly when gcd(k, w(n)) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _sweeps
from .dickson import DicksonParams, eval_map
from .errors import CapExceededError
from .numth import Factorization, lcm_list

BRUTE_CAP_DEFAULT = 5000


@dataclass(frozen=True)
class ModuliProfile:
    """Per-prime-power moduli of n and the two lcm criteria built from them."""

    n: int
    e: int                  # exponent of 2 in n
    l0: Optional[int]       # 2-part modulus; None iff e == 0
    ls: tuple[int, ...]     # one modulus per odd prime power, primes ascending
    w: int
    v: int


def l_odd(p: int, e: int) -> int:
    """p^(e-1) * (p^2 - 1) / 2 for an odd prime power p^e."""
    return p ** (e - 1) * (p * p - 1) // 2


def l_two(e: int) -> int:
    """3 * 2^(e-1) for e in {1, 2}, else 3 * 2^(e-2)."""
    return 3 * 2 ** (e - 1) if e < 3 else 3 * 2 ** (e - 2)


def profile(f: Factorization) -> ModuliProfile:
    """All moduli derived from the factorization of n >= 2."""
    if f.value < 2:
        raise ValueError("profile needs n >= 2")
    e, l0 = 0, None
    ls: list[int] = []
    vparts: list[int] = []
    for p, ee in f.factors:
        if p == 2:
            e = ee
            l0 = l_two(ee)
            vparts.append(2 ** (ee - 1) * 3)
        else:
            ls.append(l_odd(p, ee))
            vparts.append(p ** (ee - 1) * (p * p - 1))
    mods = ([l0] if l0 is not None else []) + ls
    return ModuliProfile(f.value, e, l0, tuple(ls), lcm_list(mods), lcm_list(vparts))


def is_perm_w(k: int, f: Factorization) -> bool:
    """Permutation criterion gcd(k, w(n)) == 1."""
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    return math.gcd(k, profile(f).w) == 1


def is_perm_v(k: int, f: Factorization) -> bool:
    """Classical permutation criterion gcd(k, v(n)) == 1."""
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    return math.gcd(k, profile(f).v) == 1


def is_perm_brute(k: int, a: int, n: int, cap: int = BRUTE_CAP_DEFAULT) -> bool:
    """Evaluate the degree-k map at every point of Z_n and test injectivity."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"brute-force check capped at n <= {cap}, got {n}")
    img = eval_map(DicksonParams(k, a, n))
    seen = np.zeros(n, dtype=bool)
    seen[img] = True
    return bool(seen.all())


def brute_perm_flags(n: int, a: int, kmax: int, cap: int = BRUTE_CAP_DEFAULT) -> np.ndarray:
    """Batched is_perm_brute: flags[k] for every degree k = 1..kmax.

    Same semantics per degree, but the image vectors are advanced
    incrementally with the recurrence instead of re-evaluated from scratch.
    """
    if n > cap:
        raise CapExceededError(f"brute-force check capped at n <= {cap}, got {n}")
    return _sweeps.perm_flags(n, a, kmax)
