"""Dickson polynomials of the first kind: coefficients and modular evaluation.

The family starts at D_0 = 2, D_1 = x and follows D_k = x*D_{k-1} - a*D_{k-2};
equivalently D_k(x, a) = sum_j  k/(k-j) * C(k-j, j) * (-a)^j * x^(k-2j), and
with x = y + a/y it computes y^k + (a/y)^k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegreeTooLargeError

COEFF_DEGREE_CAP = 64  # coefficient magnitudes stay within 63 bits below this

_VEC_MODULUS_MAX = 2**31  # (n-1)^2 must fit in int64 for the vector path


@dataclass(frozen=True)
class DicksonParams:
    """One polynomial map u -> D_k(u, a) on Z_n."""

    k: int
    a: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"degree must be >= 0, got {self.k}")
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")


@dataclass(frozen=True)
class DicksonCoeffs:
    """Exact integer terms of D_k, highest power first, powers stepping by 2."""

    k: int
    terms: tuple[tuple[int, int], ...]

    def eval_mod(self, u: int, n: int) -> int:
        return sum(c * pow(u, e, n) for e, c in self.terms) % n


def coeffs(k: int, a: int) -> DicksonCoeffs:
    """Exact coefficients of D_k(x, a) from the binomial closed form."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    if k > COEFF_DEGREE_CAP:
        raise DegreeTooLargeError(f"exact coefficients capped at degree {COEFF_DEGREE_CAP}, got {k}")
    if k == 0:
        return DicksonCoeffs(0, ((0, 2),))
    terms = []
    for j in range(k // 2 + 1):
        c, rem = divmod(k * math.comb(k - j, j), k - j)
        if rem:  # k/(k-j) * C(k-j, j) is always an integer
            raise ArithmeticError(f"non-integral coefficient at k={k}, j={j}")
        terms.append((k - 2 * j, c * (-a) ** j))
    return DicksonCoeffs(k, tuple(terms))


def eval_recurrence(p: DicksonParams, u: int) -> int:
    """O(k) reference evaluation by the two-term recurrence."""
    n = p.n
    a = p.a % n
    u %= n
    d0, d1 = 2 % n, u
    if p.k == 0:
        return d0
    for _ in range(p.k - 1):
        d0, d1 = d1, (u * d1 - a * d0) % n
    return d1


def eval_fast(p: DicksonParams, u: int) -> int:
    """O(log k) evaluation by doubling.

    Walks the bits of k keeping (D_m, D_{m+1}, a^m) and using
    D_{2m} = D_m^2 - 2*a^m  and  D_{2m+1} = D_m * D_{m+1} - a^m * x.
    """
    n = p.n
    if p.k == 0:
        return 2 % n
    a = p.a % n
    x = u % n
    d, e, apow = 2 % n, x, 1 % n
    for bit in bin(p.k)[2:]:
        de = (d * e - apow * x) % n
        if bit == "0":
            d, e = (d * d - 2 * apow) % n, de
            apow = apow * apow % n
        else:
            d, e = de, (e * e - 2 * apow * a) % n
            apow = apow * apow * a % n
    return d


def eval_map(p: DicksonParams) -> np.ndarray:
    """The full image vector (D_k(0), ..., D_k(n-1)) mod n.

    Same doubling walk as eval_fast, vectorized over the evaluation point.
    """
    n = p.n
    if n > _VEC_MODULUS_MAX:
        raise ValueError(f"vector evaluation supports n <= {_VEC_MODULUS_MAX}")
    if p.k == 0:
        return np.full(n, 2 % n, dtype=np.int64)
    a = p.a % n
    x = np.arange(n, dtype=np.int64)
    d = np.full(n, 2 % n, dtype=np.int64)
    e = x.copy()
    apow = 1 % n
    for bit in bin(p.k)[2:]:
        de = (d * e - apow * x) % n
        if bit == "0":
            d = (d * d - 2 * apow) % n
            e = de
            apow = apow * apow % n
        else:
            d = de
            e = (e * e - 2 * apow * a) % n
            apow = apow * apow * a % n
    return d


def compose_check(m: int, k: int, a: int, n: int, u: int) -> bool:
    """Whether D_{m*k}(u, a) == D_m(D_k(u, a), a^k) holds mod n (it must)."""
    lhs = eval_fast(DicksonParams(m * k, a, n), u)
    inner = eval_fast(DicksonParams(k, a, n), u)
    rhs = eval_fast(DicksonParams(m, pow(a % n, k, n), n), inner)
    return lhs == rhs
