"""Exact integer arithmetic: extended gcd, lcm, factorization, primality, phi.

All quantities are kept inside 63-bit magnitudes; operations that would
leave that range raise OverflowError instead of silently growing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INT63_MAX = 2**63 - 1

# Deterministic Miller-Rabin witness set, sufficient for every n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 10**6
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)  # gaps between numbers coprime to 30, from 7


@dataclass(frozen=True)
class Factorization:
    """A positive integer as an ordered product of prime powers."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not 1 <= self.value <= INT63_MAX:
            raise ValueError(f"value out of 63-bit range: {self.value}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError("factors must be (prime, exponent >= 1), primes strictly increasing")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors recompose to {prod}, not {self.value}")


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with a*s + b*t = g = gcd(|a|, |b|) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lcm_list(ms) -> int:
    """lcm of a non-empty list of positive integers.

    Exceeding the 63-bit range is an error, never a wraparound.
    """
    if not ms:
        raise ValueError("lcm_list needs at least one value")
    acc = 1
    for m in ms:
        if m < 1:
            raise ValueError(f"values must be >= 1, got {m}")
        acc = math.lcm(acc, m)
        if acc > INT63_MAX:
            raise OverflowError(f"lcm exceeds the 63-bit range (reached {acc})")
    return acc


def is_prime(n: int) -> bool:
    """Deterministic primality test for 1 <= n <= 2^63 - 1."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Some non-trivial factor of an odd composite n (Brent's cycle variant)."""
    c = 1
    while True:
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # rare cycle degeneracy: retry with the next polynomial


def factorize(n: int) -> Factorization:
    """Prime factorization: trial division below 10^6, Pollard rho beyond."""
    if not 1 <= n <= INT63_MAX:
        raise ValueError(f"n out of 63-bit range: {n}")
    m = n
    found: dict[int, int] = {}
    for p in (2, 3, 5):
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    d, i = 7, 0
    while d <= _TRIAL_BOUND and d * d <= m:
        while m % d == 0:
            found[d] = found.get(d, 0) + 1
            m //= d
        d += _WHEEL[i]
        i = (i + 1) & 7
    if m > 1:
        stack = [m]
        while stack:
            v = stack.pop()
            if is_prime(v):
                found[v] = found.get(v, 0) + 1
            else:
                g = _pollard_rho(v)
                stack.append(g)
                stack.append(v // g)
    return Factorization(n, tuple(sorted(found.items())))


def euler_phi(f: Factorization) -> int:
    """Euler's totient of f.value: product of p^(e-1) * (p-1)."""
    out = 1
    for p, e in f.factors:
        out *= p ** (e - 1) * (p - 1)
    return out
