"""The group of permutations of Z_n induced by the degree maps u -> D_k(u, 1).

Reducing degrees mod w(n) turns the family into a finite group; the kernel
(degrees acting as the identity) decomposes per prime power into {1, -1}
mod l, widening to {1, -1, p, -p} for p >= 5 with exponent 1. A degree
belongs to the kernel exactly when it solves the congruence system built
from one element of each component, so enumerating solvable residue tuples
enumerates the kernel, and the group order is phi(w(n)) / |kernel|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _sweeps
from .congruence import Congruence, solve_chain, solve_pair_values
from .criteria import ModuliProfile, l_odd, l_two, profile
from .errors import CapExceededError, KernelConsistencyError, UnsolvableTupleError
from .numth import Factorization, euler_phi, factorize, is_prime

ORACLE_CAP_DEFAULT = 2000


@dataclass(frozen=True)
class KernelComponent:
    """Kernel of the degree map restricted to one prime power factor."""

    prime_power: tuple[int, int]
    modulus: int
    elements: frozenset[int]


@dataclass(frozen=True)
class KernelResult:
    """The kernel mod w(n) plus, per element, the residue tuple solving it."""

    n: int
    profile: ModuliProfile
    kernel: frozenset[int]
    witnesses: dict[int, tuple[int, ...]]


@dataclass(frozen=True)
class GroupOrderReport:
    """Everything behind one group-order value, with its computation route."""

    n: int
    w: int
    phi_w: int
    kernel_size: int
    order: int
    method: str


def kernel_component(p: int, e: int) -> KernelComponent:
    """The component kernel for p^e, residues canonical mod its modulus."""
    if e < 1 or not is_prime(p):
        raise ValueError(f"need a prime power, got {p}^{e}")
    if p == 2:
        l = l_two(e)
        elems = {1, l - 1}
    elif p == 3 or e > 1:
        l = l_odd(p, e)
        elems = {1, l - 1}
    else:
        l = l_odd(p, 1)
        elems = {1, l - 1, p % l, (l - p) % l}
        if len(elems) != 4:
            raise KernelConsistencyError(f"residues 1, -1, {p}, -{p} collide mod {l}")
    return KernelComponent((p, e), l, frozenset(elems))


def components(f: Factorization) -> list[KernelComponent]:
    """One component per prime power: the 2-part first, odd primes ascending."""
    if f.value < 2:
        raise ValueError("components need n >= 2")
    return [kernel_component(p, e) for p, e in f.factors]


def enumerate_kernel(f: Factorization) -> KernelResult:
    """All degrees mod w(n) acting as the identity, with witness tuples.

    Walks the cartesian product of the component kernels (first component
    outermost, elements ascending), folding the congruences left to right
    and pruning prefixes that are already unsolvable. Every solvable tuple
    must land on a distinct degree; a collision means a solver bug.
    """
    prof = profile(f)
    comps = components(f)
    kernel: dict[int, tuple[int, ...]] = {}
    first = comps[0]
    stack = [(1, a, first.modulus, (a,)) for a in sorted(first.elements, reverse=True)]
    while stack:
        idx, x, l, chosen = stack.pop()
        if idx == len(comps):
            if l != prof.w:
                raise KernelConsistencyError(f"fold modulus {l} != w({f.value}) = {prof.w}")
            if x in kernel:
                raise KernelConsistencyError(
                    f"tuples {kernel[x]} and {chosen} both solve to {x} mod {prof.w}")
            kernel[x] = chosen
            continue
        comp = comps[idx]
        for a in sorted(comp.elements, reverse=True):
            merged = solve_pair_values(x, l, a, comp.modulus)
            if merged is not None:
                stack.append((idx + 1, merged[0], merged[1], chosen + (a,)))
    return KernelResult(f.value, prof, frozenset(kernel), dict(sorted(kernel.items())))


def rho(residues: tuple[int, ...], f: Factorization) -> int:
    """The kernel element solved from one residue tuple, in component order."""
    comps = components(f)
    if len(residues) != len(comps):
        raise ValueError(f"expected {len(comps)} residues, got {len(residues)}")
    for a, comp in zip(residues, comps):
        if a % comp.modulus not in comp.elements:
            raise ValueError(f"{a} is not a kernel element mod {comp.modulus}")
    sol = solve_chain([Congruence(a, c.modulus) for a, c in zip(residues, comps)])
    if sol is None:
        raise UnsolvableTupleError(f"residue tuple {residues} has no common solution")
    return sol.residue


def group_order(f: Factorization) -> GroupOrderReport:
    """Group order by kernel enumeration: phi(w(n)) / |kernel|, exactly."""
    kr = enumerate_kernel(f)
    phi_w = euler_phi(factorize(kr.profile.w))
    size = len(kr.kernel)
    order, rem = divmod(phi_w, size)
    if rem:
        raise KernelConsistencyError(f"|kernel| = {size} does not divide phi(w) = {phi_w}")
    return GroupOrderReport(f.value, kr.profile.w, phi_w, size, order, "kernel_enum")


def group_order_closed_pe(p: int, e: int) -> int:
    """Group order for a prime power from the six-branch closed form."""
    if e < 1 or not is_prime(p):
        raise ValueError(f"need a prime power, got {p}^{e}")
    if p == 2:
        return 1 if e < 3 else 2 ** (e - 3)
    if p == 3:
        return 1 if e == 1 else 2 * 3 ** (e - 2)
    phi_half = euler_phi(factorize((p * p - 1) // 2))
    if e == 1:
        order, rem = divmod(phi_half, 4)
        if rem:
            raise KernelConsistencyError(f"4 does not divide phi((p^2-1)/2) for p = {p}")
        return order
    return p ** (e - 2) * (p - 1) // 2 * phi_half


def _unit_mask(w: int) -> np.ndarray:
    return np.gcd(np.arange(w + 1, dtype=np.int64), w) == 1


def kernel_oracle(n: int, cap: int = ORACLE_CAP_DEFAULT) -> frozenset[int]:
    """Ground truth kernel: unit degrees k mod w(n) whose map fixes every point.

    Sweeps k = 1..w(n) with the recurrence; no congruence systems involved.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if n > cap:
        raise CapExceededError(f"kernel oracle capped at n <= {cap}, got {n}")
    w = profile(factorize(n)).w
    hit = _sweeps.identity_flags(n, 1, w).astype(bool) & _unit_mask(w)
    return frozenset(int(k) for k in np.nonzero(hit)[0])


def group_order_oracle(n: int, cap: int = ORACLE_CAP_DEFAULT) -> int:
    """Ground truth group order: count distinct image vectors over unit degrees."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if n > cap:
        raise CapExceededError(f"order oracle capped at n <= {cap}, got {n}")
    w = profile(factorize(n)).w
    units = _unit_mask(w)
    distinct: set[bytes] = set()
    for k0, block in _sweeps.iter_image_blocks(n, 1, w):
        for row in block[units[k0:k0 + block.shape[0]]]:
            distinct.add(row.tobytes())
    return len(distinct)


def order_report(n: int, method: str = "auto", cap: int = ORACLE_CAP_DEFAULT) -> GroupOrderReport:
    """Group order by the requested route; n = 1 has only the identity map.

    auto picks the closed form for prime powers and kernel enumeration
    otherwise; the oracle route recomputes everything by brute force.
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if n == 1:
        return GroupOrderReport(1, 1, 1, 1, 1, "trivial")
    f = factorize(n)
    if method == "auto":
        method = "closed" if len(f.factors) == 1 else "enum"
    if method == "enum":
        return group_order(f)
    prof = profile(f)
    phi_w = euler_phi(factorize(prof.w))
    if method == "closed":
        if len(f.factors) != 1:
            raise ValueError(f"closed form needs a prime power, got {n}")
        p, e = f.factors[0]
        order = group_order_closed_pe(p, e)
        size = len(kernel_component(p, e).elements)
        if order * size != phi_w:
            raise KernelConsistencyError(f"closed form inconsistent at {p}^{e}")
        return GroupOrderReport(n, prof.w, phi_w, size, order, "closed_form")
    if method == "oracle":
        order = group_order_oracle(n, cap)
        size, rem = divmod(phi_w, order)
        if rem:
            raise KernelConsistencyError(f"oracle order {order} does not divide phi(w) = {phi_w}")
        return GroupOrderReport(n, prof.w, phi_w, size, order, "oracle")
    raise ValueError(f"unknown method: {method!r}")
