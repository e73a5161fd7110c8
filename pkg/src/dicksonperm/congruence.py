"""Linear congruence systems whose moduli need not be coprime.

x = a (mod p), x = b (mod q) is solvable iff gcd(p, q) divides a - b, and
then the solution is unique mod lcm(p, q); longer systems fold pairwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .numth import INT63_MAX, ext_gcd


@dataclass(frozen=True)
class Congruence:
    """x = residue (mod modulus), residue stored canonically in [0, modulus)."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)


@dataclass(frozen=True)
class CongruenceSolution:
    """The unique solution class x = residue (mod modulus = lcm of inputs)."""

    residue: int
    modulus: int


def solve_pair_values(a: int, p: int, b: int, q: int) -> Optional[tuple[int, int]]:
    """Raw pair solver: (x, lcm(p, q)) with x canonical, or None if unsolvable.

    With g = p*s + q*t from the extended Euclidean algorithm and
    d = (a - b)/g, the representative a - p*s*d satisfies both congruences.
    """
    g, s, _ = ext_gcd(p, q)
    if (a - b) % g:
        return None
    l = p // g * q
    if l > INT63_MAX:
        raise OverflowError(f"combined modulus exceeds the 63-bit range: lcm({p}, {q})")
    d = (a - b) // g
    return (a - p * s * d) % l, l


def solve_pair(c1: Congruence, c2: Congruence) -> Optional[CongruenceSolution]:
    """Solve two congruences; None when gcd of the moduli separates the residues."""
    merged = solve_pair_values(c1.residue, c1.modulus, c2.residue, c2.modulus)
    return None if merged is None else CongruenceSolution(*merged)


def solve_chain(cs: Sequence[Congruence]) -> Optional[CongruenceSolution]:
    """Left-fold of solve_pair over a non-empty system.

    The result satisfies every input congruence and its modulus is the lcm
    of all input moduli; None as soon as one merge is unsolvable.
    """
    if not cs:
        raise ValueError("empty congruence system")
    x, l = cs[0].residue, cs[0].modulus
    for c in cs[1:]:
        merged = solve_pair_values(x, l, c.residue, c.modulus)
        if merged is None:
            return None
        x, l = merged
    return CongruenceSolution(x, l)
