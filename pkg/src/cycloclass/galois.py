"""Arithmetic in G = (Z/ellZ)^* for an odd prime ell.

G is the Galois group of the ell-th cyclotomic field over Q; the unit
residue a stands for the automorphism sending a primitive ell-th root of
unity to its a-th power.  Elements are plain ints in [1, ell-1], validated
at the CyclotomicModulus surface.  All values are immutable and all
operations pure, so instances may be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import divisors, is_prime_trial_division
from .errors import NotADivisor, NotOddPrime, RamifiedPrime


@dataclass(frozen=True)
class Subgroup:
    """The unique subgroup of (Z/ellZ)^* of a given order, members sorted."""

    order: int
    members: tuple[int, ...]

    def __contains__(self, a: int) -> bool:
        return a in self.members


class CyclotomicModulus:
    """An odd prime ell, fixing the group G = (Z/ellZ)^* of order ell-1."""

    __slots__ = ("ell",)

    def __init__(self, ell: int):
        if not isinstance(ell, int) or ell < 3 or not is_prime_trial_division(ell):
            raise NotOddPrime(f"{ell} is not an odd prime")
        object.__setattr__(self, "ell", ell)

    @property
    def group_order(self) -> int:
        return self.ell - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CyclotomicModulus) and other.ell == self.ell

    def __hash__(self) -> int:
        return hash(("CyclotomicModulus", self.ell))

    def __repr__(self) -> str:
        return f"CyclotomicModulus({self.ell})"

    def units(self) -> range:
        return range(1, self.ell)

    def check_unit(self, a: int) -> int:
        if not isinstance(a, int) or not 1 <= a <= self.ell - 1:
            raise ValueError(f"{a} is not a unit residue in [1, {self.ell - 1}]")
        return a

    def multiply(self, a: int, b: int) -> int:
        return self.check_unit(a) * self.check_unit(b) % self.ell

    def inverse(self, a: int) -> int:
        return pow(self.check_unit(a), -1, self.ell)

    def multiplicative_order(self, p: int) -> int:
        """Smallest f >= 1 with p^f = 1 mod ell; the residue degree of an
        unramified rational prime p."""
        r = p % self.ell
        if r == 0:
            raise RamifiedPrime(f"{p} is divisible by {self.ell}")
        for f in divisors(self.ell - 1):
            if pow(r, f, self.ell) == 1:
                return f
        raise AssertionError("unreachable: order must divide ell-1")

    def primitive_root(self) -> int:
        """Smallest generator of the cyclic group (Z/ellZ)^*."""
        for g in self.units():
            if self.multiplicative_order(g) == self.ell - 1:
                return g
        raise AssertionError("unreachable: (Z/ellZ)^* is cyclic")

    def subgroup_of_order(self, f: int) -> Subgroup:
        """The unique subgroup of order f; requires f | ell-1."""
        if f < 1 or (self.ell - 1) % f != 0:
            raise NotADivisor(f"{f} does not divide {self.ell - 1}")
        g = self.primitive_root()
        step = pow(g, (self.ell - 1) // f, self.ell)
        members = {1}
        x = step
        while x != 1:
            members.add(x)
            x = x * step % self.ell
        if len(members) != f:
            raise AssertionError("unreachable: generated subgroup has wrong size")
        return Subgroup(order=f, members=tuple(sorted(members)))

    def coset_representatives(self, sub: Subgroup) -> list[int]:
        """Smallest positive representative of each coset of sub, ascending."""
        covered = [False] * self.ell
        reps = []
        for u in self.units():
            if not covered[u]:
                reps.append(u)
                for s in sub.members:
                    covered[u * s % self.ell] = True
        return reps
