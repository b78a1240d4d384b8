"""Exact arithmetic in the integral group ring Z[G], G = (Z/ellZ)^*.

An element is a dense vector of arbitrary-precision integer coefficients,
entry a-1 holding the coefficient of the automorphism sigma_a.  Only the
Z-module structure and the G-action are implemented; full ring
multiplication is not needed by anything downstream.

Two textual forms round-trip through render()/parse(): a support set such
as "{1,5}" when every coefficient is 0 or 1, and a coefficient form such
as "2*s1-1*s3" otherwise.  The literal "N" parses to the G-trace.
"""

from __future__ import annotations

import re

from .errors import (
    IndexOutOfRange,
    ModulusMismatch,
    NotADivisor,
    NotCoprime,
    ParseError,
)
from .galois import CyclotomicModulus

_TERM_RE = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*\s*)?s(\d+)")


class GroupRingElement:
    """Immutable element of Z[(Z/ellZ)^*] with exact integer coefficients."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: CyclotomicModulus, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != modulus.ell - 1:
            raise ValueError(
                f"need {modulus.ell - 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElement is immutable")

    @classmethod
    def zero(cls, modulus: CyclotomicModulus) -> "GroupRingElement":
        return cls(modulus, (0,) * (modulus.ell - 1))

    @classmethod
    def sigma(cls, modulus: CyclotomicModulus, a: int) -> "GroupRingElement":
        """The single automorphism sigma_a as a ring element."""
        modulus.check_unit(a)
        coeffs = [0] * (modulus.ell - 1)
        coeffs[a - 1] = 1
        return cls(modulus, coeffs)

    def coefficient(self, a: int) -> int:
        """Coefficient of sigma_a."""
        self.modulus.check_unit(a)
        return self.coeffs[a - 1]

    def _require_same_modulus(self, other: "GroupRingElement") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"cannot combine elements over ell={self.modulus.ell} "
                f"and ell={other.modulus.ell}"
            )

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._require_same_modulus(other)
        return GroupRingElement(
            self.modulus, (x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._require_same_modulus(other)
        return GroupRingElement(
            self.modulus, (x - y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.modulus, (-x for x in self.coeffs))

    def __rmul__(self, k: int) -> "GroupRingElement":
        if not isinstance(k, int):
            return NotImplemented
        return GroupRingElement(self.modulus, (k * x for x in self.coeffs))

    __mul__ = __rmul__

    def act(self, c: int) -> "GroupRingElement":
        """Left multiplication by sigma_c: the coefficient of sigma_a moves
        to sigma_{c*a}."""
        m = self.modulus
        m.check_unit(c)
        coeffs = [0] * (m.ell - 1)
        for a, x in enumerate(self.coeffs, start=1):
            coeffs[c * a % m.ell - 1] = x
        return GroupRingElement(m, coeffs)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coeffs)

    def is_zero_one(self) -> bool:
        return all(x in (0, 1) for x in self.coeffs)

    def support(self) -> tuple[int, ...]:
        """Residues a with a nonzero coefficient, ascending."""
        return tuple(a for a, x in enumerate(self.coeffs, start=1) if x != 0)

    def coefficient_sum(self) -> int:
        return sum(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupRingElement)
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.modulus.ell, self.coeffs))

    def render(self) -> str:
        """Canonical text form; parse(render(x)) == x exactly."""
        if self.is_zero():
            return "0"
        if self.is_zero_one():
            return "{" + ",".join(str(a) for a in self.support()) + "}"
        parts = []
        for a, x in enumerate(self.coeffs, start=1):
            if x == 0:
                continue
            sign = "-" if x < 0 else ("+" if parts else "")
            parts.append(f"{sign}{abs(x)}*s{a}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"GroupRingElement(ell={self.modulus.ell}, {self.render()!r})"


def parse(text: str, modulus: CyclotomicModulus) -> GroupRingElement:
    """Parse "N", "0", a support set "{1,5}", or a coefficient form
    "1*s1+1*s5" / "2*s1-s3"."""
    s = text.strip()
    if s == "N":
        return trace_element(modulus)
    if s == "0":
        return GroupRingElement.zero(modulus)
    if s.startswith("{"):
        if not s.endswith("}"):
            raise ParseError(f"unterminated support set: {text!r}")
        body = s[1:-1].strip()
        coeffs = [0] * (modulus.ell - 1)
        if body:
            for tok in body.split(","):
                try:
                    a = int(tok.strip())
                except ValueError:
                    raise ParseError(f"bad support entry {tok.strip()!r}") from None
                try:
                    modulus.check_unit(a)
                except ValueError as exc:
                    raise ParseError(str(exc)) from None
                if coeffs[a - 1]:
                    raise ParseError(f"duplicate support entry {a}")
                coeffs[a - 1] = 1
        return GroupRingElement(modulus, coeffs)
    coeffs = [0] * (modulus.ell - 1)
    pos = 0
    seen = False
    for match in _TERM_RE.finditer(s):
        if s[pos : match.start()].strip():
            raise ParseError(f"cannot parse {text!r} near {s[pos:match.start()]!r}")
        sign, mag, a = match.group(1), match.group(2), int(match.group(3))
        try:
            modulus.check_unit(a)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        k = int(mag) if mag is not None else 1
        coeffs[a - 1] += -k if sign == "-" else k
        pos = match.end()
        seen = True
    if not seen or s[pos:].strip():
        raise ParseError(f"cannot parse group-ring element {text!r}")
    return GroupRingElement(modulus, coeffs)


def trace_element(modulus: CyclotomicModulus) -> GroupRingElement:
    """The G-trace: the sum of every automorphism, all coefficients 1."""
    return GroupRingElement(modulus, (1,) * (modulus.ell - 1))


def stickelberger_element(modulus: CyclotomicModulus, a: int) -> GroupRingElement:
    """theta_a: the coefficient of sigma_j is floor(a*i/ell) with i the
    inverse of j mod ell.  Requires a >= 1 coprime to ell."""
    ell = modulus.ell
    if a < 1 or a % ell == 0:
        raise NotCoprime(f"a must be >= 1 and coprime to {ell}, got {a}")
    coeffs = [0] * (ell - 1)
    for i in range(1, ell):
        coeffs[pow(i, -1, ell) - 1] = a * i // ell
    return GroupRingElement(modulus, coeffs)


def kummer_basis_element(modulus: CyclotomicModulus, i: int) -> GroupRingElement:
    """f_i = theta_{i+1} - theta_i for 1 <= i <= (ell-1)/2; a 0/1 vector
    with exactly (ell-1)/2 ones."""
    if not 1 <= i <= (modulus.ell - 1) // 2:
        raise IndexOutOfRange(
            f"i must lie in 1..{(modulus.ell - 1) // 2}, got {i}"
        )
    return stickelberger_element(modulus, i + 1) - stickelberger_element(modulus, i)


def coset_trace(modulus: CyclotomicModulus, f: int) -> GroupRingElement:
    """theta_f: the sum of sigma_r over the canonical representatives of the
    cosets of the unique order-f subgroup.  For f = 1 this is the G-trace."""
    if f < 1 or (modulus.ell - 1) % f != 0:
        raise NotADivisor(f"{f} does not divide {modulus.ell - 1}")
    sub = modulus.subgroup_of_order(f)
    coeffs = [0] * (modulus.ell - 1)
    for r in modulus.coset_representatives(sub):
        coeffs[r - 1] = 1
    return GroupRingElement(modulus, coeffs)
