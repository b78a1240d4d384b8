"""Kummer basis of the Stickelberger ideal and what it decides.

The Stickelberger ideal S of Z[G] for the ell-th cyclotomic field is the
Z-lattice spanned by the Kummer basis f_1, ..., f_{(ell-1)/2}, N.  Whether
a group-ring element lies in S is an integer linear system over that
basis, so membership comes back with a checkable certificate either way:
the combination coefficients, or an infeasibility witness.

On top of membership sits the generation question: for which residue
degrees f do the classes of degree-f prime ideals generate the whole class
group?  We call that set of degrees R.  When h+ = 1, every annihilator of
the class group lies in S, and if f were in R then the coset trace over
ANY complete set of representatives of G modulo the order-f subgroup would
annihilate the class group (the subgroup fixes each degree-f prime, so the
product of conjugates over any representative set is the rational prime
itself).  A certificate that one such trace lies outside S therefore rules
f out.  Membership of a coset trace in S is not representative-invariant,
so after the canonical trace the verdict route also probes single-swap
variants before giving up with INCONCLUSIVE.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from random import Random

from .arith import divisors
from .class_data import ClassNumberRecord
from .errors import HPlusUnknown, ModulusMismatch, NotADivisor
from .galois import CyclotomicModulus
from .group_ring import (
    GroupRingElement,
    coset_trace,
    kummer_basis_element,
    parse,
    trace_element,
)
from .zlattice import (
    HermiteSolver,
    IntMatrix,
    Solution,
    outcome_from_dict,
    rational_rank,
)

# Named hypotheses attached to verdicts that rely on them.
ASSUMPTION_H_PLUS_ONE = "h_plus_equals_one"
ASSUMPTION_INDEX_H_MINUS = "index_h_minus"

IN_R = "IN_R"
NOT_IN_R = "NOT_IN_R"
INCONCLUSIVE = "INCONCLUSIVE"

REASON_DENSITY = "density_theorem"
REASON_TRIVIAL_CLASS_GROUP = "trivial_class_group"
REASON_INERT = "inert_nontrivial_class"
REASON_NOT_IN_IDEAL = "coset_trace_not_in_ideal"
REASON_IN_IDEAL = "coset_trace_in_ideal"


class KummerBasis:
    """The (ell-1) x (ell+1)/2 matrix whose columns are f_1, ...,
    f_{(ell-1)/2} and the G-trace N; a Z-basis of the Stickelberger ideal."""

    def __init__(self, modulus: CyclotomicModulus):
        self.modulus = modulus
        self.f_elements = [
            kummer_basis_element(modulus, i)
            for i in range(1, (modulus.ell - 1) // 2 + 1)
        ]
        self.trace = trace_element(modulus)
        self.matrix = IntMatrix.from_columns(
            [e.coeffs for e in self.f_elements] + [self.trace.coeffs]
        )
        if rational_rank(self.matrix) != self.matrix.cols:
            raise AssertionError(
                f"Kummer columns for ell={modulus.ell} are not independent"
            )
        self._solver: HermiteSolver | None = None

    @property
    def num_f(self) -> int:
        return len(self.f_elements)

    def solver(self) -> HermiteSolver:
        if self._solver is None:
            self._solver = HermiteSolver(self.matrix)
        return self._solver


@lru_cache(maxsize=None)
def kummer_basis(modulus: CyclotomicModulus) -> KummerBasis:
    return KummerBasis(modulus)


@dataclass(frozen=True)
class InIdeal:
    """Membership certificate: element = sum(f_coeffs[i] * f_{i+1}) +
    trace_coeff * N."""

    f_coeffs: tuple[int, ...]
    trace_coeff: int

    def to_dict(self) -> dict:
        return {
            "tag": "in_ideal",
            "f_coeffs": list(self.f_coeffs),
            "trace_coeff": self.trace_coeff,
        }


@dataclass(frozen=True)
class NotInIdeal:
    """Non-membership certificate wrapping the integer-system witness."""

    certificate: object  # RationalInfeasible | NonIntegral

    def to_dict(self) -> dict:
        return {"tag": "not_in_ideal", "certificate": self.certificate.to_dict()}


MembershipResult = InIdeal | NotInIdeal


def membership_from_dict(d: dict) -> MembershipResult:
    tag = d.get("tag")
    if tag == "in_ideal":
        return InIdeal(tuple(d["f_coeffs"]), d["trace_coeff"])
    if tag == "not_in_ideal":
        return NotInIdeal(outcome_from_dict(d["certificate"]))
    raise ValueError(f"unknown membership tag {tag!r}")


def membership(basis: KummerBasis, element: GroupRingElement) -> MembershipResult:
    """Decide element in S, with a certificate either way."""
    if element.modulus != basis.modulus:
        raise ModulusMismatch(
            f"element over ell={element.modulus.ell}, basis over "
            f"ell={basis.modulus.ell}"
        )
    outcome = basis.solver().solve(element.coeffs)
    if isinstance(outcome, Solution):
        return InIdeal(f_coeffs=outcome.x[:-1], trace_coeff=outcome.x[-1])
    return NotInIdeal(outcome)


def verify_membership(
    modulus: CyclotomicModulus,
    element: GroupRingElement,
    result: MembershipResult,
) -> bool:
    """Re-check a membership result against a freshly built basis matrix,
    without going through the solver that produced it."""
    fresh = KummerBasis(modulus)
    if isinstance(result, InIdeal):
        combo = GroupRingElement.zero(modulus)
        for c, f_elem in zip(result.f_coeffs, fresh.f_elements, strict=True):
            combo = combo + c * f_elem
        combo = combo + result.trace_coeff * fresh.trace
        return combo == element
    return result.certificate.verify(fresh.matrix, element.coeffs)


def random_coset_trace(
    modulus: CyclotomicModulus, f: int, rng: Random
) -> GroupRingElement:
    """A non-canonical coset trace: one random representative per coset
    instead of the smallest.  Used by the representative-choice stress mode;
    membership tags of variants are observed, not asserted."""
    sub = modulus.subgroup_of_order(f)
    coeffs = [0] * (modulus.ell - 1)
    for r in modulus.coset_representatives(sub):
        d = rng.choice(sub.members)
        coeffs[r * d % modulus.ell - 1] += 1
    return GroupRingElement(modulus, coeffs)


@dataclass(frozen=True)
class ResidueGenerationVerdict:
    """Answer to: do classes of residue-degree-f primes generate the class
    group of the ell-th cyclotomic field?

    tested_element records which coset trace the membership certificate is
    about (canonical or a representative variant), in parseable text form.
    """

    ell: int
    f: int
    status: str
    reason: str
    assumptions: tuple[str, ...] = ()
    membership: MembershipResult | None = None
    tested_element: str = ""
    detail: str = ""

    def to_dict(self) -> dict:
        d = {
            "ell": self.ell,
            "f": self.f,
            "status": self.status,
            "reason": self.reason,
            "assumptions": list(self.assumptions),
            "detail": self.detail,
        }
        if self.membership is not None:
            d["certificate"] = {
                "element": self.tested_element,
                "membership": self.membership.to_dict(),
            }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ResidueGenerationVerdict":
        cert = d.get("certificate")
        return cls(
            ell=d["ell"],
            f=d["f"],
            status=d["status"],
            reason=d["reason"],
            assumptions=tuple(d["assumptions"]),
            membership=membership_from_dict(cert["membership"]) if cert else None,
            tested_element=cert["element"] if cert else "",
            detail=d.get("detail", ""),
        )


def verify_verdict_certificate(verdict: ResidueGenerationVerdict) -> bool:
    """Re-verify the membership certificate carried by a verdict against a
    freshly constructed basis; True for verdicts that carry none."""
    if verdict.membership is None:
        return True
    modulus = CyclotomicModulus(verdict.ell)
    element = parse(verdict.tested_element, modulus)
    return verify_membership(modulus, element, verdict.membership)


def _check_h_plus(
    modulus: CyclotomicModulus, record: ClassNumberRecord, assume_h_plus_one: bool
) -> None:
    if record.ell != modulus.ell:
        raise ValueError(
            f"class record is for ell={record.ell}, expected {modulus.ell}"
        )
    if record.h_plus != 1:
        raise HPlusUnknown(
            f"method requires h+ = 1, table records h+ = {record.h_plus} "
            f"for ell={record.ell}"
        )
    if modulus.ell >= 100 and not assume_h_plus_one:
        raise HPlusUnknown(
            f"h+ = 1 is only established for ell < 100; pass "
            f"assume_h_plus_one to proceed for ell={modulus.ell}"
        )


def _coset_trace_route(
    modulus: CyclotomicModulus, f: int, basis: KummerBasis
) -> tuple[str, MembershipResult, GroupRingElement, str]:
    """Membership route: canonical trace first, then single-swap variants.

    Any complete set of coset representatives yields an annihilator when f
    is in R, so one non-member variant soundly certifies NOT_IN_R even if
    the canonical trace happens to lie in the ideal."""
    canonical = coset_trace(modulus, f)
    result = membership(basis, canonical)
    if isinstance(result, NotInIdeal):
        return (
            NOT_IN_R,
            result,
            canonical,
            f"the canonical coset trace theta_{f} lies outside the "
            f"Stickelberger ideal, so it cannot annihilate the class group",
        )
    sub = modulus.subgroup_of_order(f)
    reps = modulus.coset_representatives(sub)
    for pos, r in enumerate(reps):
        for d in sub.members:
            if d == 1:
                continue
            coeffs = [0] * (modulus.ell - 1)
            for i, rep in enumerate(reps):
                rep_used = rep * d % modulus.ell if i == pos else rep
                coeffs[rep_used - 1] = 1
            variant = GroupRingElement(modulus, coeffs)
            vresult = membership(basis, variant)
            if isinstance(vresult, NotInIdeal):
                return (
                    NOT_IN_R,
                    vresult,
                    variant,
                    f"theta_{f} for the canonical representatives lies in "
                    f"the Stickelberger ideal, but swapping representative "
                    f"{r} for {r * d % modulus.ell} gives a coset trace "
                    f"outside it; were f in R, every complete set of "
                    f"representatives would yield an ideal member",
                )
    return (
        INCONCLUSIVE,
        result,
        canonical,
        f"theta_{f} and all single-swap representative variants lie in the "
        f"Stickelberger ideal; membership cannot settle f",
    )


def residue_generation_verdict(
    modulus: CyclotomicModulus,
    f: int,
    record: ClassNumberRecord,
    assume_h_plus_one: bool = False,
    basis: KummerBasis | None = None,
) -> ResidueGenerationVerdict:
    """Decide f in R / f not in R / inconclusive, with a reason trace.

    Decision order: residue degree one always generates (density of split
    primes); a trivial class group is generated by anything; an inert prime
    is principal, so f = ell-1 cannot generate a nontrivial group; otherwise
    coset traces for f must lie in the Stickelberger ideal if f is to
    generate, and a non-membership certificate rules f out.
    """
    ell = modulus.ell
    if f < 1 or (ell - 1) % f != 0:
        raise NotADivisor(f"{f} does not divide {ell - 1}")
    _check_h_plus(modulus, record, assume_h_plus_one)
    base_assumptions = (
        (ASSUMPTION_H_PLUS_ONE,) if (assume_h_plus_one and ell >= 100) else ()
    )
    if f == 1:
        return ResidueGenerationVerdict(
            ell,
            f,
            IN_R,
            REASON_DENSITY,
            detail="every ideal class contains primes of residue degree one",
        )
    if record.h == 1:
        return ResidueGenerationVerdict(
            ell,
            f,
            IN_R,
            REASON_TRIVIAL_CLASS_GROUP,
            detail="h = 1: the trivial class group is generated by any class",
        )
    if f == ell - 1:
        return ResidueGenerationVerdict(
            ell,
            f,
            NOT_IN_R,
            REASON_INERT,
            detail=(
                f"an inert prime is principal, so degree-{f} classes are all "
                f"trivial while h = {record.h} > 1"
            ),
        )
    if basis is None:
        basis = kummer_basis(modulus)
    status, result, element, detail = _coset_trace_route(modulus, f, basis)
    assumptions = tuple(
        dict.fromkeys(
            base_assumptions + (ASSUMPTION_H_PLUS_ONE, ASSUMPTION_INDEX_H_MINUS)
        )
    )
    return ResidueGenerationVerdict(
        ell,
        f,
        status,
        REASON_NOT_IN_IDEAL if status == NOT_IN_R else REASON_IN_IDEAL,
        assumptions=assumptions,
        membership=result,
        tested_element=element.render(),
        detail=detail,
    )


def residue_generation_table(
    modulus: CyclotomicModulus,
    record: ClassNumberRecord,
    assume_h_plus_one: bool = False,
) -> list[ResidueGenerationVerdict]:
    """One verdict per divisor f of ell-1, ascending."""
    _check_h_plus(modulus, record, assume_h_plus_one)
    needs_basis = record.h != 1
    basis = kummer_basis(modulus) if needs_basis else None
    return [
        residue_generation_verdict(
            modulus, f, record, assume_h_plus_one=assume_h_plus_one, basis=basis
        )
        for f in divisors(modulus.ell - 1)
    ]
