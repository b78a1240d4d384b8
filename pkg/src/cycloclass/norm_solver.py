"""Decides solvability of |Norm(x)| = a over the ell-th cyclotomic field.

Necessity is local: the valuation of any norm at a rational prime p is a
multiple of the residue degree of p.  Sufficiency is established prime by
prime through a fixed rule ladder that exhibits a recipe for an element of
norm p^f (ramified generator, inert prime, a Bezout combination through
the class number, or principality of all degree-f primes when the
generation set is known to be {1}).  The engine only decides; it never
constructs field elements, so witnesses are symbolic recipes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING, Sequence

from .arith import divisors, factorize, is_prime, xgcd
from .class_data import ClassNumberRecord
from .errors import ParseError
from .galois import CyclotomicModulus

if TYPE_CHECKING:  # pragma: no cover
    from .stickelberger import ResidueGenerationVerdict

SOLVABLE = "SOLVABLE"
NOT_SOLVABLE = "NOT_SOLVABLE"
UNKNOWN = "UNKNOWN"

RULE_ZERO = "zero_value"
RULE_UNIT = "unit_value"
RULE_NEGATIVE = "negative_value"
RULE_VALUATION = "valuation_mismatch"
RULE_RAMIFIED = "ramified_generator"
RULE_INERT = "inert_prime"
RULE_BEZOUT = "class_number_bezout"
RULE_PRINCIPAL = "principal_by_generation"
RULE_NONE = "no_rule"


@dataclass(frozen=True)
class SignedFactorization:
    """sign * product(p^e) == the input rational, primes ascending,
    exponents nonzero; sign 0 encodes the input 0."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> Fraction:
        out = Fraction(self.sign)
        for p, e in self.factors:
            out *= Fraction(p) ** e
        return out


def factor_rational(numerator: int, denominator: int = 1) -> SignedFactorization:
    """Exact signed factorization of numerator/denominator."""
    if denominator <= 0:
        raise ValueError("denominator must be positive")
    if numerator == 0:
        return SignedFactorization(sign=0, factors=())
    value = Fraction(numerator, denominator)
    exponents = dict(factorize(abs(value.numerator)))
    for p, e in factorize(value.denominator).items():
        exponents[p] = exponents.get(p, 0) - e
    factors = tuple(sorted((p, e) for p, e in exponents.items() if e != 0))
    return SignedFactorization(sign=1 if value > 0 else -1, factors=factors)


@dataclass(frozen=True)
class PrimeLocalData:
    """Splitting data of a rational prime: ramified iff p = ell, else the
    residue degree is the order of p mod ell."""

    p: int
    ramified: bool
    residue_degree: int


def local_data(modulus: CyclotomicModulus, p: int) -> PrimeLocalData:
    if p == modulus.ell:
        return PrimeLocalData(p=p, ramified=True, residue_degree=1)
    return PrimeLocalData(
        p=p, ramified=False, residue_degree=modulus.multiplicative_order(p)
    )


@dataclass(frozen=True, eq=True)
class TraceEntry:
    """One fired rule; prime is None for global rules (sign, zero, unit).

    data carries the rule's exact arithmetic (for the Bezout rule: f, h,
    gcd, and the pair (s, t) with f*h*s + (ell-1)*t = gcd)."""

    prime: int | None
    rule: str
    detail: str
    rejected: tuple[str, ...] = ()
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "rule": self.rule,
            "detail": self.detail,
            "rejected": list(self.rejected),
            "data": dict(self.data),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TraceEntry":
        return cls(
            prime=d["prime"],
            rule=d["rule"],
            detail=d["detail"],
            rejected=tuple(d["rejected"]),
            data=dict(d.get("data", {})),
        )


@dataclass(frozen=True)
class NormVerdict:
    ell: int
    a: Fraction
    status: str
    trace: tuple[TraceEntry, ...]
    assumptions: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "a": {"num": self.a.numerator, "den": self.a.denominator},
            "status": self.status,
            "trace": [t.to_dict() for t in self.trace],
            "assumptions": list(self.assumptions),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "NormVerdict":
        return cls(
            ell=d["ell"],
            a=Fraction(d["a"]["num"], d["a"]["den"]),
            status=d["status"],
            trace=tuple(TraceEntry.from_dict(t) for t in d["trace"]),
            assumptions=tuple(d["assumptions"]),
        )


def parse_rational(text: str) -> Fraction:
    """Exact rational from "n" or "n/d"."""
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return Fraction(int(num.strip()), int(den.strip()))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {text!r} ({exc})") from None


def _r_set_is_trivial(r_table: Sequence["ResidueGenerationVerdict"]) -> bool:
    """True when the table proves the generation set is exactly {1}."""
    saw_one = False
    for v in r_table:
        if v.f == 1:
            saw_one = v.status == "IN_R"
        elif v.status != "NOT_IN_R":
            return False
    return saw_one


def witness_coverage(
    modulus: CyclotomicModulus,
    record: ClassNumberRecord,
    r_table: Sequence["ResidueGenerationVerdict"] | None = None,
) -> dict[int, str | None]:
    """Which witness rule (if any) certifies p^f as a norm value for each
    possible residue degree f.  The ramified prime is always covered, so the
    map runs over the divisors of ell-1; a None value means degree-f primes
    can make the engine answer UNKNOWN."""
    ell = modulus.ell
    h = record.h
    coverage: dict[int, str | None] = {}
    for f in divisors(ell - 1):
        if f == ell - 1:
            coverage[f] = RULE_INERT
        elif f % gcd(f * h, ell - 1) == 0:
            coverage[f] = RULE_BEZOUT
        elif (
            r_table is not None
            and f > 1
            and is_prime(h)
            and _r_set_is_trivial(r_table)
        ):
            coverage[f] = RULE_PRINCIPAL
        else:
            coverage[f] = None
    return coverage


def _witness_for_prime(
    modulus: CyclotomicModulus,
    p: int,
    e: int,
    record: ClassNumberRecord,
    r_table: Sequence["ResidueGenerationVerdict"] | None,
) -> tuple[TraceEntry, tuple[str, ...]]:
    """Trace entry for the first rule that exhibits p^f as a norm value; a
    RULE_NONE entry (with the rejection notes) when nothing applies."""
    ell = modulus.ell
    ld = local_data(modulus, p)
    f = ld.residue_degree
    h = record.h
    rejected: list[str] = []
    if ld.ramified:
        return (
            TraceEntry(
                prime=p,
                rule=RULE_RAMIFIED,
                detail=f"norm(1 - zeta) = {ell}; x contributes (1 - zeta)^{e}",
                rejected=tuple(rejected),
                data={"f": 1, "v": e},
            ),
            (),
        )
    rejected.append(f"{RULE_RAMIFIED}: {p} != {ell}")
    if f == ell - 1:
        return (
            TraceEntry(
                prime=p,
                rule=RULE_INERT,
                detail=f"{p} is inert: norm({p}) = {p}^{ell - 1}; "
                f"x contributes {p}^{e // f}",
                rejected=tuple(rejected),
                data={"f": f, "v": e},
            ),
            (),
        )
    rejected.append(f"{RULE_INERT}: residue degree {f} < {ell - 1}")
    g, s, t = xgcd(f * h, ell - 1)
    if f % g == 0:
        # norm(beta) = p^(f*h) for beta generating P^h, norm(p) = p^(ell-1);
        # combining exponents lands on p^g, and g | f.
        if f * h * s + (ell - 1) * t != g:
            raise AssertionError("xgcd identity failed")  # pragma: no cover
        k = e // g
        return (
            TraceEntry(
                prime=p,
                rule=RULE_BEZOUT,
                detail=(
                    f"gcd({f}*{h}, {ell - 1}) = {g} divides f = {f}: with "
                    f"norm(beta) = {p}^{f * h} (beta generates P^h) and "
                    f"norm({p}) = {p}^{ell - 1}, ({f * h})*({s}) + "
                    f"({ell - 1})*({t}) = {g}; x contributes "
                    f"(beta^{s} * {p}^{t})^{k}"
                ),
                rejected=tuple(rejected),
                data={"f": f, "h": h, "v": e, "gcd": g, "s": s, "t": t},
            ),
            (),
        )
    rejected.append(f"{RULE_BEZOUT}: gcd({f}*{h}, {ell - 1}) = {g} does not divide {f}")
    if r_table is not None and f > 1 and is_prime(h) and _r_set_is_trivial(r_table):
        inherited: tuple[str, ...] = tuple(
            dict.fromkeys(
                name
                for v in r_table
                if v.f > 1
                for name in v.assumptions
            )
        )
        return (
            TraceEntry(
                prime=p,
                rule=RULE_PRINCIPAL,
                detail=(
                    f"h = {h} is prime and the generation set is {{1}}, so "
                    f"every degree-{f} prime ideal is principal; a generator "
                    f"alpha has |norm(alpha)| = {p}^{f}; x contributes "
                    f"alpha^{e // f}"
                ),
                rejected=tuple(rejected),
                data={"f": f, "h": h, "v": e},
            ),
            inherited,
        )
    rejected.append(
        f"{RULE_PRINCIPAL}: needs prime h, a proof that the generation set "
        f"is {{1}}, and f > 1"
    )
    return (
        TraceEntry(
            prime=p,
            rule=RULE_NONE,
            detail=f"no applicable witness rule for {p}",
            rejected=tuple(rejected),
            data={"f": f, "h": h, "v": e},
        ),
        (),
    )


def norm_solvable(
    modulus: CyclotomicModulus,
    a,
    record: ClassNumberRecord,
    r_table: Sequence["ResidueGenerationVerdict"] | None = None,
) -> NormVerdict:
    """Decide |Norm(x)| = a with a full rule trace.

    Order of business: a = 0 and a < 0 are settled by the norm's image;
    then any prime whose valuation is not a multiple of its residue degree
    refutes solvability; finally each prime factor needs a witness recipe
    for p^f being a norm value, and a prime none of the rules covers
    leaves the verdict UNKNOWN.
    """
    if record.ell != modulus.ell:
        raise ValueError(f"class record is for ell={record.ell}, expected {modulus.ell}")
    a = Fraction(a)
    ell = modulus.ell
    if a == 0:
        return NormVerdict(
            ell,
            a,
            SOLVABLE,
            (TraceEntry(None, RULE_ZERO, "norm(0) = 0"),),
        )
    if a < 0:
        return NormVerdict(
            ell,
            a,
            NOT_SOLVABLE,
            (
                TraceEntry(
                    None,
                    RULE_NEGATIVE,
                    f"the degree-{ell - 1} cyclotomic field is totally "
                    f"complex, so |norm| values are non-negative and norm "
                    f"values themselves are too",
                ),
            ),
        )
    fact = factor_rational(a.numerator, a.denominator)
    for p, e in fact.factors:
        f = local_data(modulus, p).residue_degree
        if e % f != 0:
            return NormVerdict(
                ell,
                a,
                NOT_SOLVABLE,
                (
                    TraceEntry(
                        prime=p,
                        rule=RULE_VALUATION,
                        detail=(
                            f"v_{p}(a) = {e} is not a multiple of the "
                            f"residue degree {f} of {p}"
                        ),
                        data={"f": f, "v": e},
                    ),
                ),
            )
    trace: list[TraceEntry] = []
    assumptions: list[str] = []
    unknown = False
    if not fact.factors:
        trace.append(TraceEntry(None, RULE_UNIT, "|a| = 1: x = 1 works"))
    for p, e in fact.factors:
        entry, inherited = _witness_for_prime(modulus, p, e, record, r_table)
        trace.append(entry)
        if entry.rule == RULE_NONE:
            unknown = True
        assumptions.extend(n for n in inherited if n not in assumptions)
    return NormVerdict(
        ell,
        a,
        UNKNOWN if unknown else SOLVABLE,
        tuple(trace),
        tuple(assumptions),
    )
