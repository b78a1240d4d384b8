"""Exact tools for prime cyclotomic class groups.

Decides whether the class group of the ell-th cyclotomic field is
generated by classes of prime ideals of a given residue degree (through
Stickelberger-ideal membership with certificates), and whether the
absolute norm equation |N(x)| = a is solvable.
"""

from .class_data import (
    ClassNumberRecord,
    load_default_table,
    load_table,
    lookup,
    maillet_h_minus,
)
from .errors import CycloclassError
from .galois import CyclotomicModulus, Subgroup
from .group_ring import (
    GroupRingElement,
    coset_trace,
    kummer_basis_element,
    parse,
    stickelberger_element,
    trace_element,
)
from .norm_solver import (
    NormVerdict,
    PrimeLocalData,
    SignedFactorization,
    factor_rational,
    local_data,
    norm_solvable,
    parse_rational,
)
from .stickelberger import (
    InIdeal,
    KummerBasis,
    NotInIdeal,
    ResidueGenerationVerdict,
    kummer_basis,
    membership,
    residue_generation_table,
    residue_generation_verdict,
    verify_membership,
)
from .zlattice import (
    HermiteSolver,
    IntMatrix,
    NonIntegral,
    RationalInfeasible,
    Solution,
    bareiss_determinant,
    hnf,
    snf_diagonal,
    solve_integer,
)

__version__ = "0.1.0"

__all__ = [
    "ClassNumberRecord",
    "CyclotomicModulus",
    "CycloclassError",
    "GroupRingElement",
    "HermiteSolver",
    "InIdeal",
    "IntMatrix",
    "KummerBasis",
    "NonIntegral",
    "NormVerdict",
    "NotInIdeal",
    "PrimeLocalData",
    "RationalInfeasible",
    "ResidueGenerationVerdict",
    "SignedFactorization",
    "Solution",
    "Subgroup",
    "bareiss_determinant",
    "coset_trace",
    "factor_rational",
    "hnf",
    "kummer_basis",
    "kummer_basis_element",
    "load_default_table",
    "load_table",
    "local_data",
    "lookup",
    "maillet_h_minus",
    "membership",
    "norm_solvable",
    "parse",
    "parse_rational",
    "residue_generation_table",
    "residue_generation_verdict",
    "snf_diagonal",
    "solve_integer",
    "stickelberger_element",
    "trace_element",
    "verify_membership",
]
