"""Exact-arithmetic engine for higher-order degenerate Euler polynomials.

Everything is computed over Q[x, y, L] (L the degeneration parameter) with
arbitrary-precision rationals: special sequences, generating series, the
symmetric identities of the associated kernel, and finite-level fermionic
alternating sums with p-adic congruence verdicts.
"""

from .errors import (
    BudgetExceeded,
    DenominatorNotInvertible,
    IndexOutOfRange,
    NonOddPrime,
    NonUnitConstantTerm,
    ParityViolation,
)
from .poly import LAM, MPoly, X, Y, as_fraction, as_poly, parse_poly
from .series import TSeries, degen_exp
from .sequences import (
    AltSumTable,
    EulerFamily,
    FallingFactorial,
    alt_sum,
    classical_limit,
    euler_number,
    euler_numbers,
    euler_poly,
    falling,
    stirling1,
    stirling_expand,
)
from .identities import (
    IdentityParams,
    VerificationReport,
    build_kernel,
    verify,
    verify_cor3,
    verify_cor5,
    verify_eq13,
    verify_eq17,
    verify_kernel_sym,
    verify_multformula,
    verify_thm1,
    verify_thm2,
    verify_thm4,
)
from .padic import (
    Congruence,
    DEFAULT_BUDGET,
    FermionicSum,
    check_eq2,
    check_eq3,
    check_eq10,
    congruence,
    fermionic_sum,
    is_odd_prime,
    padic_valuation,
)

__all__ = [
    "AltSumTable",
    "BudgetExceeded",
    "Congruence",
    "DEFAULT_BUDGET",
    "DenominatorNotInvertible",
    "EulerFamily",
    "FallingFactorial",
    "FermionicSum",
    "IdentityParams",
    "IndexOutOfRange",
    "LAM",
    "MPoly",
    "NonOddPrime",
    "NonUnitConstantTerm",
    "ParityViolation",
    "TSeries",
    "VerificationReport",
    "X",
    "Y",
    "alt_sum",
    "as_fraction",
    "as_poly",
    "build_kernel",
    "check_eq10",
    "check_eq2",
    "check_eq3",
    "classical_limit",
    "congruence",
    "degen_exp",
    "euler_number",
    "euler_numbers",
    "euler_poly",
    "falling",
    "fermionic_sum",
    "is_odd_prime",
    "padic_valuation",
    "parse_poly",
    "stirling1",
    "stirling_expand",
    "verify",
    "verify_cor3",
    "verify_cor5",
    "verify_eq13",
    "verify_eq17",
    "verify_kernel_sym",
    "verify_multformula",
    "verify_thm1",
    "verify_thm2",
    "verify_thm4",
]

__version__ = "0.1.0"
