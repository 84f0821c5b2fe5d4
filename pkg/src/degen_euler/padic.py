"""Finite-level fermionic alternating sums and p-adic congruence checks.

The level-N sum over r variables is

    S_N = sum over x_1..x_r in [0, p^N)  of  f(x_1 + ... + x_r) (-1)^(x_1+...+x_r),

computed exactly over the rationals.  For p-integral integrands the levels
form a p-adic Cauchy sequence, v_p(S_{N+1} - S_N) >= N, so the testable
surrogate for the limiting integral value T is the congruence
v_p(S_N - T) >= N.  The achieved valuation is recorded so stronger-than-
required convergence stays visible.

The r-fold sum is aggregated through composition counts rather than naive
p^(rN) enumeration: the signed weight of a total s is (-1)^s c_r(s) with
c_r(s) the number of ways to write s as an ordered sum of r values below
p^N, so the cost is O(r * p^N) polynomial evaluations per check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BudgetExceeded, DenominatorNotInvertible, NonOddPrime
from .poly import MPoly, Scalar, as_fraction, as_poly, X
from .sequences import euler_number, falling

DEFAULT_BUDGET = 10**7


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def padic_valuation(value: Fraction, p: int) -> int | None:
    """v_p(value); None stands for the infinite valuation of 0."""
    if value == 0:
        return None
    v = 0
    n = value.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = value.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


@dataclass(frozen=True)
class FermionicSum:
    """Exact level-N alternating sum of f(x_1+...+x_r) over r variables."""

    p: int
    level: int
    r: int
    integrand: MPoly
    lam: Fraction
    value: Fraction


@dataclass(frozen=True)
class Congruence:
    """Verdict on lhs = rhs (mod p^modulus_exponent), with the achieved valuation."""

    lhs: Fraction
    rhs: Fraction
    p: int
    modulus_exponent: int
    valuation: int | None  # None = the difference is exactly zero
    verdict: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "valuation": self.valuation,
            "required": self.modulus_exponent,
            "pass": self.verdict,
        }


def congruence(lhs: Fraction, rhs: Fraction, p: int, exponent: int) -> Congruence:
    """lhs = rhs (mod p^exponent) for rationals with p-invertible denominators."""
    for side, value in (("lhs", lhs), ("rhs", rhs)):
        if value.denominator % p == 0:
            raise DenominatorNotInvertible(
                f"{side} = {value} has a denominator divisible by p = {p}"
            )
    v = padic_valuation(lhs - rhs, p)
    verdict = v is None or v >= exponent
    return Congruence(
        lhs=lhs, rhs=rhs, p=p, modulus_exponent=exponent, valuation=v, verdict=verdict
    )


def _composition_count(s: int, bound: int, r: int) -> int:
    """Number of ways to write s as an ordered sum of r integers in [0, bound)."""
    total = 0
    for j in range(s // bound + 1):
        rest = s - j * bound
        term = comb(r, j) * comb(rest + r - 1, r - 1)
        total += term if j % 2 == 0 else -term
    return total


def _check_sum_args(p: int, level: int, r: int, budget: int) -> None:
    if not is_odd_prime(p):
        raise NonOddPrime(f"p = {p} is not an odd prime")
    if level < 1:
        raise ValueError("level N must be >= 1")
    if r < 1:
        raise ValueError("variable count r must be >= 1")
    terms = p ** (level * r)
    if terms > budget:
        raise BudgetExceeded(
            f"p^(N*r) = {terms} terms exceeds the budget of {budget}"
        )


def fermionic_sum(
    f: MPoly | Scalar,
    lam: Scalar,
    p: int,
    level: int,
    r: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> FermionicSum:
    """Exact alternating sum of f(x_1+...+x_r) with x_i < p^level.

    ``f`` is a polynomial in x (it may also contain L, which is bound to
    ``lam``); y must not occur.
    """
    _check_sum_args(p, level, r, budget)
    integrand = as_poly(f)
    if integrand.degree_in("y") > 0:
        raise ValueError("the integrand must not contain y")
    lam = as_fraction(lam)
    bound = p**level
    # Dense coefficients in x after binding L, then Horner per total s.
    univariate = integrand.subst("L", lam)
    degree = max(univariate.degree_in("x"), 0)
    coeffs = [univariate.coefficient((k, 0, 0)) for k in range(degree + 1)]
    total = Fraction(0)
    for s in range(r * (bound - 1) + 1):
        weight = _composition_count(s, bound, r) if r > 1 else 1
        if weight == 0:
            continue
        acc = coeffs[degree]
        for k in range(degree - 1, -1, -1):
            acc = acc * s + coeffs[k]
        total += (weight if s % 2 == 0 else -weight) * acc
    return FermionicSum(p=p, level=level, r=r, integrand=integrand, lam=lam, value=total)


def check_eq2(
    f: MPoly | Scalar,
    lam: Scalar,
    p: int,
    level: int,
    budget: int = DEFAULT_BUDGET,
) -> Congruence:
    """Sum(f(x+1)) + Sum(f(x)) = 2 f(0)  (mod p^level)."""
    f = as_poly(f)
    lam = as_fraction(lam)
    shifted = fermionic_sum(f.subst("x", X + 1), lam, p, level, 1, budget)
    plain = fermionic_sum(f, lam, p, level, 1, budget)
    lhs = shifted.value + plain.value
    rhs = 2 * f.evaluate(0, 0, lam)
    return congruence(lhs, rhs, p, level)


def check_eq3(
    f: MPoly | Scalar,
    lam: Scalar,
    p: int,
    level: int,
    shift: int,
    budget: int = DEFAULT_BUDGET,
) -> Congruence:
    """Sum(f(x+n)) + (-1)^(n-1) Sum(f(x)) = 2 sum_{l<n} (-1)^(n-1-l) f(l)
    (mod p^level), with n = shift >= 1."""
    if shift < 1:
        raise ValueError("shift must be >= 1")
    f = as_poly(f)
    lam = as_fraction(lam)
    shifted = fermionic_sum(f.subst("x", X + shift), lam, p, level, 1, budget)
    plain = fermionic_sum(f, lam, p, level, 1, budget)
    sign = 1 if shift % 2 == 1 else -1
    lhs = shifted.value + sign * plain.value
    rhs = Fraction(0)
    for l in range(shift):
        term = 2 * f.evaluate(l, 0, lam)
        rhs += term if (shift - 1 - l) % 2 == 0 else -term
    return congruence(lhs, rhs, p, level)


def check_eq10(
    n: int,
    r: int,
    lam: Scalar,
    p: int,
    level: int,
    budget: int = DEFAULT_BUDGET,
) -> Congruence:
    """Level-N sum of (x_1+...+x_r | lam)_n against E_n^(r)(lam) mod p^level."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lam = as_fraction(lam)
    partial = fermionic_sum(falling(X, 1, n), lam, p, level, r, budget)
    target = euler_number(r, n).evaluate(0, 0, lam)
    return congruence(partial.value, target, p, level)
