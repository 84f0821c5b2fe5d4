"""Symbolic verification of the symmetric identities.

Each ``verify_*`` operation constructs both sides of one identity as
canonical polynomials in Q[x, y, L] (or truncated series over that ring) for
fixed integer parameters, and reports structural equality.  Because every
identity is a polynomial identity in x, y, L once the integer parameters are
fixed, structural equality of canonical forms is a complete proof for that
parameter tuple.

The parity hypotheses (odd w1, w2, or odd n where stated) are enforced by
default and raise :class:`ParityViolation`; passing ``allow_even=True``
disables the guard so that the falsification behaviour — unequal sides with
a nonzero difference witness — is itself testable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import ParityViolation
from .poly import MPoly, X, Y
from .sequences import alt_sum, euler_number, euler_poly, falling
from .series import TSeries, degen_exp

IDENTITY_IDS = (
    "thm1",
    "thm2",
    "cor3",
    "thm4",
    "cor5",
    "multformula",
    "eq13",
    "eq14",
    "eq17",
    "kernel-sym",
)


@dataclass(frozen=True)
class IdentityParams:
    identity: str
    w1: int | None = None
    w2: int | None = None
    n: int | None = None
    m: int | None = None
    order: int | None = None

    def to_dict(self) -> dict:
        out = {}
        for key in ("w1", "w2", "n", "m", "order"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


@dataclass(frozen=True)
class VerificationReport:
    params: IdentityParams
    lhs: MPoly | TSeries
    rhs: MPoly | TSeries
    equal: bool
    difference: MPoly | TSeries
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "identity": self.params.identity,
            "params": self.params.to_dict(),
            "equal": self.equal,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "difference": self.difference.to_json(),
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }

    def summary(self) -> str:
        fields = " ".join(f"{k}={v}" for k, v in self.params.to_dict().items())
        verdict = "equal" if self.equal else "UNEQUAL"
        return (
            f"{self.params.identity} {fields} {verdict} "
            f"lhs=[{self.lhs}] rhs=[{self.rhs}] "
            f"elapsed_ms={int(round(self.elapsed * 1000))}"
        )


def _require_odd(allow_even: bool, **named: int) -> None:
    if allow_even:
        return
    for name, value in named.items():
        if value % 2 == 0:
            raise ParityViolation(f"{name} = {value} must be odd")


def _require_positive(**named: int) -> None:
    for name, value in named.items():
        if value < 1:
            raise ValueError(f"{name} = {value} must be >= 1")


def _report(params: IdentityParams, lhs, rhs, started: float) -> VerificationReport:
    difference = lhs - rhs
    equal = difference.is_zero
    return VerificationReport(
        params=params,
        lhs=lhs,
        rhs=rhs,
        equal=equal,
        difference=difference,
        elapsed=time.perf_counter() - started,
    )


# -- side builders -------------------------------------------------------------


def _thm1_side(w1: int, w2: int, n: int, m: int) -> MPoly:
    """sum_j C(n,j) w2^j w1^(n-j) E_{n-j}^(m)(w2 x | L/w1)
    * sum_k C(j,k) S~_k(w1-1 | L/w2) E_{j-k}^(m-1)(w1 y | L/w2)."""
    s1 = Fraction(1, w1)
    s2 = Fraction(1, w2)
    total = MPoly.zero()
    for j in range(n + 1):
        inner = MPoly.zero()
        for k in range(j + 1):
            inner = inner + (
                comb(j, k)
                * alt_sum(k, w1 - 1, s2)
                * euler_poly(m - 1, j - k, w1 * Y, s2)
            )
        total = total + (
            comb(n, j)
            * w2**j
            * w1 ** (n - j)
            * euler_poly(m, n - j, w2 * X, s1)
            * inner
        )
    return total


def _thm2_side(w1: int, w2: int, n: int) -> MPoly:
    s1 = Fraction(1, w1)
    s2 = Fraction(1, w2)
    total = MPoly.zero()
    for j in range(n + 1):
        total = total + (
            comb(n, j)
            * w2**j
            * w1 ** (n - j)
            * euler_poly(1, n - j, w2 * X, s1)
            * alt_sum(j, w1 - 1, s2)
        )
    return total


def _thm4_side(w1: int, w2: int, n: int, m: int) -> MPoly:
    """sum_k C(n,k) w1^k w2^(n-k) E_{n-k}^(m-1)(w1 y | L/w2)
    * sum_i (-1)^i E_k^(m)(w2 x + (w2/w1) i | L/w1)."""
    s1 = Fraction(1, w1)
    s2 = Fraction(1, w2)
    total = MPoly.zero()
    for k in range(n + 1):
        signed = MPoly.zero()
        for i in range(w1):
            term = euler_poly(m, k, w2 * X + Fraction(w2, w1) * i, s1)
            signed = signed + (term if i % 2 == 0 else -term)
        total = total + (
            comb(n, k)
            * w1**k
            * w2 ** (n - k)
            * euler_poly(m - 1, n - k, w1 * Y, s2)
            * signed
        )
    return total


def _cor5_side(w1: int, w2: int, n: int) -> MPoly:
    s1 = Fraction(1, w1)
    signed = MPoly.zero()
    for i in range(w1):
        term = euler_poly(1, n, w2 * X + Fraction(w2, w1) * i, s1)
        signed = signed + (term if i % 2 == 0 else -term)
    return w1**n * signed


# -- identity verifiers ----------------------------------------------------------


def verify_thm1(
    w1: int, w2: int, n: int, m: int, allow_even: bool = False
) -> VerificationReport:
    """Symmetry of the order-m double expansion in (w1, w2)."""
    _require_positive(w1=w1, w2=w2, m=m)
    _require_odd(allow_even, w1=w1, w2=w2)
    started = time.perf_counter()
    params = IdentityParams("thm1", w1=w1, w2=w2, n=n, m=m)
    return _report(params, _thm1_side(w1, w2, n, m), _thm1_side(w2, w1, n, m), started)


def verify_thm2(w1: int, w2: int, n: int, allow_even: bool = False) -> VerificationReport:
    """The m = 1, y = 0 specialization of the double expansion."""
    _require_positive(w1=w1, w2=w2)
    _require_odd(allow_even, w1=w1, w2=w2)
    started = time.perf_counter()
    params = IdentityParams("thm2", w1=w1, w2=w2, n=n)
    return _report(params, _thm2_side(w1, w2, n), _thm2_side(w2, w1, n), started)


def verify_cor3(w1: int, n: int, allow_even: bool = False) -> VerificationReport:
    """E_n(w1 x | L) = sum_j C(n,j) w1^(n-j) E_{n-j}(x | L/w1) S~_j(w1-1 | L)."""
    _require_positive(w1=w1)
    _require_odd(allow_even, w1=w1)
    started = time.perf_counter()
    params = IdentityParams("cor3", w1=w1, n=n)
    lhs = euler_poly(1, n, w1 * X, 1)
    rhs = MPoly.zero()
    for j in range(n + 1):
        rhs = rhs + (
            comb(n, j)
            * w1 ** (n - j)
            * euler_poly(1, n - j, X, Fraction(1, w1))
            * alt_sum(j, w1 - 1, 1)
        )
    return _report(params, lhs, rhs, started)


def verify_thm4(
    w1: int, w2: int, n: int, m: int, allow_even: bool = False
) -> VerificationReport:
    """Symmetry of the alternating-shift expansion in (w1, w2)."""
    _require_positive(w1=w1, w2=w2, m=m)
    _require_odd(allow_even, w1=w1, w2=w2)
    started = time.perf_counter()
    params = IdentityParams("thm4", w1=w1, w2=w2, n=n, m=m)
    return _report(params, _thm4_side(w1, w2, n, m), _thm4_side(w2, w1, n, m), started)


def verify_cor5(w1: int, w2: int, n: int, allow_even: bool = False) -> VerificationReport:
    """The m = 1, y = 0 specialization of the alternating-shift expansion."""
    _require_positive(w1=w1, w2=w2)
    _require_odd(allow_even, w1=w1, w2=w2)
    started = time.perf_counter()
    params = IdentityParams("cor5", w1=w1, w2=w2, n=n)
    return _report(params, _cor5_side(w1, w2, n), _cor5_side(w2, w1, n), started)


def verify_multformula(w1: int, n: int, allow_even: bool = False) -> VerificationReport:
    """w1^n sum_i (-1)^i E_n(x + i/w1 | L/w1) = E_n(w1 x | L)."""
    _require_positive(w1=w1)
    _require_odd(allow_even, w1=w1)
    started = time.perf_counter()
    params = IdentityParams("multformula", w1=w1, n=n)
    signed = MPoly.zero()
    for i in range(w1):
        term = euler_poly(1, n, X + Fraction(i, w1), Fraction(1, w1))
        signed = signed + (term if i % 2 == 0 else -term)
    lhs = w1**n * signed
    rhs = euler_poly(1, n, w1 * X, 1)
    return _report(params, lhs, rhs, started)


def verify_eq13(n: int, m: int) -> VerificationReport:
    """E_m(n | L) + (-1)^(n-1) E_m(L) = 2 sum_{l<n} (-1)^(n-1-l) (l | L)_m.

    Valid for every n >= 1; the odd-n case is reported under the id
    ``eq14`` (where the alternating signs start at +1).
    """
    _require_positive(n=n)
    if m < 0:
        raise ValueError("m must be nonnegative")
    started = time.perf_counter()
    identity = "eq14" if n % 2 == 1 else "eq13"
    params = IdentityParams(identity, n=n, m=m)
    sign = 1 if n % 2 == 1 else -1  # (-1)^(n-1)
    lhs = euler_poly(1, m, n, 1) + sign * euler_number(1, m)
    rhs = MPoly.zero()
    for l in range(n):
        term = 2 * falling(l, 1, m)
        rhs = rhs + (term if (n - 1 - l) % 2 == 0 else -term)
    return _report(params, lhs, rhs, started)


def verify_eq17(n: int, order: int, allow_even: bool = False) -> VerificationReport:
    """As series: A_n + 1 = (A_1 + 1) * sum_k S~_k(n-1 | L) t^k / k!,
    where A_w = (1 + Lt)^(w/L); requires odd n."""
    _require_positive(n=n)
    if order < 0:
        raise ValueError("order must be nonnegative")
    if not allow_even and n % 2 == 0:
        raise ParityViolation(f"n = {n} must be odd")
    started = time.perf_counter()
    params = IdentityParams("eq17", n=n, order=order)
    lhs = degen_exp(n, 1, order) + 1
    alt_series = TSeries(
        [alt_sum(k, n - 1, 1) / factorial(k) for k in range(order + 1)]
    )
    rhs = (degen_exp(1, 1, order) + 1) * alt_series
    return _report(params, lhs, rhs, started)


# -- the symmetric kernel --------------------------------------------------------


def build_kernel(
    w1: int, w2: int, m: int, order: int, allow_even: bool = False
) -> TSeries:
    """The order-m symmetric kernel, built factor by factor:

    (2/(A_{w1}+1))^m * A_{w1 w2 x} * (A_{w1 w2}+1) * (2/(A_{w2}+1))^m
    * (1/2) * A_{w1 w2 y},    with A_u = (1 + Lt)^(u/L).
    """
    _require_positive(w1=w1, w2=w2, m=m)
    _require_odd(allow_even, w1=w1, w2=w2)
    if order < 0:
        raise ValueError("order must be nonnegative")
    half1 = ((degen_exp(w1, 1, order) + 1) * Fraction(1, 2)).recip()
    half2 = ((degen_exp(w2, 1, order) + 1) * Fraction(1, 2)).recip()
    a_x = degen_exp(w1 * w2 * X, 1, order)
    a_y = degen_exp(w1 * w2 * Y, 1, order)
    mid = degen_exp(w1 * w2, 1, order) + 1
    return half1**m * a_x * mid * (half2**m) * a_y * Fraction(1, 2)


def verify_kernel_sym(
    w1: int, w2: int, m: int, order: int, allow_even: bool = False
) -> VerificationReport:
    """K(w1, w2) = K(w2, w1), and n! times each coefficient matches both
    closed-form expansions (the theorem-side double sums)."""
    started = time.perf_counter()
    params = IdentityParams("kernel-sym", w1=w1, w2=w2, m=m, order=order)
    lhs = build_kernel(w1, w2, m, order, allow_even=allow_even)
    rhs = build_kernel(w2, w1, m, order, allow_even=allow_even)
    difference = lhs - rhs
    equal = difference.is_zero
    if equal:
        for n in range(order + 1):
            value = lhs.coeff(n) * factorial(n)
            if not (
                value == _thm1_side(w1, w2, n, m)
                and value == _thm1_side(w2, w1, n, m)
                and value == _thm4_side(w1, w2, n, m)
                and value == _thm4_side(w2, w1, n, m)
            ):
                equal = False
                break
    return VerificationReport(
        params=params,
        lhs=lhs,
        rhs=rhs,
        equal=equal,
        difference=difference,
        elapsed=time.perf_counter() - started,
    )


# -- dispatch --------------------------------------------------------------------

VERIFIERS = {
    "thm1": verify_thm1,
    "thm2": verify_thm2,
    "cor3": verify_cor3,
    "thm4": verify_thm4,
    "cor5": verify_cor5,
    "multformula": verify_multformula,
    "eq13": verify_eq13,
    "eq14": verify_eq13,
    "eq17": verify_eq17,
    "kernel-sym": verify_kernel_sym,
}


def verify(identity: str, **params) -> VerificationReport:
    """Dispatch to the named identity verifier."""
    try:
        fn = VERIFIERS[identity]
    except KeyError:
        raise ValueError(f"unknown identity {identity!r}") from None
    return fn(**params)
