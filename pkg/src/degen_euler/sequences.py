"""Degenerate special sequences over Q[x, y, L].

Implements, all in exact arithmetic:

* the degenerate falling factorial (u | sL)_n = u(u - sL)...(u - (n-1)sL),
  which reduces to u^n at L = 0 and to the ordinary falling factorial at
  sL = 1;
* signed Stirling numbers of the first kind S1(n, l), the connection
  coefficients in (x | L)_n = sum_l S1(n, l) L^(n-l) x^l;
* higher-order degenerate Euler numbers E_n^(r)(L) and polynomials
  E_n^(r)(u | sL), computed by two independent algorithms (generating-series
  coefficient extraction, and a binomial-convolution recurrence) that are
  cross-checked in the test suite;
* alternating degenerate power sums S~_k(n | sL) = sum_{l<=n} (-1)^l (l | sL)_k;
* the classical L -> 0 limit of any of the above.

Number families are memoized per order; polynomial values are assembled on
demand from numbers and falling factorials rather than stored.  The memo
tables are only ever appended to under the interpreter lock, so concurrent
readers never observe partial rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import IndexOutOfRange
from .poly import LAM, MPoly, Scalar, X, as_fraction, as_poly
from .series import TSeries, degen_exp

# -- degenerate falling factorial ---------------------------------------------


def falling(u: MPoly | Scalar, s: Scalar, n: int) -> MPoly:
    """(u | sL)_n as a canonical polynomial; the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError("falling factorial length must be nonnegative")
    return _falling(as_poly(u), as_fraction(s), n)


@lru_cache(maxsize=None)
def _falling(u: MPoly, s: Fraction, n: int) -> MPoly:
    if n == 0:
        return MPoly.const(1)
    return _falling(u, s, n - 1) * (u - (n - 1) * s * LAM)


@dataclass(frozen=True)
class FallingFactorial:
    """A falling-factorial product together with its expanded value."""

    argument: MPoly
    scale: Fraction
    length: int
    value: MPoly

    @classmethod
    def build(cls, u: MPoly | Scalar, s: Scalar, n: int) -> "FallingFactorial":
        u = as_poly(u)
        s = as_fraction(s)
        return cls(argument=u, scale=s, length=n, value=falling(u, s, n))


# -- Stirling numbers of the first kind ---------------------------------------


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    # S1(n+1, l) = S1(n, l-1) - n * S1(n, l), signed convention.
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = []
    for l in range(n + 1):
        above = prev[l] if l < n else 0
        left = prev[l - 1] if l >= 1 else 0
        row.append(left - (n - 1) * above)
    return tuple(row)


def stirling1(n: int, l: int) -> int:
    """Signed Stirling number of the first kind S1(n, l)."""
    if n < 0 or l < 0:
        raise IndexOutOfRange(f"S1({n}, {l}) is undefined for negative indices")
    if l > n:
        raise IndexOutOfRange(f"S1({n}, {l}) requires l <= n")
    return _stirling_row(n)[l]


def stirling_expand(n: int) -> MPoly:
    """sum_l S1(n, l) L^(n-l) x^l, which equals falling(x, 1, n) identically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = _stirling_row(n)
    return MPoly({(l, 0, n - l): row[l] for l in range(n + 1)})


# -- higher-order degenerate Euler numbers -------------------------------------


@lru_cache(maxsize=None)
def _euler1_numbers(n: int) -> MPoly:
    # From 2 = ((1+Lt)^(1/L) + 1) * GF:  2*E_n = -sum_{k<n} C(n,k) E_k (1|L)_{n-k}
    # for n >= 1, with E_0 = 1.
    if n == 0:
        return MPoly.const(1)
    acc = MPoly.zero()
    one = MPoly.const(1)
    for k in range(n):
        acc = acc + comb(n, k) * _euler1_numbers(k) * _falling(one, Fraction(1), n - k)
    return acc / -2


@lru_cache(maxsize=None)
def _euler_number(r: int, n: int) -> MPoly:
    # Order convolution: E_n^(r) = sum_k C(n,k) E_k^(r-1) E_{n-k}^(1).
    if r == 0:
        return MPoly.const(1) if n == 0 else MPoly.zero()
    if r == 1:
        return _euler1_numbers(n)
    acc = MPoly.zero()
    for k in range(n + 1):
        acc = acc + comb(n, k) * _euler_number(r - 1, k) * _euler1_numbers(n - k)
    return acc


def _euler_numbers_series(r: int, max_index: int) -> tuple[MPoly, ...]:
    # Coefficient extraction from (2 / ((1+Lt)^(1/L) + 1))^r.
    kernel = (degen_exp(1, 1, max_index) + 1).recip() * 2
    powered = kernel**r
    numbers = []
    factorial = 1
    for n in range(max_index + 1):
        if n:
            factorial *= n
        numbers.append(powered.coeff(n) * factorial)
    return tuple(numbers)


@dataclass(frozen=True)
class EulerFamily:
    """Degenerate Euler numbers E_0^(r)(L)..E_N^(r)(L) for one order r."""

    order: int
    max_index: int
    numbers: tuple[MPoly, ...]
    method: str

    def __post_init__(self):
        if self.order >= 1 and self.numbers[0] != 1:
            raise ValueError("E_0 must be 1 for every order r >= 1")


def euler_numbers(r: int, max_index: int, method: str = "recurrence") -> EulerFamily:
    """The family E_n^(r)(L), n = 0..max_index.

    ``method="recurrence"`` uses the binomial-convolution recurrence;
    ``method="series"`` extracts n! times the coefficients of the r-th power
    of the generating kernel.  The two must agree exactly.
    """
    if r < 0 or max_index < 0:
        raise ValueError("order and max index must be nonnegative")
    if method == "recurrence":
        numbers = tuple(_euler_number(r, n) for n in range(max_index + 1))
    elif method == "series":
        numbers = _euler_numbers_series(r, max_index)
    else:
        raise ValueError(f"unknown method {method!r}")
    return EulerFamily(order=r, max_index=max_index, numbers=numbers, method=method)


@lru_cache(maxsize=None)
def _euler_number_scaled(r: int, n: int, s: Fraction) -> MPoly:
    # E_n^(r)(sL): the L-scale enters by exact substitution L -> s*L.
    value = _euler_number(r, n)
    if s == 1:
        return value
    return value.subst("L", s * LAM)


def euler_number(r: int, n: int, s: Scalar = 1) -> MPoly:
    """E_n^(r)(sL), a polynomial in L only."""
    if r < 0 or n < 0:
        raise ValueError("order and index must be nonnegative")
    return _euler_number_scaled(r, n, as_fraction(s))


def euler_poly(r: int, n: int, u: MPoly | Scalar, s: Scalar = 1) -> MPoly:
    """E_n^(r)(u | sL) = sum_k C(n,k) E_k^(r)(sL) (u | sL)_{n-k}.

    Order r = 0 is the bare degenerate exponential: E_n^(0)(u | sL) =
    (u | sL)_n.
    """
    if r < 0 or n < 0:
        raise ValueError("order and index must be nonnegative")
    return _euler_poly(r, n, as_poly(u), as_fraction(s))


@lru_cache(maxsize=None)
def _euler_poly(r: int, n: int, u: MPoly, s: Fraction) -> MPoly:
    if r == 0:
        return _falling(u, s, n)
    acc = MPoly.zero()
    for k in range(n + 1):
        acc = acc + comb(n, k) * _euler_number_scaled(r, k, s) * _falling(u, s, n - k)
    return acc


# -- alternating degenerate power sums -----------------------------------------


def alt_sum(k: int, n: int, s: Scalar = 1) -> MPoly:
    """S~_k(n | sL) = sum_{l=0}^{n} (-1)^l (l | sL)_k, a polynomial in L."""
    if k < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    return _alt_sum(k, n, as_fraction(s))


@lru_cache(maxsize=None)
def _alt_sum(k: int, n: int, s: Fraction) -> MPoly:
    if n == 0:
        # Only the l = 0 term: (0 | sL)_k is 1 for k = 0 and 0 otherwise.
        return MPoly.const(1) if k == 0 else MPoly.zero()
    term = _falling(MPoly.const(n), s, k)
    return _alt_sum(k, n - 1, s) + (term if n % 2 == 0 else -term)


@dataclass(frozen=True)
class AltSumTable:
    """S~_k(n | sL) for all 0 <= k <= max_k, 0 <= n <= max_n."""

    max_k: int
    max_n: int
    scale: Fraction
    entries: tuple[tuple[MPoly, ...], ...]  # entries[k][n]

    @classmethod
    def build(cls, max_k: int, max_n: int, s: Scalar = 1) -> "AltSumTable":
        scale = as_fraction(s)
        entries = tuple(
            tuple(alt_sum(k, n, scale) for n in range(max_n + 1))
            for k in range(max_k + 1)
        )
        return cls(max_k=max_k, max_n=max_n, scale=scale, entries=entries)


# -- classical limit -----------------------------------------------------------


def classical_limit(p: MPoly) -> MPoly:
    """Substitute L = 0, degenerating to the classical (non-deformed) object."""
    return p.subst("L", 0)
