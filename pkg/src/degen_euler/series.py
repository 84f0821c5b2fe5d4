"""Truncated formal power series in t over Q[x, y, L].

A series stores exactly ``order + 1`` coefficients c0..cN (each a canonical
MPoly) and represents sum(c_n t^n).  Mixed-order arithmetic truncates to the
minimum order of the operands; nothing is ever read beyond it.

The central constructor is :func:`degen_exp`, the degenerate exponential
(1 + sLt)^(u/(sL)) whose n-th coefficient is the degenerate falling factorial
(u | sL)_n divided by n!.  It is built as an iterative product, never through
division by L, which is not invertible in the ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonUnitConstantTerm
from .poly import LAM, MPoly, Scalar, as_fraction, as_poly


class TSeries:
    """Truncated power series with polynomial coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[MPoly | Scalar]):
        coeffs = tuple(as_poly(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series stores at least the t^0 coefficient")
        self._coeffs = coeffs

    @classmethod
    def constant(cls, value: MPoly | Scalar, order: int) -> "TSeries":
        return cls([as_poly(value)] + [MPoly.zero()] * order)

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls.constant(1, order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[MPoly, ...]:
        return self._coeffs

    def coeff(self, n: int) -> MPoly:
        return self._coeffs[n]

    def truncate(self, order: int) -> "TSeries":
        if order >= self.order:
            return self
        return TSeries(self._coeffs[: order + 1])

    def map_coeffs(self, fn) -> "TSeries":
        return TSeries([fn(c) for c in self._coeffs])

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other: "TSeries | MPoly | Scalar", order: int) -> "TSeries | None":
        if isinstance(other, TSeries):
            return other
        if isinstance(other, (MPoly, int, Fraction)):
            return TSeries.constant(other, order)
        return None

    def __add__(self, other: "TSeries | MPoly | Scalar") -> "TSeries":
        q = self._coerce(other, self.order)
        if q is None:
            return NotImplemented
        n = min(self.order, q.order)
        return TSeries([self._coeffs[i] + q._coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "TSeries":
        return TSeries([-c for c in self._coeffs])

    def __sub__(self, other: "TSeries | MPoly | Scalar") -> "TSeries":
        q = self._coerce(other, self.order)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: "TSeries | MPoly | Scalar") -> "TSeries":
        q = self._coerce(other, self.order)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: "TSeries | MPoly | Scalar") -> "TSeries":
        if isinstance(other, (MPoly, int, Fraction)):
            scale = as_poly(other)
            return TSeries([c * scale for c in self._coeffs])
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = MPoly.zero()
            for i in range(k + 1):
                acc = acc + self._coeffs[i] * other._coeffs[k - i]
            out.append(acc)
        return TSeries(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers must be nonnegative integers")
        result = TSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def recip(self) -> "TSeries":
        """Two-sided inverse up to the truncation order.

        Requires the t^0 coefficient to be a nonzero rational constant.
        """
        c0 = self._coeffs[0]
        if not c0.is_constant or c0.is_zero:
            raise NonUnitConstantTerm(
                f"constant term {c0} is not a nonzero rational constant"
            )
        inv0 = Fraction(1) / c0.constant_value()
        out = [MPoly.const(inv0)]
        for n in range(1, self.order + 1):
            acc = MPoly.zero()
            for k in range(1, n + 1):
                acc = acc + self._coeffs[k] * out[n - k]
            out.append(acc * (-inv0))
        return TSeries(out)

    # -- equality, serialization ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self._coeffs)

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self._coeffs):
            power = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            if not power:
                body = str(c) if c.term_count() <= 1 else f"({c})"
                parts.append(body)
            elif c == 1:
                parts.append(power)
            elif c.term_count() <= 1:
                parts.append(f"{c}*{power}")
            else:
                parts.append(f"({c})*{power}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TSeries({str(self)!r})"

    def to_json(self) -> list[list[dict]]:
        return [c.to_json() for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence[list[dict]]) -> "TSeries":
        return cls([MPoly.from_json(c) for c in data])


def degen_exp(u: MPoly | Scalar, s: Scalar, order: int) -> TSeries:
    """The degenerate exponential sum((u | sL)_n t^n / n!) up to ``order``.

    With s = 0 the step collapses and this is the classical exponential
    sum(u^n t^n / n!).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    base = as_poly(u)
    step = as_fraction(s) * LAM
    coeffs = [MPoly.const(1)]
    running = MPoly.const(1)
    factorial = 1
    for n in range(1, order + 1):
        running = running * (base - (n - 1) * step)
        factorial *= n
        coeffs.append(running / factorial)
    return TSeries(coeffs)
