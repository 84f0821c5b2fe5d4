"""Sparse exact polynomials in Q[x, y, L].

``L`` is the degeneration parameter (rendered ``L`` in plain text and
``\\lambda`` in LaTeX).  A polynomial is a finite map from exponent triples
``(a, b, c)`` — the powers of x, y, L — to nonzero ``Fraction`` coefficients.
The map is kept canonical at all times: no zero coefficient is ever stored,
so two polynomials are equal exactly when their term maps are equal, and
identity verification reduces to a structural comparison.

Values are immutable after construction; every operation returns a new
polynomial.  Arithmetic is exact — no rounding ever occurs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

Exponent = tuple[int, int, int]
Scalar = Union[int, Fraction]

_VAR_INDEX = {"x": 0, "y": 1, "L": 2}
_VAR_NAMES = ("x", "y", "L")
_LATEX_NAMES = ("x", "y", "\\lambda")


def as_fraction(value: Scalar) -> Fraction:
    """Coerce to an exact Fraction; floats are rejected, never rounded."""
    if isinstance(value, float):
        raise TypeError("floats are not allowed in the exact ring")
    return Fraction(value)


class MPoly:
    """Polynomial in Q[x, y, L], stored sparsely in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        canon: dict[Exponent, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                a, b, c = int(exp[0]), int(exp[1]), int(exp[2])
                if a < 0 or b < 0 or c < 0:
                    raise ValueError(f"negative exponent in {exp!r}")
                value = as_fraction(coeff)
                if value:
                    canon[(a, b, c)] = value
        self._terms = canon
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @classmethod
    def const(cls, value: Scalar) -> "MPoly":
        return cls({(0, 0, 0): value})

    @classmethod
    def variable(cls, name: str) -> "MPoly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r} (expected one of x, y, L)")
        exp = [0, 0, 0]
        exp[_VAR_INDEX[name]] = 1
        return cls({tuple(exp): 1})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or self._terms.keys() == {(0, 0, 0)}

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises otherwise)."""
        if not self._terms:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self._terms[(0, 0, 0)]

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._terms.get((int(exp[0]), int(exp[1]), int(exp[2])), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(a + b + c for (a, b, c) in self._terms)

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        i = _VAR_INDEX[name]
        return max(exp[i] for exp in self._terms)

    def term_count(self) -> int:
        return len(self._terms)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending graded-lexicographic order on (a, b, c)."""
        return sorted(
            self._terms.items(),
            key=lambda item: (sum(item[0]), item[0]),
            reverse=True,
        )

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.sorted_terms())

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other: "MPoly | Scalar") -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other)
        return None

    def __add__(self, other: "MPoly | Scalar") -> "MPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in q._terms.items():
            acc = out.get(exp)
            total = coeff if acc is None else acc + coeff
            if total:
                out[exp] = total
            elif acc is not None:
                del out[exp]
        result = MPoly.__new__(MPoly)
        result._terms = out
        result._hash = None
        return result

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        result = MPoly.__new__(MPoly)
        result._terms = {exp: -coeff for exp, coeff in self._terms.items()}
        result._hash = None
        return result

    def __sub__(self, other: "MPoly | Scalar") -> "MPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: "MPoly | Scalar") -> "MPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: "MPoly | Scalar") -> "MPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for (a1, b1, c1), v1 in self._terms.items():
            for (a2, b2, c2), v2 in q._terms.items():
                exp = (a1 + a2, b1 + b2, c1 + c2)
                acc = out.get(exp)
                out[exp] = v1 * v2 if acc is None else acc + v1 * v2
        result = MPoly.__new__(MPoly)
        result._terms = {exp: v for exp, v in out.items() if v}
        result._hash = None
        return result

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "MPoly":
        scale = as_fraction(other)
        if not scale:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / scale)

    def __pow__(self, exponent: int) -> "MPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- substitution and evaluation ----------------------------------------

    def subst(self, name: str, replacement: "MPoly | Scalar") -> "MPoly":
        """Replace every occurrence of one variable by a polynomial.

        The result is expanded to canonical form; constants are degree-0
        replacements.
        """
        i = _VAR_INDEX[name]
        repl = self._coerce(replacement)
        if repl is None:
            raise TypeError(f"cannot substitute {replacement!r}")
        powers: dict[int, MPoly] = {0: MPoly.const(1), 1: repl}
        out = MPoly.zero()
        for exp, coeff in self._terms.items():
            k = exp[i]
            if k not in powers:
                p = powers[max(powers)]
                for j in range(max(powers), k):
                    p = p * repl
                    powers[j + 1] = p
            rest = list(exp)
            rest[i] = 0
            out = out + MPoly({tuple(rest): coeff}) * powers[k]
        return out

    def evaluate(self, x: Scalar, y: Scalar, lam: Scalar) -> Fraction:
        """Exact value of the polynomial at a rational point."""
        x0, y0, l0 = as_fraction(x), as_fraction(y), as_fraction(lam)
        total = Fraction(0)
        for (a, b, c), coeff in self._terms.items():
            total += coeff * x0**a * y0**b * l0**c
        return total

    # -- equality, hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        q = self._coerce(other) if isinstance(other, (MPoly, int, Fraction)) else None
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- serialization -----------------------------------------------------

    def __str__(self) -> str:
        return render_terms(self.sorted_terms(), _VAR_NAMES, joiner="*")

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"

    def to_json(self) -> list[dict]:
        """Term list in graded-lex order; coefficients as decimal strings."""
        return [
            {"e": list(exp), "n": str(coeff.numerator), "d": str(coeff.denominator)}
            for exp, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "MPoly":
        terms: dict[Exponent, Fraction] = {}
        for entry in data:
            a, b, c = entry["e"]
            terms[(int(a), int(b), int(c))] = Fraction(int(entry["n"]), int(entry["d"]))
        return cls(terms)


X = MPoly.variable("x")
Y = MPoly.variable("y")
LAM = MPoly.variable("L")

ONE = MPoly.const(1)
ZERO = MPoly.zero()


def as_poly(value: MPoly | Scalar) -> MPoly:
    """Coerce an int or Fraction to a constant polynomial."""
    poly = MPoly._coerce(value)
    if poly is None:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return poly


# -- plain-text rendering ----------------------------------------------------


def render_terms(
    terms: list[tuple[Exponent, Fraction]],
    names: tuple[str, str, str],
    joiner: str = "*",
    power: str = "^",
) -> str:
    """Render a sorted term list as e.g. ``x^2 - x*L - x + 1/2*L``."""
    if not terms:
        return "0"
    parts: list[str] = []
    for index, (exp, coeff) in enumerate(terms):
        mono = joiner.join(
            name if e == 1 else f"{name}{power}{e}"
            for name, e in zip(names, exp)
            if e
        )
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{joiner}{mono}"
        if index == 0:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


# -- expression parser -------------------------------------------------------


class _Tokens:
    def __init__(self, text: str):
        self.tokens: list[str] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(text[i:j])
                i = j
            elif ch in "xyL+-*/^()":
                self.tokens.append(ch)
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r} in polynomial")
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of polynomial expression")
        self.pos += 1
        return tok


def parse_poly(text: str) -> MPoly:
    """Parse ``x^2 - 1/2*x*(x - L)``-style expressions into an MPoly.

    Grammar: ``+ - * / ^`` with parentheses; variables x, y, L; integer and
    ``a/b`` rational literals.  Division is only permitted by a constant.
    """
    toks = _Tokens(text)
    result = _parse_sum(toks)
    if toks.peek() is not None:
        raise ValueError(f"trailing input at token {toks.peek()!r}")
    return result


def _parse_sum(toks: _Tokens) -> MPoly:
    value = _parse_product(toks)
    while toks.peek() in ("+", "-"):
        op = toks.take()
        rhs = _parse_product(toks)
        value = value + rhs if op == "+" else value - rhs
    return value


def _parse_product(toks: _Tokens) -> MPoly:
    value = _parse_factor(toks)
    while toks.peek() in ("*", "/"):
        op = toks.take()
        rhs = _parse_factor(toks)
        if op == "*":
            value = value * rhs
        else:
            value = value / rhs.constant_value()
    return value


def _parse_factor(toks: _Tokens) -> MPoly:
    tok = toks.peek()
    if tok == "-":
        toks.take()
        return -_parse_factor(toks)
    base = _parse_atom(toks)
    if toks.peek() == "^":
        toks.take()
        exponent = toks.take()
        if not exponent.isdigit():
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        return base ** int(exponent)
    return base


def _parse_atom(toks: _Tokens) -> MPoly:
    tok = toks.take()
    if tok == "(":
        inner = _parse_sum(toks)
        if toks.take() != ")":
            raise ValueError("unbalanced parentheses")
        return inner
    if tok in _VAR_INDEX:
        return MPoly.variable(tok)
    if tok.isdigit():
        return MPoly.const(int(tok))
    raise ValueError(f"unexpected token {tok!r}")
