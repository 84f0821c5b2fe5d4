"""LaTeX rendering and table emission (plain text, JSON, LaTeX).

Plain-text and JSON forms of a single polynomial/series live on the types
themselves (``str()``, ``to_json``); this module adds the LaTeX form and the
row-oriented tables of the special sequences.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MPoly
from .sequences import alt_sum, euler_number, euler_poly, stirling1
from .series import TSeries

_LATEX_VARS = ("x", "y", "\\lambda")


def _latex_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def poly_latex(p: MPoly) -> str:
    terms = p.sorted_terms()
    if not terms:
        return "0"
    parts = []
    for index, (exp, coeff) in enumerate(terms):
        mono = " ".join(
            name if e == 1 else f"{name}^{{{e}}}"
            for name, e in zip(_LATEX_VARS, exp)
            if e
        )
        mag = abs(coeff)
        if not mono:
            body = _latex_fraction(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_latex_fraction(mag)} {mono}"
        if index == 0:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


def series_latex(s: TSeries) -> str:
    parts = []
    for n, c in enumerate(s.coeffs):
        body = poly_latex(c)
        if c.term_count() > 1:
            body = f"\\left({body}\\right)"
        if n == 0:
            parts.append(body)
        elif n == 1:
            parts.append(f"{body} t")
        else:
            parts.append(f"{body} t^{{{n}}}")
    return " + ".join(parts)


# -- tables -------------------------------------------------------------------


def euler_rows(r: int, max_index: int, polynomials: bool = True) -> list[dict]:
    """Rows n = 0..max_index of E_n^(r)(x | L) (or the numbers E_n^(r)(L))."""
    rows = []
    for n in range(max_index + 1):
        value = euler_poly(r, n, MPoly.variable("x"), 1) if polynomials else euler_number(r, n)
        rows.append({"r": r, "n": n, "value": value})
    return rows


def stirling_rows(max_n: int) -> list[dict]:
    """The triangle S1(n, l), 0 <= l <= n <= max_n."""
    rows = []
    for n in range(max_n + 1):
        for l in range(n + 1):
            rows.append({"n": n, "l": l, "value": stirling1(n, l)})
    return rows


def altsum_rows(max_k: int, max_n: int) -> list[dict]:
    """S~_k(n | L) for 0 <= k <= max_k, 0 <= n <= max_n."""
    rows = []
    for k in range(max_k + 1):
        for n in range(max_n + 1):
            rows.append({"k": k, "n": n, "value": alt_sum(k, n, 1)})
    return rows


def _euler_label(row: dict, latex: bool, polynomials: bool) -> str:
    r, n = row["r"], row["n"]
    if latex:
        arg = "x \\mid \\lambda" if polynomials else "\\lambda"
        order = f"^{{({r})}}" if r != 1 else ""
        return f"\\mathcal{{E}}_{{{n}}}{order}\\left({arg}\\right)"
    arg = "x|L" if polynomials else "L"
    order = f"^({r})" if r != 1 else ""
    return f"E_{n}{order}({arg})"


def render_euler_table(rows: list[dict], fmt: str, polynomials: bool) -> str:
    if fmt == "json":
        import json

        return json.dumps(
            [{**row, "value": row["value"].to_json()} for row in rows], indent=2
        )
    lines = []
    for row in rows:
        if fmt == "latex":
            lines.append(
                f"{_euler_label(row, True, polynomials)} &= {poly_latex(row['value'])} \\\\"
            )
        else:
            lines.append(f"{_euler_label(row, False, polynomials)} = {row['value']}")
    return "\n".join(lines)


def render_stirling_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        import json

        return json.dumps(rows, indent=2)
    lines = []
    for row in rows:
        if fmt == "latex":
            lines.append(f"S_1({row['n']}, {row['l']}) &= {row['value']} \\\\")
        else:
            lines.append(f"S1({row['n']},{row['l']}) = {row['value']}")
    return "\n".join(lines)


def render_altsum_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        import json

        return json.dumps(
            [{**row, "value": row["value"].to_json()} for row in rows], indent=2
        )
    lines = []
    for row in rows:
        if fmt == "latex":
            lines.append(
                f"\\tilde{{S}}_{{{row['k']}}}({row['n']} \\mid \\lambda) &= "
                f"{poly_latex(row['value'])} \\\\"
            )
        else:
            lines.append(f"S~_{row['k']}({row['n']}|L) = {row['value']}")
    return "\n".join(lines)
