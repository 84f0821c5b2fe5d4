import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from degen_euler import LAM, MPoly, X, Y, as_fraction, parse_poly
from degen_euler.poly import render_terms


def test_add_cancels_to_canonical_form():
    assert (X**2 - LAM * X) + (LAM * X) == X**2


def test_add_zero_identity():
    p = 3 * X**2 - Fraction(1, 2) * Y
    assert p + MPoly.zero() == p


def test_add_constant_result():
    assert (X - Fraction(1, 2)) + (-X) == MPoly.const(Fraction(-1, 2))


def test_mul_expands_factor_pair():
    assert X * (X - LAM) == X**2 - LAM * X


def test_mul_one_identity():
    p = X**2 - Y * LAM + 7
    assert p * MPoly.const(1) == p


def test_mul_difference_of_squares():
    assert (X - 1) * (X + 1) == X**2 - 1


def test_subst_linear():
    assert (X - Fraction(1, 2)).subst("x", 3 * X) == 3 * X - Fraction(1, 2)


def test_subst_lambda_zero_gives_classical_quadratic():
    # Oracle: E_2(x|L) from the defining convolution 2*E_n = -sum C(n,k) E_k (1|L)_{n-k},
    # solved by hand: E_2(x|L) = x^2 - (1+L)x + L/2; at L = 0 this is x^2 - x.
    e2 = X**2 - (1 + LAM) * X + Fraction(1, 2) * LAM
    assert e2.subst("L", 0) == X**2 - X


def test_subst_scalar_rescale():
    assert (LAM * X).subst("L", Fraction(1, 3) * LAM) == Fraction(1, 3) * LAM * X


def test_subst_self_referential_replacement():
    # x -> x + 1 must use the original x only.
    assert (X**2).subst("x", X + 1) == X**2 + 2 * X + 1


def test_eval_direct_product():
    assert (X**2 - LAM * X).evaluate(3, 0, 2) == 3


def test_eval_zero():
    assert MPoly.zero().evaluate(5, 7, 11) == 0


def test_eval_half():
    assert (X - Fraction(1, 2)).evaluate(1, 0, 0) == Fraction(1, 2)


def test_zero_polynomial_is_empty_map():
    assert (X - X).term_count() == 0
    assert (X - X).is_zero


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        MPoly({(-1, 0, 0): 1})


def test_floats_rejected():
    with pytest.raises(TypeError):
        MPoly.const(0.5)
    with pytest.raises(TypeError):
        as_fraction(0.25)


# -- randomized ring axioms ----------------------------------------------------

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
exponents = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(exponents, rationals, max_size=4).map(MPoly)
points = st.tuples(rationals, rationals, rationals)


@given(polys, polys)
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(polys, polys, polys)
def test_addition_associates(p, q, r):
    assert (p + q) + r == p + (q + r)


@given(polys, polys)
def test_multiplication_commutes(p, q):
    assert p * q == q * p


@given(polys, polys, polys)
def test_multiplication_associates(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(polys, polys, polys)
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_canonical_never_stores_zero(p):
    assert all(coeff != 0 for _, coeff in p.sorted_terms())


@given(polys, polys, points)
def test_eval_is_ring_homomorphism(p, q, point):
    x0, y0, l0 = point
    assert (p * q).evaluate(x0, y0, l0) == p.evaluate(x0, y0, l0) * q.evaluate(x0, y0, l0)
    assert (p + q).evaluate(x0, y0, l0) == p.evaluate(x0, y0, l0) + q.evaluate(x0, y0, l0)


@given(polys, rationals, rationals)
def test_substitution_composes(p, c, d):
    twice = p.subst("L", c * LAM).subst("L", d * LAM)
    assert twice == p.subst("L", (c * d) * LAM)


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_multiplication(p, e):
    expected = MPoly.const(1)
    for _ in range(e):
        expected = expected * p
    assert p**e == expected


# -- serialization ---------------------------------------------------------------


def test_text_rendering_graded_lex():
    e2 = X**2 - (1 + LAM) * X + Fraction(1, 2) * LAM
    assert str(e2) == "x^2 - x*L - x + 1/2*L"
    assert str(MPoly.zero()) == "0"
    assert str(MPoly.const(Fraction(-3, 4))) == "-3/4"


def test_render_terms_empty():
    assert render_terms([], ("x", "y", "L")) == "0"


def test_json_round_trip():
    p = Fraction(22, 7) * X**2 * Y - LAM**3 + 5
    data = json.loads(json.dumps(p.to_json()))
    assert MPoly.from_json(data) == p


def test_json_terms_are_sorted_graded_lex():
    p = X + LAM * X + X**2
    exps = [tuple(entry["e"]) for entry in p.to_json()]
    assert exps == [(2, 0, 0), (1, 0, 1), (1, 0, 0)]


@given(polys)
def test_parse_round_trips_rendered_text(p):
    assert parse_poly(str(p)) == p


def test_parse_examples():
    assert parse_poly("x^2") == X**2
    assert parse_poly("x*(x - L)") == X**2 - X * LAM
    assert parse_poly("1/2*x - 3") == Fraction(1, 2) * X - 3
    assert parse_poly("x/2") == Fraction(1, 2) * X
    assert parse_poly("-(x - y)^2") == -((X - Y) ** 2)


def test_parse_rejects_garbage():
    for bad in ("x +", "x^-1", "(x", "z", "x/(y)", "2//3"):
        with pytest.raises(ValueError):
            parse_poly(bad)
