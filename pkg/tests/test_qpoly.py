from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import homogeneous, small_fractions
from syzlef.qpoly import (
    BinaryForm,
    HomogeneousPolynomial,
    LinearForm,
    Monomial,
    NotHomogeneousError,
    PolynomialSyntaxError,
    dim_R,
    monomial_gcd_degree,
    monomials_of_degree,
    parse_polynomial,
    restrict_to_line,
)


def test_parse_monomials():
    f = parse_polynomial("X^3")
    assert f.is_monomial() and f.degree == 3 and f.leading_monomial() == Monomial(3, 0, 0)
    g = parse_polynomial("X*Y*Z")
    assert g.is_monomial() and g.degree == 3 and g.leading_monomial() == Monomial(1, 1, 1)


def test_parse_rejects_mixed_degrees():
    with pytest.raises(NotHomogeneousError, match="not homogeneous"):
        parse_polynomial("X^2*Y + X*Y")


@pytest.mark.parametrize("bad", ["X^", "X**2", "2*", "X + * Y", "W^2", "X^2 +", ""])
def test_parse_syntax_errors(bad):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial(bad)
    assert info.value.position >= 0


def test_parse_coefficients_and_implicit_product():
    f = parse_polynomial("2XYZ - 1/3 Z^3 + 0*X^3")
    assert f.coefficient(Monomial(1, 1, 1)) == 2
    assert f.coefficient(Monomial(0, 0, 3)) == Fraction(-1, 3)
    assert f.coefficient(Monomial(3, 0, 0)) == 0
    assert str(f) == "2*X*Y*Z - 1/3*Z^3"


def test_cancellation_keeps_degree_tag():
    f = parse_polynomial("X*Y - Y*X")
    assert f.is_zero() and f.degree == 2


@given(homogeneous())
def test_str_round_trips(f):
    if f.is_zero():
        return
    assert parse_polynomial(str(f)) == f


def test_monomial_counts():
    for d in range(8):
        assert len(monomials_of_degree(d)) == dim_R(d) == (d + 1) * (d + 2) // 2
    # descending grlex inside a degree
    assert monomials_of_degree(2)[:3] == (Monomial(2, 0, 0), Monomial(1, 1, 0), Monomial(1, 0, 1))


def test_gcd_degree_examples():
    assert monomial_gcd_degree([Monomial(4, 0, 0), Monomial(3, 1, 0)]) == 3
    assert monomial_gcd_degree([Monomial(2, 0, 0), Monomial(1, 1, 0)]) == 1
    assert monomial_gcd_degree([Monomial(0, 0, 3), Monomial(1, 1, 1)]) == 1
    with pytest.raises(ValueError):
        monomial_gcd_degree([])


exps = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))


@given(st.lists(exps, min_size=1, max_size=5))
def test_gcd_degree_bounded_by_min(es):
    monos = [Monomial(*e) for e in es]
    g = monomial_gcd_degree(monos)
    low = min(m.degree for m in monos)
    assert g <= low
    divides_all = any(all(m.divides(o) for o in monos) for m in monos)
    assert (g == low) == divides_all


lines = st.builds(lambda u, v: LinearForm.chart(u, v), small_fractions, small_fractions)


@given(homogeneous(max_degree=3), homogeneous(max_degree=3), lines)
def test_restriction_is_multiplicative(f, g, line):
    assert restrict_to_line(f * g, line) == restrict_to_line(f, line) * restrict_to_line(g, line)


@given(homogeneous(degree=3), homogeneous(degree=3), small_fractions, lines)
def test_restriction_is_linear(f, g, c, line):
    lhs = restrict_to_line(f + g.scale(c), line)
    rhs = restrict_to_line(f, line) + BinaryForm(3, tuple(c * x for x in restrict_to_line(g, line).coefficients))
    assert lhs == rhs
    assert lhs.degree == 3


def test_restriction_by_hand():
    # Z = 2X + 3Y on X*Z - Y^2 gives 2X^2 + 3XY - Y^2
    line = LinearForm.chart(2, 3)
    b = restrict_to_line(parse_polynomial("X*Z - Y^2"), line)
    assert b.coefficients == (2, 3, -1)


def test_linear_form_validation():
    with pytest.raises(ValueError):
        LinearForm(0, 0, 0)
    with pytest.raises(ValueError):
        LinearForm(1, 1, 0).substitution()


def test_vector_round_trip():
    f = parse_polynomial("X^2 - 3*Y*Z + 1/2*Z^2")
    assert HomogeneousPolynomial.from_vector(2, f.to_vector()) == f


def test_polynomial_arithmetic_checks_degree():
    with pytest.raises(ValueError):
        parse_polynomial("X") + parse_polynomial("X^2")
