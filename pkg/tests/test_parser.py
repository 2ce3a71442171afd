from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from singcurve import Field, Polynomial, PolynomialSyntaxError, UnknownVariable, parse_polynomial
from singcurve.polynomial import monomials_of_degree

GF = Field.prime(10007)
XYZ = ("x", "y", "z")


def test_nodal_cubic_text():
    f = parse_polynomial("y^2*z - x^3 - x^2*z", XYZ, GF)
    assert len(f) == 3
    assert f.is_homogeneous() and f.degree == 3
    assert f.coefficient((0, 2, 1)) == 1
    assert f.coefficient((3, 0, 0)) == GF.p - 1


@pytest.mark.parametrize("text,offset", [
    ("x0 + + x1", 5),
    ("x0 *", 4),
    ("(x0 + x1", 8),
    ("x0 $ x1", 3),
    ("x0^x1", 3),
    ("x0 x1", 3),
])
def test_syntax_errors_report_byte_offset(text, offset):
    with pytest.raises(PolynomialSyntaxError) as err:
        parse_polynomial(text, ("x0", "x1"), GF)
    assert err.value.offset == offset


def test_unknown_variable():
    with pytest.raises(UnknownVariable) as err:
        parse_polynomial("x0 + t", ("x0", "x1"), GF)
    assert err.value.offset == 5


def test_coefficient_vanishes_mod_p():
    assert parse_polynomial("7*x0^2", ("x0",), Field.prime(7)).is_zero()


def test_precedence_and_signs():
    a = parse_polynomial("-x^2 + 2*(x - y)^2", XYZ, GF)
    b = parse_polynomial("x**2 - 4*x*y + 2*y^2", XYZ, GF)
    assert a == b


def test_division_by_constant():
    Q = Field.rational()
    f = parse_polynomial("3/4*x - y/2", XYZ, Q)
    assert f.coefficient((1, 0, 0)) == Fraction(3, 4)
    assert f.coefficient((0, 1, 0)) == Fraction(-1, 2)
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x/y", XYZ, Q)
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x/0", XYZ, Q)


@st.composite
def polys(draw, field):
    nvars = 3
    terms = {}
    for _ in range(draw(st.integers(0, 6))):
        deg = draw(st.integers(0, 4))
        mon = draw(st.sampled_from(monomials_of_degree(nvars - 1, deg)))
        if field.is_prime:
            c = draw(st.integers(0, field.p - 1))
        else:
            c = draw(st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 1000))
        terms[mon] = c
    return Polynomial(field, nvars, terms)


@given(polys(GF))
def test_roundtrip_prime(f):
    assert parse_polynomial(f.render(XYZ), XYZ, GF) == f


@given(polys(Field.rational()))
def test_roundtrip_rational(f):
    Q = Field.rational()
    assert parse_polynomial(f.render(XYZ), XYZ, Q) == f
