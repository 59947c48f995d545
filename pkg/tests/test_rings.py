from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tubings_dse.rings import (LPoly, Poly, binomial, falling_factorial, format_rational,
                               parse_rational)

names = st.sampled_from(["c[0,1]", "c[1,1]", "c[2,1]", "c[0,2]"])
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw):
    p = Poly.const(draw(fracs))
    for _ in range(draw(st.integers(0, 3))):
        term = Poly.const(draw(fracs))
        for name in draw(st.lists(names, max_size=3)):
            term = term * Poly.symbol(name)
        p = p + term
    return p


@given(polys(), polys(), polys())
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.const(0)


@given(polys())
def test_poly_str_is_stable(p):
    assert str(p) == str(p + Poly.const(0))


def test_poly_formatting():
    c0, c1 = Poly.symbol("c[0,1]"), Poly.symbol("c[1,1]")
    assert str(c0 * c0 * c1 - Poly.const(Fraction(1, 2))) == "c[0,1]^2*c[1,1] - 1/2"
    assert (c0 * 2).evaluate({"c[0,1]": 3}) == 6


def test_rational_io():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(5)) == "5"
    assert parse_rational("-1/2") == Fraction(-1, 2)
    with pytest.raises(ValueError):
        parse_rational("x")


def test_generalized_binomials():
    assert falling_factorial(Fraction(1, 2), 3) == Fraction(1, 2) * Fraction(-1, 2) * Fraction(-3, 2)
    assert binomial(-1, 3) == -1
    assert binomial(0, 2) == 0
    assert binomial(5, 0) == 1


@given(st.lists(fracs, max_size=4), st.lists(fracs, max_size=4), fracs)
def test_lpoly_product_evaluates(a, b, x):
    p, q = LPoly(a), LPoly(b)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


def test_lpoly_trimmed_equality():
    assert LPoly([1, 0, 0]) == LPoly([1])
    assert LPoly().is_zero()
    assert LPoly.monomial(2, 3).coeff(2) == 3
