"""Exact polynomial arithmetic over the rationals."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sturmion.poly import Polynomial


def make(*coeffs):
    return Polynomial(tuple(Fraction(c) for c in coeffs))


rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=7)
polys = st.lists(rationals, min_size=0, max_size=6).map(
    lambda cs: Polynomial(tuple(cs)))


def test_trailing_zeros_are_stripped():
    assert make(1, 2, 0, 0) == make(1, 2)
    assert make(0, 0).degree == -1


def test_degree_and_leading():
    p = make(-6, 11, -6, 1)
    assert p.degree == 3
    assert p.coeffs[-1] == 1


def test_evaluation_by_horner():
    p = make(-6, 11, -6, 1)  # (x-1)(x-2)(x-3)
    assert p(Fraction(0)) == -6
    assert p(Fraction(2)) == 0
    assert p(Fraction(5, 2)) == Fraction(-3, 8)


def test_from_roots():
    p = Polynomial.from_roots([Fraction(1), Fraction(2), Fraction(3)])
    assert p == make(-6, 11, -6, 1)


def test_derivative():
    p = make(5, 0, 3, 2)
    assert p.derivative() == make(0, 6, 6)
    assert make(7).derivative().degree == -1


def test_long_division_exact():
    num = make(-6, 11, -6, 1)
    den = make(-3, 1)
    q, r = divmod(num, den)
    assert q == make(2, -3, 1)
    assert r.degree == -1


def test_long_division_with_remainder():
    num = make(1, 0, 1)  # x^2 + 1
    den = make(-1, 1)
    q, r = divmod(num, den)
    assert q == make(1, 1)
    assert r == make(2)


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        divmod(make(1, 1), Polynomial())


def test_shift():
    p = make(0, 0, 1)  # x^2
    assert p.shift(Fraction(1)) == make(1, 2, 1)
    assert p.shift(Fraction(-1)) == make(1, -2, 1)


def test_compose():
    p = make(1, 1)  # x + 1
    inner = make(0, 0, 1)
    assert p.compose(inner) == make(1, 0, 1)


@given(polys, polys)
def test_divmod_reconstructs(a, b):
    if b.degree < 0:
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys)
def test_product_rule(a, b):
    left = (a * b).derivative()
    right = a.derivative() * b + a * b.derivative()
    assert left == right


@given(polys, polys, rationals)
def test_ring_operations_agree_pointwise(a, b, x):
    assert (a + b)(x) == a(x) + b(x)
    assert (a - b)(x) == a(x) - b(x)
    assert (a * b)(x) == a(x) * b(x)
