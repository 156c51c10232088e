from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfrep.errors import ZeroEvaluationPoint
from hopfrep.scalars import ONE, Q, ZERO, LaurentScalar, as_scalar

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
laurent = st.dictionaries(st.integers(-3, 3), coeffs, max_size=4).map(LaurentScalar)
points = st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(lambda x: x != 0)


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(laurent, laurent, points)
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)


@given(laurent)
def test_render_parse_roundtrip(a):
    assert LaurentScalar.parse(str(a)) == a


def test_rendering():
    assert str(Q**-1 + 1) == "q^-1 + 1"
    assert str(Fraction(3, 2) * Q**2 - Q) == "-q + 3/2*q^2"
    assert str(ZERO) == "0"


def test_negative_powers_invert():
    assert Q * Q**-1 == ONE
    assert (Q**-2) ** 3 == Q**-6


def test_zero_point():
    assert (Q**2 + 3).evaluate(0) == 3
    with pytest.raises(ZeroEvaluationPoint):
        (Q**-1).evaluate(0)


def test_zero_coefficients_vanish():
    assert LaurentScalar({1: 0, 0: 2}) == as_scalar(2)
    assert (Q - Q).terms == {}


@pytest.mark.parametrize("bad", ["", "q^", "2**q", "x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        LaurentScalar.parse(bad)
