from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimzero.surd import Surd, q_half_power, sqrt_q, squarefree_decomposition

PREC = 100

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=60)
radicands = st.sampled_from([2, 3, 5, 6, 7, 10, 11, 13])


def as_decimal(x: Surd) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = PREC
        a = Decimal(x.a.numerator) / Decimal(x.a.denominator)
        b = Decimal(x.b.numerator) / Decimal(x.b.denominator)
        return a + b * Decimal(x.d).sqrt()


@st.composite
def surds(draw, d=None):
    return Surd(draw(fractions), draw(fractions), draw(radicands) if d is None else d)


def test_squarefree_decomposition():
    assert squarefree_decomposition(12) == (2, 3)
    assert squarefree_decomposition(16) == (4, 1)
    assert squarefree_decomposition(50) == (5, 2)
    assert Surd.sqrt(8) == Surd(0, 2, 2)
    assert Surd.sqrt(9) == Surd(3)


@settings(max_examples=1000)
@given(st.data())
def test_sign_and_order_against_hundred_digit_decimals(data):
    d = data.draw(radicands)
    x, y = data.draw(surds(d)), data.draw(surds(d))
    dx, dy = as_decimal(x), as_decimal(y)
    assert x.sign() == (dx > 0) - (dx < 0)
    assert (x < y) == (dx < dy) or abs(dx - dy) < Decimal("1e-90")
    assert x.floor() <= dx < x.floor() + 1
    assert x.ceil() - 1 < dx <= x.ceil()


def test_near_ties_are_exact():
    # 99/70 and 577/408 straddle sqrt(2) to within 1e-5
    assert Surd(Fraction(99, 70)) > Surd.sqrt(2)
    assert Surd(Fraction(577, 408)) > Surd.sqrt(2)
    assert Surd(Fraction(1393, 985)) < Surd.sqrt(2)
    assert (Surd.sqrt(2) - Fraction(665857, 470832)).sign() == -1


@given(surds(), surds())
def test_field_operations(x, y):
    if x.d != y.d and not (x.is_rational or y.is_rational):
        return
    assert x + y - y == x
    assert (x * y) == (y * x)
    if x.sign():
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@given(surds())
def test_string_round_trip_and_decimal_rendering(x):
    assert Surd.parse(str(x)) == x
    assert abs(x.to_decimal(20) - as_decimal(x)) < Decimal("1e-19")


def test_rendering():
    assert str(Surd(6, -4, 2)) == "6-4*sqrt(2)"
    assert Surd.parse("(1+2*sqrt(2))/3") == Surd(Fraction(1, 3), Fraction(2, 3), 2)
    assert str(Surd(Fraction(287, 288))) == "287/288"
    with pytest.raises(ValueError):
        Surd.parse("sqrt(")


def test_half_powers():
    assert sqrt_q(4) == 2
    assert q_half_power(2, 3) == Surd(0, 2, 2)
    assert q_half_power(9, 3) == 27
    assert q_half_power(3, 0) == 1
    assert q_half_power(2, 5) * q_half_power(2, 1) == 8


@given(surds(), st.integers(0, 5))
def test_integer_powers(x, e):
    expected = Surd(1, 0, x.d)
    for _ in range(e):
        expected = expected * x
    assert x**e == expected
