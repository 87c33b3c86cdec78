from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasihopf.fields import GF, QQ, Field

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=100)


def test_constants():
    assert QQ.zero() == Fraction(0)
    assert QQ.one() == Fraction(1)
    assert GF(7).zero() == 0
    assert GF(7).one() == 1
    assert GF(7).of_int(-1) == 6


def test_equality_and_repr():
    assert QQ == Field(None)
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert GF(5) != QQ
    assert repr(QQ) == "QQ"
    assert repr(GF(5)) == "GF(5)"


def test_rejects_composite_modulus():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)


@given(rationals, rationals)
def test_rational_field_ops(a, b):
    assert QQ.add(a, b) == a + b
    assert QQ.sub(a, b) == a - b
    assert QQ.mul(a, b) == a * b
    assert QQ.neg(a) == -a
    if b != 0:
        assert QQ.mul(QQ.div(a, b), b) == a


@given(st.integers(), st.integers())
def test_prime_field_ops(a, b):
    F = GF(13)
    x, y = F.of_int(a), F.of_int(b)
    assert F.add(x, y) == (a + b) % 13
    assert F.mul(x, y) == (a * b) % 13
    assert F.sub(x, y) == (a - b) % 13
    if y != 0:
        assert F.mul(F.inv(y), y) == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)


@given(rationals)
def test_rational_text_roundtrip(a):
    assert QQ.parse(QQ.fmt(a)) == a


@given(st.integers(min_value=0, max_value=10))
def test_prime_field_text_roundtrip(a):
    F = GF(11)
    assert F.parse(F.fmt(a)) == a


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        QQ.parse("1.5x")
    with pytest.raises(ValueError):
        GF(5).parse("1/2")
