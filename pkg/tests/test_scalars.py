from fractions import Fraction

import pytest

from loopalg.scalars import Scalar, format_scalar, parse_scalar


def test_rational_arithmetic():
    a = Scalar(Fraction(1, 2))
    b = Scalar(Fraction(1, 3))
    assert str(a + b) == "5/6"
    assert str(a * b) == "1/6"
    assert str(a - b) == "1/6"
    assert (a / a - Scalar(1)).is_zero()


def test_eta_r2_is_minus_one():
    e = Scalar.eta(2)
    assert e == Scalar(-1, 0, 2)
    assert (e * e) == Scalar(1, 0, 2)


def test_eta_r3_cube_is_one():
    w = Scalar.eta(3)
    assert not w.is_rational()
    assert (w * w * w) == Scalar(1, 0, 3)
    # minimal polynomial: w^2 + w + 1 = 0
    assert (w * w + w + Scalar(1, 0, 3)).is_zero()


def test_eta_pow_cycles():
    w = Scalar.eta(3)
    assert w.eta_pow(0) == Scalar(1, 0, 3)
    assert w.eta_pow(3) == Scalar(1, 0, 3)
    assert w.eta_pow(4) == w.eta_pow(1)
    assert w.eta_pow(-1) == w.eta_pow(2)


def test_inverse_in_cyclotomic_field():
    w = Scalar.eta(3)
    x = Scalar(2, 0, 3) + w * Scalar(3, 0, 3)
    assert (x * x.inverse()) == Scalar(1, 0, 3)
    with pytest.raises(ZeroDivisionError):
        Scalar(0, 0, 3).inverse()


def test_division():
    w = Scalar.eta(3)
    x = Scalar(1, 0, 3) + w
    y = Scalar(5, 0, 3) - w
    assert ((x / y) * y) == x


@pytest.mark.parametrize("text,r", [
    ("1/2", 1), ("-3", 1), ("0", 1),
    ("1/2+2w", 3), ("1-1w", 3), ("-2/3+1/5w", 3),
])
def test_parse_format_roundtrip(text, r):
    s = parse_scalar(text, r)
    assert parse_scalar(format_scalar(s), r) == s


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_scalar("spam", 3)


def test_mixed_int_arithmetic():
    a = Scalar(3)
    assert a * 2 == Scalar(6)
    assert 2 * a == Scalar(6)
    assert a + 1 == Scalar(4)
    assert 1 - a == Scalar(-2)
