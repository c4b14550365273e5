"""
Tests for exact Gaussian-rational arithmetic
"""
import random
from fractions import Fraction

import pytest

from src.numerics.gaussian import (
    ZERO,
    I,
    GaussianRational,
    floor_log10,
    format_gaussian,
    gauss_norm,
    parse_gaussian,
    truncate_decimal,
)
from src.utils.errors import ParseError, PreconditionError


def g(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def test_gauss_norm_examples():
    assert gauss_norm(ZERO) == 0
    assert gauss_norm(g(3, 4)) == 25
    assert gauss_norm(g(Fraction(1, 2), Fraction(1, 3))) == Fraction(13, 36)


def test_gauss_norm_is_positive_off_zero():
    rng = random.Random(0)
    for _ in range(200):
        z = g(Fraction(rng.randint(-50, 50), rng.randint(1, 9)), Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
        assert gauss_norm(z) >= 0
        assert (gauss_norm(z) == 0) == (z == 0)


def test_arithmetic_is_exact():
    assert g(1, 2) * g(3, -1) == g(5, 5)
    assert (g(1, 2) / g(3, -1)) * g(3, -1) == g(1, 2)
    assert I * I == -1
    assert g(2, 1) ** -1 == g(Fraction(2, 5), Fraction(-1, 5))
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_truncate_decimal_examples():
    assert truncate_decimal(g(Fraction(1, 3)), -2) == g(Fraction(33, 100))
    assert truncate_decimal(ZERO, -5) == ZERO
    assert truncate_decimal(g(Fraction(1, 2), Fraction(1, 3)), -1) == g(Fraction(1, 2), Fraction(3, 10))


def test_truncate_decimal_rounds_ties_away_from_zero():
    assert truncate_decimal(g(Fraction(1, 20)), -1) == g(Fraction(1, 10))
    assert truncate_decimal(g(Fraction(-1, 20)), -1) == g(Fraction(-1, 10))
    assert truncate_decimal(g(0, Fraction(-25)), 1) == g(0, -30)


def test_truncate_decimal_error_bound():
    rng = random.Random(1)
    for _ in range(300):
        z = g(Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 4)),
              Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 4)))
        k = rng.randint(-6, 2)
        half = Fraction(10) ** k / 2
        t = truncate_decimal(z, k)
        assert abs(t.re - z.re) <= half
        assert abs(t.im - z.im) <= half


def test_floor_log10_examples():
    assert floor_log10(Fraction(1)) == 0
    assert floor_log10(Fraction(1, 1000)) == -3
    assert floor_log10(Fraction(345)) == 2
    assert floor_log10(Fraction(999, 1000)) == -1
    assert floor_log10(Fraction(1, 999)) == -3


def test_floor_log10_rejects_non_positive():
    with pytest.raises(PreconditionError):
        floor_log10(Fraction(0))
    with pytest.raises(PreconditionError):
        floor_log10(Fraction(-3, 7))


def test_floor_log10_matches_digit_counting():
    rng = random.Random(2)
    for _ in range(1000):
        q = Fraction(rng.randint(1, 10 ** 50), rng.randint(1, 10 ** 50))
        e = 0
        while Fraction(10) ** e > q:
            e -= 1
        while Fraction(10) ** (e + 1) <= q:
            e += 1
        assert floor_log10(q) == e


def test_floor_log10_handles_huge_operands():
    q = Fraction(3 * 10 ** 5000 + 1, 7)
    assert floor_log10(q) == 4999
    assert floor_log10(1 / q) == -5000
    assert floor_log10(Fraction(10 ** 6000)) == 6000
    assert floor_log10(Fraction(1, 10 ** 6000)) == -6000


def test_text_round_trip():
    for text in ["0", "3", "-2/3", "I", "-I", "1/2 + 3/4*I", "-2/3 - 5*I", "7*I"]:
        assert format_gaussian(parse_gaussian(text)) == text


def test_parse_shorthand():
    assert parse_gaussian("3") == g(3)
    assert parse_gaussian(" -1/2 + I ") == g(Fraction(-1, 2), 1)
    assert parse_gaussian("(2 - 3*I)") == g(2, -3)


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_gaussian("")
    with pytest.raises(ParseError):
        parse_gaussian("1/0")
    with pytest.raises(ParseError):
        parse_gaussian("abc")
