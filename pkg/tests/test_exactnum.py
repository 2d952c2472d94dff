"""Exact arithmetic kernel: binomials, rational powers, precision reals."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp

from qeuler.errors import DomainError, NotExactPower
from qeuler.exactnum import (GUARD_DIGITS, RealP, binom, format_rational,
                             gen_binom, iroot, parse_rational, rat_pow,
                             real_pow, to_mpf, tolerance)


def pascal_triangle(n_max):
    """Oracle: Pascal's triangle built by addition only."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


def test_binom_examples():
    assert binom(4, 2) == 6
    assert binom(7, 0) == 1
    # value produced by the additive oracle, frozen here
    assert pascal_triangle(10)[10][4] == 210
    assert binom(10, 4) == 210


def test_binom_zero_beyond_row():
    assert binom(5, 6) == 0
    assert binom(0, 3) == 0
    assert binom(3, -2) == 0


def test_binom_rejects_negative_n():
    with pytest.raises(DomainError):
        binom(-1, 0)


def test_binom_matches_pascal_triangle():
    rows = pascal_triangle(30)
    for n in range(31):
        for k in range(n + 1):
            assert binom(n, k) == rows[n][k]


@given(st.integers(min_value=1, max_value=30), st.data())
def test_binom_pascal_rule(n, data):
    k = data.draw(st.integers(min_value=0, max_value=n))
    assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


def test_gen_binom_examples():
    s = RealP.from_rational(2)
    assert abs(float(gen_binom(s, 3)) - 4) < 1e-30
    s = RealP.from_rational(-2)
    assert float(gen_binom(s, 3)) == 0  # factor (s + 2) vanishes
    assert abs(float(gen_binom(s, 1)) - (-2)) < 1e-30
    assert float(gen_binom(s, 0)) == 1


def test_gen_binom_at_negative_integers_matches_binom():
    # gen_binom(-m, k) == (-1)^k C(m, k) for k <= m and 0 beyond
    for m in range(13):
        s = RealP.from_rational(-m)
        for k in range(41):
            got = gen_binom(s, k)
            expected = (-1) ** k * binom(m, k) if k <= m else 0
            with mp.workdps(got.precision + GUARD_DIGITS):
                assert abs(got.value - expected) <= tolerance(got.precision)


def test_iroot_exact_and_floor():
    assert iroot(27, 3) == (3, True)
    assert iroot(28, 3) == (3, False)
    assert iroot(1, 7) == (1, True)
    assert iroot(0, 2) == (0, True)
    big = 123456789 ** 11
    assert iroot(big, 11) == (123456789, True)
    assert iroot(big + 1, 11) == (123456789, False)


def test_rat_pow_examples():
    assert rat_pow(Fraction(1, 8), Fraction(1, 3)) == Fraction(1, 2)
    assert rat_pow(Fraction(1, 2), Fraction(-2)) == 4
    with pytest.raises(NotExactPower):
        rat_pow(Fraction(1, 2), Fraction(1, 2))


def test_rat_pow_rejects_nonpositive_base():
    with pytest.raises(DomainError):
        rat_pow(Fraction(-8), Fraction(1, 3))
    with pytest.raises(DomainError):
        rat_pow(Fraction(0), Fraction(1, 2))


@given(st.integers(min_value=1, max_value=30),
       st.integers(min_value=1, max_value=30),
       st.integers(min_value=-5, max_value=5),
       st.integers(min_value=1, max_value=4))
def test_rat_pow_roundtrip(num, den, a, f):
    # build a guaranteed-exact power and recover its root
    base = Fraction(num, den)
    q = base ** f
    r = Fraction(a, f)
    result = rat_pow(q, r)
    assert result ** r.denominator == q ** r.numerator


def test_real_pow_examples():
    four = RealP.from_rational(4)
    half = RealP.from_rational(Fraction(1, 2))
    got = real_pow(four, half)
    with mp.workdps(70):
        assert abs(got.value - 2) < tolerance(50)
    assert real_pow(half, RealP.from_rational(0)).value == 1


def test_real_pow_agrees_with_rat_pow():
    cases = [(Fraction(1, 8), Fraction(1, 3)), (Fraction(9, 4), Fraction(1, 2)),
             (Fraction(32), Fraction(3, 5)), (Fraction(1, 2), Fraction(-3)),
             (Fraction(27, 64), Fraction(2, 3))]
    for q, r in cases:
        exact = rat_pow(q, r)
        approx = real_pow(RealP.from_rational(q), RealP.from_rational(r))
        with mp.workdps(70):
            assert abs(approx.value - to_mpf(exact)) <= tolerance(50)


def test_real_pow_rejects_nonpositive_base():
    with pytest.raises(DomainError):
        real_pow(RealP.from_rational(-4), RealP.from_rational(Fraction(1, 2)))


def test_rational_serialization_canonical():
    assert format_rational(Fraction(6)) == "6/1"
    assert format_rational(Fraction(-2, 3)) == "-2/3"
    assert format_rational(0) == "0/1"
    assert parse_rational("6/1") == 6
    assert parse_rational("-2/3") == Fraction(-2, 3)
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(DomainError):
        parse_rational("eleven")


def test_realp_digits_and_precision():
    v = RealP.from_rational(Fraction(1, 3), precision=30)
    text = v.digits()
    assert text.startswith("0.3333333333")
    assert v.precision == 30
    with pytest.raises(DomainError):
        RealP.from_rational(1, precision=0)
