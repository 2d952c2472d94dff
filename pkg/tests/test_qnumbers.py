"""q-Euler numbers/polynomials and their alternating-sum identities.

Brute-force alternating sums are the oracle for every closed form; the two
polynomial forms check each other; all equalities are exact on Fractions.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuler.classical import euler_number, euler_poly
from qeuler.errors import DomainError
from qeuler.qnumbers import (QBase, QPower, alt_q_power_sum,
                             alt_q_power_sum_closed, distribution_sum,
                             q_euler_number, q_euler_poly,
                             q_euler_poly_via_numbers, q_euler_star_number,
                             q_euler_star_poly, q_int,
                             weighted_alt_q_power_sum,
                             weighted_alt_q_power_sum_closed)

HALF = QBase(Fraction(1, 2))
IDENTITY_Q = [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3),
              Fraction(3, 2), Fraction(5, 2)]

rational_q = st.builds(Fraction, st.integers(min_value=1, max_value=9),
                       st.integers(min_value=1, max_value=9)) \
    .filter(lambda q: q != 1)


def test_qbase_validation():
    for bad in (0, 1, -1):
        with pytest.raises(DomainError):
            QBase(Fraction(bad))
    with pytest.raises(DomainError):
        QBase(Fraction(3, 2), zeta_domain=True)
    assert QBase(Fraction(3, 2)).q == Fraction(3, 2)


def test_qpower_validation_and_witness():
    qp = QPower.from_integer(HALF, 3)
    assert qp.t == Fraction(1, 8)
    assert qp.t ** qp.exponent.denominator \
        == HALF.q ** qp.exponent.numerator
    qp = QPower.from_exponent(QBase(Fraction(1, 8)), Fraction(1, 3))
    assert qp.t == Fraction(1, 2)
    with pytest.raises(DomainError):
        QPower(HALF, Fraction(-1, 2))
    with pytest.raises(DomainError):
        QPower(HALF, Fraction(1, 4), Fraction(3))  # (1/2)^3 != 1/4


def test_q_int_values():
    assert q_int(0, HALF) == 0
    assert q_int(1, HALF) == 1
    assert q_int(3, HALF) == Fraction(7, 4)  # 1 + 1/2 + 1/4


def test_q_int_additivity():
    # [x + l]_q = [x]_q + q^x [l]_q
    for q in IDENTITY_Q:
        base = QBase(q)
        for x in range(0, 21, 4):
            for l in range(0, 21, 3):
                assert q_int(x + l, base) \
                    == q_int(x, base) + q ** x * q_int(l, base)


def test_q_euler_number_anchors():
    assert q_euler_number(0, HALF) == 1
    assert q_euler_number(0, QBase(Fraction(5, 2))) == 1
    assert q_euler_number(1, HALF) == Fraction(-2, 3)  # -1/(1+q)
    assert q_euler_number(2, HALF) == Fraction(-4, 15)


def test_q_euler_number_closed_form_n1():
    # the two-term sum collapses to -1/(1+q)
    for q in IDENTITY_Q:
        assert q_euler_number(1, QBase(q)) == -1 / (1 + q)


def test_q_euler_poly_anchors():
    assert q_euler_poly(2, QPower(HALF, Fraction(1, 4))) == Fraction(26, 15)
    assert q_euler_poly(2, QPower(HALF, Fraction(1, 8))) == Fraction(83, 30)


def test_q_euler_poly_at_t_one_is_number():
    for q in IDENTITY_Q:
        base = QBase(q)
        for n in range(8):
            assert q_euler_poly(n, QPower(base, Fraction(1))) \
                == q_euler_number(n, base)


def test_q_euler_poly_forms_agree():
    for q in IDENTITY_Q[:4]:
        base = QBase(q)
        for x in range(9):
            qp = QPower.from_integer(base, x)
            for n in range(11):
                assert q_euler_poly(n, qp) == q_euler_poly_via_numbers(n, qp)


def test_q_euler_poly_via_numbers_n1_identity():
    # (1-t)/(1-q) - t/(1+q), cleared denominators by hand
    for q in IDENTITY_Q:
        for t in (Fraction(1), q, q ** 2, q ** 3):
            qp = QPower(QBase(q), t)
            assert q_euler_poly_via_numbers(1, qp) \
                == (1 - t) / (1 - q) - t / (1 + q)


def test_q_euler_star_anchors():
    assert q_euler_star_number(0, HALF) == 1
    assert q_euler_star_number(1, HALF) == Fraction(-2, 5)
    assert q_euler_star_number(1, QBase(Fraction(1, 3))) == Fraction(-3, 10)
    assert q_euler_star_poly(1, QPower(HALF, Fraction(1, 4))) == Fraction(7, 5)
    assert q_euler_star_poly(1, QPower(HALF, Fraction(1, 8))) \
        == Fraction(17, 10)
    for q in IDENTITY_Q:
        base = QBase(q)
        for n in range(6):
            assert q_euler_star_poly(n, QPower(base, Fraction(1))) \
                == q_euler_star_number(n, base)


def test_alt_q_power_sum_examples():
    assert alt_q_power_sum(4, 1, HALF) == 0
    assert alt_q_power_sum(2, 3, HALF) == Fraction(5, 4)   # 0 - 1 + 9/4
    assert alt_q_power_sum(2, 2, HALF) == -1
    assert alt_q_power_sum_closed(2, 3, HALF) == Fraction(5, 4)
    assert alt_q_power_sum_closed(2, 2, HALF) == -1
    assert alt_q_power_sum_closed(5, 1, HALF) == 0


def test_alt_q_power_sum_identity_grid():
    for q in IDENTITY_Q:
        base = QBase(q)
        for m in range(1, 11):
            for n in range(1, 21):
                assert alt_q_power_sum_closed(m, n, base) \
                    == alt_q_power_sum(m, n, base)


def test_weighted_alt_q_power_sum_examples():
    assert weighted_alt_q_power_sum(1, 2, HALF) == Fraction(-1, 2)
    assert weighted_alt_q_power_sum(1, 3, HALF) == Fraction(-1, 8)
    assert weighted_alt_q_power_sum_closed(1, 2, HALF) == Fraction(-1, 2)
    assert weighted_alt_q_power_sum_closed(1, 3, HALF) == Fraction(-1, 8)
    assert weighted_alt_q_power_sum_closed(3, 1, HALF) == 0


def test_weighted_identity_grid():
    for q in IDENTITY_Q:
        base = QBase(q)
        for m in range(1, 11):
            for n in range(1, 21):
                assert weighted_alt_q_power_sum_closed(m, n, base) \
                    == weighted_alt_q_power_sum(m, n, base)


@settings(max_examples=60, deadline=None)
@given(rational_q, st.integers(min_value=1, max_value=6),
       st.integers(min_value=1, max_value=12))
def test_alt_q_power_sum_identity_random(q, m, n):
    base = QBase(q)
    assert alt_q_power_sum_closed(m, n, base) == alt_q_power_sum(m, n, base)


@settings(max_examples=60, deadline=None)
@given(rational_q, st.integers(min_value=1, max_value=6),
       st.integers(min_value=1, max_value=12))
def test_weighted_identity_random(q, m, n):
    base = QBase(q)
    assert weighted_alt_q_power_sum_closed(m, n, base) \
        == weighted_alt_q_power_sum(m, n, base)


def test_distribution_examples():
    assert distribution_sum(1, 3, 0, HALF) == Fraction(-2, 3)
    assert distribution_sum(2, 3, 0, HALF) == q_euler_number(2, HALF)
    for m in range(5):
        for x in range(4):
            assert distribution_sum(m, 1, x, HALF) \
                == q_euler_poly(m, QPower.from_integer(HALF, x))


def test_distribution_grid():
    for q in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
        base = QBase(q)
        for m in range(9):
            for f in (1, 3, 5):
                for x in range(6):
                    assert distribution_sum(m, f, x, base) \
                        == q_euler_poly(m, QPower.from_integer(base, x))


def test_distribution_rejects_even_f():
    with pytest.raises(DomainError):
        distribution_sum(2, 2, 0, HALF)
    with pytest.raises(DomainError):
        distribution_sum(2, 0, 0, HALF)


def test_q_to_one_limit_of_numbers():
    # |E_{n,1-eps} - E_n| shrinks linearly in eps
    epsilons = [Fraction(1, 10 ** k) for k in (2, 3, 4)]
    for n in range(9):
        deviations = [abs(q_euler_number(n, QBase(1 - eps)) - euler_number(n))
                      for eps in epsilons]
        assert deviations[0] >= deviations[1] >= deviations[2]
        ratios = [dev / eps for dev, eps in zip(deviations, epsilons)]
        assert ratios[1] <= 2 * ratios[0]
        assert ratios[2] <= 2 * ratios[0]


def test_q_to_one_limit_of_polynomials():
    epsilons = [Fraction(1, 10 ** k) for k in (2, 3, 4)]
    for n in range(6):
        for x in (1, 2, 3):
            deviations = []
            for eps in epsilons:
                base = QBase(1 - eps)
                deviations.append(abs(
                    q_euler_poly(n, QPower.from_integer(base, x))
                    - euler_poly(n, x)))
            assert deviations[0] >= deviations[1] >= deviations[2]
