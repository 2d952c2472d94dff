"""Euler q-zeta function, its partial (residue-class) variant, and the
negative-integer interpolation checks.

The defining series sum_{n>=0} (-1)^n [n+x]_q^(-s) has terms tending to
(1-q)^s rather than zero, so its value is taken in the Abel/Euler sense.
Two independent summation routes are implemented:

* `zeta` expands [n+x]_q^(-s) = (1-q)^s sum_k C(s+k-1,k) q^((n+x)k) and
  resums the alternating n-series termwise to 1/(1+q^k), giving

      zeta(s, x) = (1-q)^s sum_k gen_binom(s,k) q^(xk) / (1+q^k),

  a series whose terms decay geometrically (q^(xk)) against polynomial
  coefficient growth.  This is the primary route; at s = -n it truncates
  after n+1 terms and reproduces E_{n,q}(x)/2 exactly.

* `zeta_euler_transform` sums the raw alternating series by Euler's
  transformation sum_k (-1)^k (forward differences at 0) / 2^(k+1), the
  independent cross-check.

Both routes work at precision + GUARD_DIGITS internal digits and certify
10**-(P-10).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from mpmath import mp, mpf

from .errors import DomainError, NonConvergence
from .exactnum import (DEFAULT_PRECISION, GUARD_DIGITS, RealP, to_mpf,
                       tolerance)
from .qnumbers import QBase, QPower, q_euler_poly, q_int


@dataclass(frozen=True)
class ZetaQuery:
    """Arguments for a q-zeta evaluation: real s, real x > 0, rational
    0 < q < 1, and the certified output precision (P >= 15)."""

    s: RealP
    x: RealP
    q: QBase
    precision: int = DEFAULT_PRECISION

    def __post_init__(self) -> None:
        # re-wrap to assert the zeta-side domain 0 < q < 1
        object.__setattr__(self, "q", QBase(self.q.q, zeta_domain=True))
        if self.precision < 15:
            raise DomainError("precision must be at least 15")
        if not self.x.value > 0:
            raise DomainError("x must be positive")


def zeta(zq: ZetaQuery) -> RealP:
    """Euler q-zeta value via the binomial continuation series.

    Truncation rule: stop once k >= 8 and three consecutive terms fall
    below 10**-(P+15) * (1 + |partial sum|); q^(xk) decays geometrically
    while the coefficient grows only polynomially, so three sub-threshold
    terms bound the tail at guard precision.
    """
    precision = zq.precision
    with mp.workdps(precision + GUARD_DIGITS):
        qv = to_mpf(zq.q.q)
        sv = zq.s.value
        qx = mp.power(qv, zq.x.value)
        prefactor = mp.power(1 - qv, sv)
        threshold = mpf(10) ** (-(precision + 15))
        total = mpf(0)
        coeff = mpf(1)   # gen_binom(s, k), updated by *(s+k)/(k+1)
        qxk = mpf(1)     # q^(xk)
        qk = mpf(1)      # q^k
        small_streak = 0
        k = 0
        while True:
            term = coeff * qxk / (1 + qk)
            total += term
            if k >= 8 and abs(term) < threshold * (1 + abs(total)):
                small_streak += 1
                if small_streak >= 3:
                    break
            else:
                small_streak = 0
            coeff = coeff * (sv + k) / (k + 1)
            qxk *= qx
            qk *= qv
            k += 1
        return RealP(prefactor * total, precision)


def euler_transform(terms: Callable[[int], mpf], precision: int,
                    cap: int | None = None) -> mpf:
    """Abel value of sum_{n>=0} (-1)^n a_n by Euler's transformation
    sum_k (-1)^k (Delta^k a)_0 / 2^(k+1) with forward differences.

    `terms(j)` is called once for each j in increasing order.  The caller
    must already hold the working-precision context.  Raises NonConvergence
    once `cap` difference levels (default 4 * precision + 200) pass without
    the terms settling.
    """
    if cap is None:
        cap = 4 * precision + 200
    threshold = mpf(10) ** (-(precision + 15))
    diagonal: list[mpf] = []  # diagonal[k] = Delta^k a_(j-k) after term j
    total = mpf(0)
    small_streak = 0
    for j in range(cap + 1):
        carry = terms(j)
        for k in range(len(diagonal)):
            previous = diagonal[k]
            diagonal[k] = carry
            carry = carry - previous
        diagonal.append(carry)  # Delta^j a_0
        term = carry / mpf(2) ** (j + 1)
        if j % 2:
            term = -term
        total += term
        if j >= 8 and abs(term) < threshold * (1 + abs(total)):
            small_streak += 1
            if small_streak >= 3:
                return total
        else:
            small_streak = 0
    raise NonConvergence(
        f"Euler transform did not settle within {cap} difference levels")


def zeta_euler_transform(zq: ZetaQuery) -> RealP:
    """Independent summation of the defining series sum (-1)^n [n+x]_q^(-s)
    by Euler's transformation.  Must agree with `zeta` within tolerance."""
    precision = zq.precision
    with mp.workdps(precision + GUARD_DIGITS):
        qv = to_mpf(zq.q.q)
        sv = zq.s.value
        one_minus_q = 1 - qv
        state = [mp.power(qv, zq.x.value)]  # q^(x+n), advanced per call

        def term(_j: int) -> mpf:
            bracket = (1 - state[0]) / one_minus_q
            state[0] *= qv
            return mp.power(bracket, -sv)

        return RealP(euler_transform(term, precision), precision)


def interpolate_check(n: int, x: int, q: QBase,
                      precision: int = DEFAULT_PRECISION
                      ) -> tuple[Fraction, RealP]:
    """Exact E_{n,q}(x)/2 alongside zeta(-n, x, q).

    Returns the pair and raises ArithmeticError if the two differ by more
    than the certified 10**-(P-10).
    """
    if n < 0 or x < 1:
        raise DomainError("need n >= 0 and integer x >= 1")
    exact = q_euler_poly(n, QPower.from_integer(q, x)) / 2
    approx = zeta(ZetaQuery(RealP.from_rational(-n, precision),
                            RealP.from_rational(x, precision),
                            q, precision))
    with mp.workdps(precision + GUARD_DIGITS):
        if abs(approx.value - to_mpf(exact)) > tolerance(precision):
            raise ArithmeticError(
                f"interpolation mismatch at n={n}, x={x}, q={q.q}")
    return exact, approx


def _check_residue(a: int, period: int) -> None:
    if period % 2 == 0:
        raise DomainError("the period F must be odd")
    if not 0 < a < period:
        raise DomainError("need 0 < a < F")


def partial_zeta(s: RealP, a: int, period: int, q: QBase,
                 precision: int = DEFAULT_PRECISION) -> RealP:
    """Partial q-zeta over the residue class a mod F (F odd, 0 < a < F):

        H_q(s, a; F) = [F]_q^(-s) (-1)^a zeta_{E,q^F}(s, a/F).

    Delegates to `zeta` with base q^F and x = a/F.
    """
    _check_residue(a, period)
    if not 0 < q.q < 1:
        raise DomainError("partial zeta requires 0 < q < 1")
    inner = zeta(ZetaQuery(s, RealP.from_rational(Fraction(a, period), precision),
                           QBase(q.q ** period, zeta_domain=True), precision))
    with mp.workdps(precision + GUARD_DIGITS):
        scale = mp.power(to_mpf(q_int(period, q)), -s.value)
        value = scale * inner.value
        if a % 2:
            value = -value
        return RealP(value, precision)


def partial_zeta_series(s: RealP, a: int, period: int, q: QBase,
                        precision: int = DEFAULT_PRECISION) -> RealP:
    """Direct route for H_q(s, a; F): Euler-transform summation of
    sum_n (-1)^(a+nF) / [a+nF]_q^s (for odd F, (-1)^(nF) = (-1)^n).
    Cross-check for `partial_zeta`."""
    _check_residue(a, period)
    if not 0 < q.q < 1:
        raise DomainError("partial zeta requires 0 < q < 1")
    with mp.workdps(precision + GUARD_DIGITS):
        qv = to_mpf(q.q)
        sv = s.value
        one_minus_q = 1 - qv
        q_period = mp.power(qv, period)
        state = [mp.power(qv, a)]  # q^(a+nF)

        def term(_j: int) -> mpf:
            bracket = (1 - state[0]) / one_minus_q
            state[0] *= q_period
            return mp.power(bracket, -sv)

        value = euler_transform(term, precision)
        if a % 2:
            value = -value
        return RealP(value, precision)


def partial_zeta_special_value(n: int, a: int, period: int,
                               q: Fraction) -> Fraction:
    """Exact H_q(-n, a; F) = (-1)^a [F]_q^n E_{n,q^F}(a/F) / 2 for n >= 1.

    (q^F)^(a/F) = q^a is always rational, so the whole computation stays
    in Fraction arithmetic.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    _check_residue(a, period)
    q = Fraction(q)
    if not 0 < q < 1:
        raise DomainError("requires rational q in (0, 1)")
    base = QBase(q)
    poly = q_euler_poly(n, QPower(QBase(q ** period), q ** a,
                                  Fraction(a, period)))
    value = q_int(period, base) ** n * poly / 2
    return -value if a % 2 else value
