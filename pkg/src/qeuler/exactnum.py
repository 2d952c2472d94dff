"""Exact rational arithmetic and precision-tracked real arithmetic.

Rational values are plain :class:`fractions.Fraction` objects: exact, always
in lowest terms, denominator positive, closed under +, -, *, /.  Everything
identity-level in this package is computed with them.  Values that cannot
stay rational (zeta and L-function evaluations at general arguments) are
carried as :class:`RealP`, an mpmath float tagged with the decimal precision
it is certified to.

Precision contract: an operation documented as "at precision P" computes
with at least ``P + GUARD_DIGITS`` working digits and returns a value whose
absolute error is at most ``10**-(P - 10)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from mpmath import mp, mpf

from .errors import DomainError, NotExactPower

#: Working digits carried on top of a requested precision P.  Results are
#: certified only to 10**-(P-10), leaving a 30-digit cushion for rounding
#: and series truncation.
GUARD_DIGITS = 20

#: Default certified precision (decimal digits) for real-valued results.
DEFAULT_PRECISION = 50


def to_mpf(value: Fraction | int) -> mpf:
    """Exact rational -> mpf at the current working precision."""
    fr = Fraction(value)
    return mpf(fr.numerator) / mpf(fr.denominator)


def tolerance(precision: int) -> mpf:
    """The certified absolute error bound 10**-(P-10) at precision P."""
    return mpf(10) ** (-(precision - 10))


def format_rational(value: Fraction | int) -> str:
    """Canonical serialization "num/den", denominator printed even when 1."""
    fr = Fraction(value)
    return f"{fr.numerator}/{fr.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or a finite decimal string to an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


@dataclass(frozen=True)
class RealP:
    """An arbitrary-precision real certified to `precision` decimal digits.

    The wrapped mpf was produced under at least ``precision + GUARD_DIGITS``
    working digits; downstream consumers re-enter that working precision
    before operating on it.
    """

    value: mpf
    precision: int = DEFAULT_PRECISION

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise DomainError("precision must be a positive digit count")

    @classmethod
    def from_rational(cls, value: Fraction | int | str,
                      precision: int = DEFAULT_PRECISION) -> RealP:
        """Build from an exact rational given as Fraction, int, "p/q" or a
        finite decimal string."""
        fr = value if isinstance(value, Fraction) else parse_rational(str(value))
        with mp.workdps(precision + GUARD_DIGITS):
            return cls(to_mpf(fr), precision)

    def neg(self) -> RealP:
        # negation still rounds to the ambient context, so enter ours
        with mp.workdps(self.precision + GUARD_DIGITS):
            return RealP(-self.value, self.precision)

    def digits(self) -> str:
        """Decimal string with `precision` significant digits."""
        with mp.workdps(self.precision + GUARD_DIGITS):
            return mp.nstr(self.value, self.precision, strip_zeros=False)

    def __float__(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class ComplexP:
    """Precision-tagged complex companion of :class:`RealP`, used where
    character values leave the real line."""

    value: object  # mpmath.mpc
    precision: int = DEFAULT_PRECISION

    def digits(self) -> str:
        with mp.workdps(self.precision + GUARD_DIGITS):
            re = mp.nstr(self.value.real, self.precision, strip_zeros=False)
            im = mp.nstr(self.value.imag, self.precision, strip_zeros=False)
        joiner = "" if im.startswith("-") else "+"
        return f"{re}{joiner}{im}i"


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero outside 0 <= k <= n, so Pascal's
    rule C(n,k) = C(n-1,k-1) + C(n-1,k) holds on the whole row."""
    if n < 0:
        raise DomainError("binom requires nonnegative n")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def gen_binom(s: RealP, k: int) -> RealP:
    """Rising binomial coefficient C(s+k-1, k) = prod_{i<k}(s+i) / k!.

    At s = -m with m a nonnegative integer this equals (-1)^k * C(m, k) for
    k <= m and vanishes beyond, which is what makes the zeta continuation
    series terminate at negative integer arguments.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    with mp.workdps(s.precision + GUARD_DIGITS):
        acc = mpf(1)
        for i in range(k):
            acc *= s.value + i
        return RealP(acc / factorial(k), s.precision)


def iroot(n: int, k: int) -> tuple[int, bool]:
    """Floor k-th root of n >= 0 together with an exactness flag.

    Integer Newton iteration started from a power-of-two overestimate; no
    floating point is involved, so the exactness flag is trustworthy at any
    magnitude.
    """
    if n < 0 or k < 1:
        raise DomainError("iroot requires n >= 0, k >= 1")
    if k == 1 or n in (0, 1):
        return n, True
    x = 1 << -(-n.bit_length() // k)  # 2**ceil(bits/k) >= n**(1/k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x ** k == n


def rat_pow(q: Fraction, r: Fraction) -> Fraction:
    """Exact q**r for rational q > 0 and r = a/f, when the value is rational.

    q**a is computed exactly, then the f-th root is extracted from numerator
    and denominator separately; if either root is inexact the whole power is
    irrational and NotExactPower is raised.  Exactness never degrades to an
    approximation here.
    """
    q = Fraction(q)
    r = Fraction(r)
    if q <= 0:
        raise DomainError("rat_pow requires q > 0")
    power = q ** r.numerator
    f = r.denominator
    if f == 1:
        return power
    num, num_exact = iroot(power.numerator, f)
    den, den_exact = iroot(power.denominator, f)
    if not (num_exact and den_exact):
        raise NotExactPower(f"({q})**({r}) is irrational")
    return Fraction(num, den)


def real_pow(q: RealP, r: RealP) -> RealP:
    """exp(r * ln q) at the operating precision (the smaller of the two)."""
    if q.value <= 0:
        raise DomainError("real_pow requires q > 0")
    precision = min(q.precision, r.precision)
    with mp.workdps(precision + GUARD_DIGITS):
        return RealP(mp.power(q.value, r.value), precision)
