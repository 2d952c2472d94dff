"""Modified q-Euler numbers and polynomials with their sum identities.

The q-integer is [k]_q = (1-q^k)/(1-q).  The q-Euler numbers E_{n,q} come
from the alternating exponential generating function 2 sum_l (-1)^l e^([l]t)
and have the closed form

    E_{n,q} = 2 (1/(1-q))^n sum_{j<=n} C(n,j) (-1)^j / (1+q^j),

with the j = 0 term reading 1/(1+q^0) = 1/2.  Polynomials E_{n,q}(x) shift
the generating function by [x]_q; the argument x enters the closed form only
through q^x, so every evaluator here consumes a :class:`QPower` carrying an
exact rational t = q^x.  Callers prove exactness by constructing t; nothing
in this module silently approximates.

The star variants E*_{n,q} and E*_{n,q}(x) weight the alternating sum by
q^l, shifting the denominators to 1+q^(j+1) and the prefactor to [2]_q.

Everything is exact Fraction arithmetic, and every closed-form identity has
a brute-force partner it can be compared with bit for bit.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactnum import binom, rat_pow

_cache_lock = threading.Lock()
_number_cache: dict[tuple[str, int, Fraction], Fraction] = {}


@dataclass(frozen=True)
class QBase:
    """A validated q parameter.

    q must avoid {0, 1, -1} so that 1-q and every 1+q^j stay nonzero.
    With `zeta_domain` set the base is additionally confined to 0 < q < 1,
    the convergence regime of the zeta-side series; q > 0 is required
    whenever fractional powers of q are taken.
    """

    q: Fraction
    zeta_domain: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q in (0, 1, -1):
            raise DomainError("q must avoid 0, 1 and -1")
        if self.zeta_domain and not 0 < self.q < 1:
            raise DomainError("zeta domain requires 0 < q < 1")


@dataclass(frozen=True)
class QPower:
    """An exact power t = q^y of a QBase, with an optional witness exponent.

    When `exponent` y = a/f is present, t^f == q^a holds exactly; the pair
    is how fractional arguments reach the polynomial evaluators without any
    loss of exactness.
    """

    base: QBase
    t: Fraction
    exponent: Fraction | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t <= 0:
            raise DomainError("t must be positive")
        if self.exponent is not None:
            object.__setattr__(self, "exponent", Fraction(self.exponent))
            y = self.exponent
            if self.t ** y.denominator != self.base.q ** y.numerator:
                raise DomainError("t does not equal q**exponent")

    @classmethod
    def from_integer(cls, base: QBase, x: int) -> QPower:
        """t = q^x for integer x (exact for any valid base)."""
        return cls(base, base.q ** x, Fraction(x))

    @classmethod
    def from_exponent(cls, base: QBase, y: Fraction) -> QPower:
        """t = q^y via exact root extraction; NotExactPower if irrational."""
        return cls(base, rat_pow(base.q, Fraction(y)), Fraction(y))


def q_int(k: int, q: QBase) -> Fraction:
    """q-integer [k]_q = (1-q^k)/(1-q) = 1 + q + ... + q^(k-1)."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    return (1 - q.q ** k) / (1 - q.q)


def _cached_number(kind: str, n: int, q: Fraction, compute) -> Fraction:
    key = (kind, n, q)
    value = _number_cache.get(key)
    if value is None:
        value = compute()
        with _cache_lock:
            _number_cache[key] = value
    return value


def q_euler_number(n: int, q: QBase) -> Fraction:
    """E_{n,q} = 2 (1/(1-q))^n sum_j C(n,j) (-1)^j / (1+q^j)."""
    if n < 0:
        raise DomainError("n must be nonnegative")

    def compute() -> Fraction:
        qq = q.q
        total = Fraction(0)
        power = Fraction(1)
        for j in range(n + 1):
            term = binom(n, j) / (1 + power)
            total += term if j % 2 == 0 else -term
            power *= qq
        return 2 * total / (1 - qq) ** n

    return _cached_number("plain", n, q.q, compute)


def q_euler_poly(n: int, qp: QPower) -> Fraction:
    """E_{n,q}(x) = 2 (1/(1-q))^n sum_j C(n,j) (-1)^j t^j / (1+q^j),
    with t = q^x carried by `qp`.  At t = 1 this is E_{n,q}."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    qq = qp.base.q
    total = Fraction(0)
    q_power = Fraction(1)
    t_power = Fraction(1)
    for j in range(n + 1):
        term = binom(n, j) * t_power / (1 + q_power)
        total += term if j % 2 == 0 else -term
        q_power *= qq
        t_power *= qp.t
    return 2 * total / (1 - qq) ** n


def q_euler_poly_via_numbers(n: int, qp: QPower) -> Fraction:
    """Binomial form sum_{k<=n} C(n,k) t^k E_{k,q} [x]_q^(n-k), where
    [x]_q = (1-t)/(1-q).  Agrees with q_euler_poly on every exact input;
    the sum is finite because C(n,k) kills all k > n."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    qq = qp.base.q
    bracket_x = (1 - qp.t) / (1 - qq)
    total = Fraction(0)
    t_power = Fraction(1)
    for k in range(n + 1):
        total += binom(n, k) * t_power * q_euler_number(k, qp.base) \
            * bracket_x ** (n - k)
        t_power *= qp.t
    return total


def q_euler_star_number(n: int, q: QBase) -> Fraction:
    """E*_{n,q} = [2]_q (1/(1-q))^n sum_l C(n,l) (-1)^l / (1+q^(l+1)),
    the q^l-weighted variant of E_{n,q}."""
    if n < 0:
        raise DomainError("n must be nonnegative")

    def compute() -> Fraction:
        qq = q.q
        total = Fraction(0)
        power = qq
        for l in range(n + 1):
            term = binom(n, l) / (1 + power)
            total += term if l % 2 == 0 else -term
            power *= qq
        return (1 + qq) * total / (1 - qq) ** n

    return _cached_number("star", n, q.q, compute)


def q_euler_star_poly(n: int, qp: QPower) -> Fraction:
    """E*_{n,q}(x) = [2]_q (1/(1-q))^n sum_j C(n,j) (-1)^j t^j / (1+q^(j+1)).

    The shift by x multiplies the j-th term of the star sum by q^(xj), the
    unique form consistent with the weighted generating function; validated
    through the weighted alternating-sum identity below.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    qq = qp.base.q
    total = Fraction(0)
    q_power = qq
    t_power = Fraction(1)
    for j in range(n + 1):
        term = binom(n, j) * t_power / (1 + q_power)
        total += term if j % 2 == 0 else -term
        q_power *= qq
        t_power *= qp.t
    return (1 + qq) * total / (1 - qq) ** n


def alt_q_power_sum(m: int, n: int, q: QBase) -> Fraction:
    """sum_{l=0}^{n-1} (-1)^l [l]_q^m by direct summation (brute force)."""
    _check_sum_args(m, n)
    qq = q.q
    total = Fraction(0)
    bracket = Fraction(0)
    power = Fraction(1)  # q^l
    for l in range(n):
        term = bracket ** m
        total += term if l % 2 == 0 else -term
        bracket += power
        power *= qq
    return total


def alt_q_power_sum_closed(m: int, n: int, q: QBase) -> Fraction:
    """sum_{l=0}^{n-1} (-1)^l [l]_q^m = (E_{m,q} + (-1)^(n+1) E_{m,q}(n))/2.

    The sign exponent is the summation length n: splitting the alternating
    generating function at l = n carries (-1)^(n+1) onto the shifted tail.
    Must equal alt_q_power_sum bit for bit.
    """
    _check_sum_args(m, n)
    shifted = q_euler_poly(m, QPower.from_integer(q, n))
    if n % 2 == 0:
        shifted = -shifted
    return (q_euler_number(m, q) + shifted) / 2


def weighted_alt_q_power_sum(m: int, n: int, q: QBase) -> Fraction:
    """sum_{l=0}^{n-1} (-1)^l q^l [l]_q^m by direct summation."""
    _check_sum_args(m, n)
    qq = q.q
    total = Fraction(0)
    bracket = Fraction(0)
    power = Fraction(1)  # q^l
    for l in range(n):
        term = power * bracket ** m
        total += term if l % 2 == 0 else -term
        bracket += power
        power *= qq
    return total


def weighted_alt_q_power_sum_closed(m: int, n: int, q: QBase) -> Fraction:
    """sum_{l<n} (-1)^l q^l [l]_q^m
    = (E*_{m,q} + (-1)^(n+1) q^n E*_{m,q}(n)) / [2]_q.

    Both the (-1)^(n+1) exponent and the q^n weight on the shifted term
    come from splitting the weighted generating function at l = n.
    """
    _check_sum_args(m, n)
    qq = q.q
    shifted = qq ** n * q_euler_star_poly(m, QPower.from_integer(q, n))
    if n % 2 == 0:
        shifted = -shifted
    return (q_euler_star_number(m, q) + shifted) / (1 + qq)


def distribution_sum(m: int, f: int, x: int, q: QBase) -> Fraction:
    """[f]_q^m sum_{a<f} (-1)^a E_{m,q^f}((x+a)/f) for odd f, exactly.

    Each inner argument enters through t = (q^f)^((x+a)/f) = q^(x+a), which
    is rational whenever x is an integer.  The distribution relation says
    this equals E_{m,q}(x); the outer exponent is m, matching the degree on
    both sides.
    """
    if m < 0:
        raise DomainError("m must be nonnegative")
    if f < 1 or f % 2 == 0:
        raise DomainError("f must be an odd positive integer")
    base_f = QBase(q.q ** f)
    total = Fraction(0)
    for a in range(f):
        term = q_euler_poly(m, QPower(base_f, q.q ** (x + a), Fraction(x + a, f)))
        total += term if a % 2 == 0 else -term
    return q_int(f, q) ** m * total


def _check_sum_args(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise DomainError("need exponent m >= 1 and length n >= 1")
