"""Classical Euler and Bernoulli numbers, polynomials, and power sums.

These are the q -> 1 baselines.  Conventions, fixed by the power-sum
formulas they must satisfy:

* E_n is the coefficient of t^n/n! in 2/(e^t + 1), so E_0 = 1, E_1 = -1/2,
  E_2 = 0, E_3 = 1/4, ... (all even-index values past 0 vanish);
* B_n uses B_1 = -1/2, the convention under which
  sum_{l<k} l^n = (1/(n+1)) sum_i C(n+1,i) B_i k^{n+1-i}.

Number tables are memoized; the recurrences run once, exactly, under a
single writer lock, after which reads are lock-free.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import DomainError
from .exactnum import binom

_lock = threading.Lock()
_euler: list[Fraction] = [Fraction(1)]
_bernoulli: list[Fraction] = [Fraction(1)]


def euler_numbers(n_max: int) -> list[Fraction]:
    """E_0..E_n from the recurrence sum_k C(n,k) E_k + E_n = 0 (n >= 1)."""
    if n_max < 0:
        raise DomainError("n must be nonnegative")
    if len(_euler) <= n_max:
        with _lock:
            while len(_euler) <= n_max:
                n = len(_euler)
                acc = sum(binom(n, k) * _euler[k] for k in range(n))
                _euler.append(-acc / 2)
    return _euler[: n_max + 1]


def euler_number(n: int) -> Fraction:
    """The n-th Euler number E_n (coefficient of t^n/n! in 2/(e^t + 1))."""
    return euler_numbers(n)[n]


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """B_0..B_n from sum_{k<=n} C(n+1,k) B_k = 0 (n >= 1), so B_1 = -1/2."""
    if n_max < 0:
        raise DomainError("n must be nonnegative")
    if len(_bernoulli) <= n_max:
        with _lock:
            while len(_bernoulli) <= n_max:
                n = len(_bernoulli)
                acc = sum(binom(n + 1, k) * _bernoulli[k] for k in range(n))
                _bernoulli.append(Fraction(-acc, n + 1))
    return _bernoulli[: n_max + 1]


def bernoulli_number(n: int) -> Fraction:
    """The n-th Bernoulli number B_n, B_1 = -1/2 convention."""
    return bernoulli_numbers(n)[n]


def euler_poly(n: int, x: Fraction | int) -> Fraction:
    """Euler polynomial E_n(x) = sum_k C(n,k) E_k x^(n-k).

    Satisfies E_n(x) + E_n(x+1) = 2 x^n and E_n(0) = E_n.
    """
    x = Fraction(x)
    numbers = euler_numbers(n)
    return sum(binom(n, k) * numbers[k] * x ** (n - k) for k in range(n + 1))


def power_sum(n: int, k: int) -> Fraction:
    """sum_{l=0}^{k-1} l^n by direct summation (the brute-force twin)."""
    _check_positive(n, k)
    return Fraction(sum(l ** n for l in range(k)))


def power_sum_closed(n: int, k: int) -> Fraction:
    """sum_{l=0}^{k-1} l^n via (1/(n+1)) sum_i C(n+1,i) B_i k^(n+1-i)."""
    _check_positive(n, k)
    numbers = bernoulli_numbers(n)
    acc = sum(binom(n + 1, i) * numbers[i] * Fraction(k) ** (n + 1 - i)
              for i in range(n + 1))
    return acc / (n + 1)


def alt_power_sum(m: int, k: int) -> Fraction:
    """sum_{l=0}^{k-1} (-1)^l l^m by direct summation."""
    _check_positive(m, k)
    return Fraction(sum(l ** m if l % 2 == 0 else -(l ** m) for l in range(k)))


def alt_power_sum_closed(m: int, k: int) -> Fraction:
    """sum_{l=0}^{k-1} (-1)^l l^m = (E_m + (-1)^(k+1) E_m(k)) / 2.

    The alternating sign depends on the summation length k: splitting the
    generating function 2 sum (-1)^l e^(lt) at l = k carries a factor
    (-1)^(k+1) onto the shifted tail.  Verified exhaustively against the
    direct sum.
    """
    _check_positive(m, k)
    shifted = euler_poly(m, k)
    if k % 2 == 0:
        shifted = -shifted
    return (euler_number(m) + shifted) / 2


def _check_positive(exponent: int, length: int) -> None:
    if exponent < 1 or length < 1:
        raise DomainError("power sums need a positive exponent and length")
