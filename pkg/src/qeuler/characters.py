"""Dirichlet characters of odd modulus, generalized q-Euler numbers
attached to a character, and the q-L-function.

A character mod d is stored as an exponent table: residue a maps to None
off the units, and otherwise to an integer e with chi(a) = exp(2*pi*i*e/m),
m the character's order.  Multiplicativity and orthogonality are therefore
exact integer statements; complex values are materialized only at the final
arithmetic step, at the requested precision.  Characters whose order is at
most 2 take values in {0, 1, -1} and get a fully rational path.

Construction of the full group: factor d into odd prime powers, take the
smallest primitive root for each, read discrete logs off the root, and
combine one cyclic character per factor through the CRT decomposition of
the unit group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from mpmath import mp, mpf

from .errors import DomainError
from .exactnum import DEFAULT_PRECISION, GUARD_DIGITS, to_mpf
from .qnumbers import QBase, QPower, q_euler_poly, q_int
from .qzeta import ZetaQuery, partial_zeta, zeta
from .exactnum import ComplexP, RealP


def _factorize(n: int) -> list[tuple[int, int]]:
    factors = []
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 2
    if n > 1:
        factors.append((n, 1))
    return factors


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _primitive_root(p: int, e: int) -> int:
    """Smallest primitive root mod p^e for an odd prime p."""
    pe = p ** e
    phi = pe - pe // p
    checks = _prime_factors(phi)
    for g in range(2, pe):
        if gcd(g, pe) != 1:
            continue
        if all(pow(g, phi // r, pe) != 1 for r in checks):
            return g
    raise DomainError(f"no primitive root mod {pe}")  # unreachable for odd p


@dataclass(frozen=True)
class DirichletCharacter:
    """Root-of-unity valued character mod an odd modulus.

    exponents[a] is None exactly when gcd(a, d) > 1; otherwise
    chi(a) = exp(2*pi*i*exponents[a]/order), and the table satisfies
    exponents[a*b mod d] = (exponents[a] + exponents[b]) mod order.
    """

    modulus: int
    order: int
    exponents: tuple[int | None, ...]

    @property
    def is_principal(self) -> bool:
        return self.order == 1

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    def value_exact(self, a: int) -> Fraction:
        """chi(a) as a Fraction; only real characters (order <= 2) qualify."""
        if not self.is_real:
            raise DomainError("character is not real-valued")
        e = self.exponents[a % self.modulus]
        if e is None:
            return Fraction(0)
        return Fraction(1) if e == 0 else Fraction(-1)

    def value(self, a: int):
        """chi(a) as an mpmath complex at the current working precision."""
        e = self.exponents[a % self.modulus]
        if e is None:
            return mp.mpc(0)
        return mp.expjpi(mpf(2 * e) / self.order)

    def __mul__(self, other: DirichletCharacter) -> DirichletCharacter:
        if self.modulus != other.modulus:
            raise DomainError("characters live mod different moduli")
        common = lcm(self.order, other.order)
        raw = []
        for ea, eb in zip(self.exponents, other.exponents):
            if ea is None:
                raw.append(None)
            else:
                raw.append((ea * (common // self.order)
                            + eb * (common // other.order)) % common)
        return _canonical(self.modulus, common, raw)


def _canonical(modulus: int, span: int,
               raw: list[int | None]) -> DirichletCharacter:
    """Reduce a raw exponent table mod `span` to the character's true order."""
    g = span
    for e in raw:
        if e:
            g = gcd(g, e)
    order = span // g
    exps = tuple(None if e is None else (e // g) % order for e in raw)
    return DirichletCharacter(modulus, order, exps)


@dataclass(frozen=True)
class CharacterGroup:
    """All phi(d) characters mod d, canonically ordered."""

    modulus: int
    characters: tuple[DirichletCharacter, ...]

    def __len__(self) -> int:
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, index: int) -> DirichletCharacter:
        return self.characters[index]

    @property
    def principal(self) -> DirichletCharacter:
        return next(chi for chi in self.characters if chi.is_principal)


def characters_mod(d: int) -> CharacterGroup:
    """The complete character group mod odd d >= 1.

    Ordering is deterministic: prime-power factors ascending, one exponent
    choice per factor, tuples enumerated lexicographically.  d = 1 yields
    the single trivial character with chi(0) = 1, so the generalized
    numbers degenerate to the plain q-Euler numbers.
    """
    if d < 1 or d % 2 == 0:
        raise DomainError("modulus must be an odd positive integer")
    if d == 1:
        return CharacterGroup(1, (DirichletCharacter(1, 1, (0,)),))

    components = []
    for p, e in _factorize(d):
        pe = p ** e
        phi = pe - pe // p
        g = _primitive_root(p, e)
        dlog = {}
        value = 1
        for l in range(phi):
            dlog[value] = l
            value = value * g % pe
        components.append((pe, phi, dlog))
    span = lcm(*(phi for _, phi, _ in components))

    logs: list[tuple[int, ...] | None] = []
    for a in range(d):
        if gcd(a, d) != 1:
            logs.append(None)
        else:
            logs.append(tuple(dlog[a % pe] for pe, _, dlog in components))

    characters = []
    for choice in itertools.product(*(range(phi) for _, phi, _ in components)):
        raw: list[int | None] = []
        for entry in logs:
            if entry is None:
                raw.append(None)
            else:
                raw.append(sum(c * l * (span // phi)
                               for c, l, (_, phi, _)
                               in zip(choice, entry, components)) % span)
        characters.append(_canonical(d, span, raw))
    return CharacterGroup(d, tuple(characters))


def _materialize(coefficients: dict[int, Fraction], order: int,
                 scale: Fraction, precision: int):
    """Turn sum_e coeff_e * exp(2*pi*i*e/order), times scale, into a value:
    exact Fraction when every exponent is real (+1/-1), else mpc."""
    if all(e == 0 or 2 * e == order for e in coefficients):
        total = sum(c if e == 0 else -c for e, c in coefficients.items())
        return scale * total
    with mp.workdps(precision + GUARD_DIGITS):
        total = mp.mpc(0)
        for e in sorted(coefficients):
            total += to_mpf(coefficients[e]) * mp.expjpi(mpf(2 * e) / order)
        return total * to_mpf(scale)


def generalized_q_euler(n: int, chi: DirichletCharacter, q: Fraction,
                        precision: int = DEFAULT_PRECISION):
    """Generalized q-Euler number attached to chi:

        E_{n,chi,q} = [d]_q^n sum_{a<d} chi(a) (-1)^a E_{n,q^d}(a/d),

    each inner polynomial evaluated exactly through t = q^a.  Real
    characters give an exact Fraction; otherwise the exact root-of-unity
    coefficients are materialized into an mpmath complex at `precision`.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    q = Fraction(q)
    if not 0 < q < 1:
        raise DomainError("requires rational q in (0, 1)")
    d = chi.modulus
    base_d = QBase(q ** d)
    coefficients: dict[int, Fraction] = {}
    for a in range(d):
        e = chi.exponents[a]
        if e is None:
            continue
        term = q_euler_poly(n, QPower(base_d, q ** a, Fraction(a, d)))
        if a % 2:
            term = -term
        coefficients[e] = coefficients.get(e, Fraction(0)) + term
    scale = q_int(d, QBase(q)) ** n
    return _materialize(coefficients, chi.order, scale, precision)


def l_function(s: RealP, chi: DirichletCharacter, q: QBase,
               precision: int = DEFAULT_PRECISION):
    """q-L-function l_{E,q}(s, chi) = sum_{n>=1} (-1)^n chi(n) / [n]_q^s,
    computed through the residue-class decomposition

        l_{E,q}(s, chi) = sum_{a=1..F} chi(a) H_q(s, a; F),  F = modulus.

    Residues with gcd(a, F) > 1 drop out through chi.  F = 1 degenerates to
    -zeta_{E,q}(s, 1).  Returns RealP for real characters, ComplexP
    otherwise.
    """
    F = chi.modulus
    if F == 1:
        inner = zeta(ZetaQuery(s, RealP.from_rational(1, precision), q,
                               precision))
        with mp.workdps(precision + GUARD_DIGITS):
            return RealP(-inner.value, precision)
    parts = [(a, partial_zeta(s, a, F, q, precision))
             for a in range(1, F) if chi.exponents[a] is not None]
    with mp.workdps(precision + GUARD_DIGITS):
        if chi.is_real:
            total = mpf(0)
            for a, h in parts:
                total += to_mpf(chi.value_exact(a)) * h.value
            return RealP(total, precision)
        total = mp.mpc(0)
        for a, h in parts:
            total += chi.value(a) * h.value
        return ComplexP(total, precision)


def l_function_special_value(n: int, chi: DirichletCharacter, q: Fraction,
                             precision: int = DEFAULT_PRECISION):
    """Exact l_{E,q}(-n, chi) through the residue decomposition with every
    partial zeta taken in closed form; equals generalized_q_euler(...)/2.

    Supports n = 0 (where each H term is just (-1)^a / 2).  Real characters
    give an exact Fraction, others an mpc at `precision`.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    q = Fraction(q)
    if not 0 < q < 1:
        raise DomainError("requires rational q in (0, 1)")
    F = chi.modulus
    if F == 1:
        if n == 0:
            return Fraction(-1, 2)  # Abel value of sum_{n>=1} (-1)^n
        return -q_euler_poly(n, QPower.from_integer(QBase(q), 1)) / 2
    coefficients: dict[int, Fraction] = {}
    base = QBase(q)
    base_f = QBase(q ** F)
    scale = q_int(F, base) ** n
    for a in range(1, F):
        e = chi.exponents[a]
        if e is None:
            continue
        h = scale * q_euler_poly(n, QPower(base_f, q ** a, Fraction(a, F))) / 2
        if a % 2:
            h = -h
        coefficients[e] = coefficients.get(e, Fraction(0)) + h
    return _materialize(coefficients, chi.order, Fraction(1), precision)
