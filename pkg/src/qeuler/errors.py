"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class NotExactPower(ArithmeticError):
    """A rational power has no rational value; callers must switch to the
    precision-tracked real path instead of silently approximating."""


class NonConvergence(ArithmeticError):
    """A series summation failed to settle below tolerance within its
    iteration cap; the partial value is withheld rather than returned."""
