"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of the operation."""


class NotDivisible(ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""


class NotInvertible(ArithmeticError):
    """The element shares a factor with the modulus and has no inverse."""
