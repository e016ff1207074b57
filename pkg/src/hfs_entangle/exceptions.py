"""Exception types raised by the package."""


class DomainError(ValueError):
    """Input outside the domain where a quantity is defined or a solver can bracket it."""


class ConvergenceError(ArithmeticError):
    """An iterative routine hit its iteration cap."""


class NotPSDError(ValueError):
    """A matrix expected to be positive semidefinite has a clearly negative eigenvalue."""
