"""Exception hierarchy shared by the arithmetic kernels and the CLI."""


class InversiveError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameters(InversiveError, ValueError):
    """Modulus or generator parameters outside the supported domain."""


class NotAUnit(InversiveError, ValueError):
    """An inverse (or a unit-only operation) was requested for a non-unit."""


class NotAResidue(InversiveError, ValueError):
    """A square root was requested for a quadratic non-residue."""


class NoFiniteOrder(InversiveError, ArithmeticError):
    """The element does not satisfy x**E == 1 for the group exponent E."""


class WrongCase(InversiveError, ValueError):
    """An operation was called for parameters of the wrong case label."""


class BudgetExceeded(InversiveError, RuntimeError):
    """The state space is larger than the enumeration budget allows."""
