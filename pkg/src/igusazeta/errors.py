"""Exception hierarchy shared by all igusazeta modules."""


class ZetaError(Exception):
    """Base class for every domain error raised by this package."""


class ZeroPolynomial(ZetaError):
    """The operation is undefined for the zero polynomial."""


class DegreeZero(ZetaError):
    """The operation requires a polynomial of degree at least one."""


class IdenticallyZeroModP(ZetaError):
    """The polynomial vanishes identically modulo p."""


class InconsistentLengths(ZetaError):
    """Observed representative-root lengths violate the ceiling law.

    This signals an internal bug rather than bad input; it is raised
    instead of being silently patched over.
    """


class RegimeViolation(ZetaError):
    """A closed-form root count was requested below the stable precision."""


class DivisionByZero(ZetaError):
    """Division by a rational function with zero numerator, or by a zero denominator."""


class PoleAtZero(ZetaError):
    """A power-series expansion at t = 0 does not exist (denominator vanishes there)."""


class BudgetExceeded(ZetaError):
    """A brute-force enumeration would exceed the configured budget."""


class ParseError(ZetaError):
    """Polynomial syntax error. `position` is a 0-based index into the input string."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class VariableError(ParseError):
    """A symbol other than the variable x appeared in a polynomial string."""
