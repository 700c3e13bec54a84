"""Exception types raised by the library."""


class CalogeroError(Exception):
    """Base class for all library errors."""


class SingularParameter(CalogeroError, ZeroDivisionError):
    """A coefficient denominator vanishes at the chosen couplings.

    ``pairing`` names the offending quantity, e.g. ``"<alpha_1, mu + a rho(mu)>"``.
    """

    def __init__(self, message, pairing=None):
        super().__init__(message)
        self.pairing = pairing


class PoleEncountered(CalogeroError, ZeroDivisionError):
    """A Gamma-function ratio or rational identity hits a pole."""


class InvalidSector(CalogeroError, ValueError):
    """A label lies outside the sublattice required for a symmetry sector."""


class DegenerateEigenvalue(CalogeroError, ArithmeticError):
    """Back-substitution met a zero pivot (non-generic couplings)."""


class NonIntegerCoupling(CalogeroError, ValueError):
    """Quadrature needs integer a and b."""


class IrrationalExponent(CalogeroError, ValueError):
    """A power q**x with non-integer x was requested."""


class BoundExceeded(CalogeroError, ValueError):
    """An enumeration would exceed its configured size bound."""
