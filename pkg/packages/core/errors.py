"""Exception hierarchy shared by all core packages."""
from typing import Optional


class AlgebraError(Exception):
    """Base class for errors raised by the core packages."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class FieldMismatchError(AlgebraError, ValueError):
    """Operands come from different coefficient fields."""


class CharacteristicTwoError(AlgebraError, ValueError):
    """A field of characteristic 2 was requested or supplied."""


class NotPrimeError(AlgebraError, ValueError):
    """A field characteristic is not prime."""


class FieldDivisionByZero(AlgebraError, ZeroDivisionError):
    """Division by (or inversion of) the zero element."""


class RingMismatchError(AlgebraError, ValueError):
    """Polynomials, monomials or points live in different rings."""


class MonomialDivisionError(AlgebraError, ArithmeticError):
    """A monomial does not divide another."""


class BadReductionPrimeError(AlgebraError, ValueError):
    """A rational coefficient has a denominator divisible by the reduction prime."""

    def __init__(self, message: str, p: int):
        self.p = p
        super().__init__(message)


class ResourceCapExceeded(AlgebraError, RuntimeError):
    """A configured step, size or enumeration cap was hit before a decision."""

    def __init__(self, message: str, limit_name: Optional[str] = None, limit: Optional[int] = None):
        self.limit_name = limit_name
        self.limit = limit
        super().__init__(message)


class EnumerationBudgetExceeded(ResourceCapExceeded):
    """A point enumeration would exceed its budget."""


class InconsistentCountsError(AlgebraError, ValueError):
    """Point counts that no variety can have: out of range, shrinking, or a non-integral series."""


class ReconstructionError(AlgebraError, ValueError):
    """No rational function fits the series within the supplied degree bounds."""


class InvalidZetaError(AlgebraError, ValueError):
    """A zeta pair is malformed or predicts impossible counts."""


class UnsupportedCatalogError(AlgebraError, ValueError):
    """No classical formula is available for the requested size."""


class TraceUnavailableError(AlgebraError, ValueError):
    """The requested trace statistic is undefined for this run."""


class VerificationMismatchError(AlgebraError, AssertionError):
    """The two independent formula checks disagreed."""


class ZeroDivisorPolynomialError(AlgebraError, ValueError):
    """The zero polynomial was supplied as a divisor."""
