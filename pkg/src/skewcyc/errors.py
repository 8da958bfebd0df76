"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`SkewCycError`,
so callers can catch the whole family with one clause.
"""

from __future__ import annotations


class SkewCycError(Exception):
    """Base class for all package errors."""


class NonPrime(SkewCycError, ValueError):
    """The characteristic passed to a tower is not prime."""


class DivisibilityViolated(SkewCycError, ValueError):
    """m does not divide r*n."""


class ROutOfRange(SkewCycError, ValueError):
    """r is outside 1..m."""


class NotADivisor(SkewCycError, ValueError):
    """A subfield degree does not divide the degree of the big field."""


class UnsupportedSubfield(SkewCycError, ValueError):
    """Coordinates were requested over a subfield without a stored basis."""


class DivisionByZero(SkewCycError, ZeroDivisionError):
    """Division by the zero polynomial or inversion of zero."""


class BothZero(SkewCycError, ValueError):
    """A gcd of two zero polynomials was requested."""


class ZeroInput(SkewCycError, ValueError):
    """An lcm was requested with a zero operand."""


class ZeroPolynomial(SkewCycError, ValueError):
    """The zero polynomial has every element as a root.

    ``full_space`` carries the whole field as a subspace so callers that
    want the degenerate answer can still use it.
    """

    def __init__(self, message: str, full_space=None):
        super().__init__(message)
        self.full_space = full_space


class MixedScalars(SkewCycError, ValueError):
    """Subspaces over different scalar fields were combined."""


class NotARootSpace(SkewCycError, ValueError):
    """A subspace has no generator with coefficients in F_{q^m}."""


class DependentRows(SkewCycError, ValueError):
    """Evaluation points for a Moore matrix are linearly dependent."""


class TowerMismatch(SkewCycError, ValueError):
    """Objects built over different towers were combined."""


class NotCoprimeBothSides(SkewCycError, ValueError):
    """Generator and check polynomial are not coprime on both sides."""


class EnumerationTooLarge(SkewCycError, ValueError):
    """Brute force would visit more codewords than the cap allows."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"{size} nonzero codewords exceed cap {cap}")
        self.size = size
        self.cap = cap


class CertificateInvalid(SkewCycError, ValueError):
    """A bound certificate failed re-verification."""


class DependentEvaluationPoints(SkewCycError, ValueError):
    """Gabidulin evaluation points are not F_q-independent."""


class ParameterViolation(SkewCycError, ValueError):
    """Parameters fall outside the range where a construction is defined."""


class DependentChain(SkewCycError, ValueError):
    """The Frobenius chain of a rank-BCH designed element is dependent."""


class LatticeTooLarge(SkewCycError, ValueError):
    """Code lattice enumeration exceeded its size cap."""
