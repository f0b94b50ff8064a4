"""Exception types shared across the package."""

from __future__ import annotations


class HarmonicShearError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateOrderError(HarmonicShearError, ValueError):
    """Operation needs a higher truncation order than the operand has."""


class NearSingularDivisionError(HarmonicShearError, ArithmeticError):
    """Series division attempted with a (near-)vanishing constant term."""


class NotSensePreservingError(HarmonicShearError, ValueError):
    """Dilatation has modulus >= 1 at the origin; shear is undefined."""


class DegenerateStripError(HarmonicShearError, ValueError):
    """Strip aperture angle has sin(mu) = 0; the strip target degenerates."""


class OutOfClassError(HarmonicShearError, ValueError):
    """Parameter leaves the admissible class (e.g. |a| > 1 for a dilatation)."""


class VanishingDenominatorError(HarmonicShearError, ArithmeticError):
    """Pointwise formula hit a (near-)zero denominator.

    The offending evaluation point is attached as ``point``.
    """

    def __init__(self, message: str, point: complex):
        super().__init__(message)
        self.point = complex(point)
