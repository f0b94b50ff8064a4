"""Truncated Taylor series over complex coefficients.

A :class:`TruncatedSeries` holds the coefficients ``c0..cN`` of an analytic
function on the unit disk, truncated at order ``N``.  Everything downstream
(shear constructions, convolutions, grid certificates) reduces to the
operations here: linear combination, Cauchy product, termwise (Hadamard)
product, differentiation, integration from the origin, reciprocal, and
pointwise evaluation.

Conventions:

* values are immutable and all operations are pure, so series can be shared
  freely between threads;
* when two operands carry different truncation orders the result is
  truncated to the smaller one (truncation is an information floor);
* the default working order is :data:`DEFAULT_ORDER`.  The canonical
  families in this package are rational or logarithmic with singularities
  on ``|z| = 1``, so truncated evaluation is only trusted well inside the
  disk (see ``analysis.SERIES_RADIUS_CAP``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DegenerateOrderError, NearSingularDivisionError

#: Default truncation order for constructed families.
DEFAULT_ORDER = 256

#: Reciprocal refuses constant terms smaller than this in modulus.
RECIPROCAL_EPS = 1e-8


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Degree-``N`` truncated Taylor expansion ``c0 + c1 z + ... + cN z^N``."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=np.complex128, copy=True)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise ValueError("coefficients must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_coefficients(cls, values: Iterable[complex], order: int | None = None) -> "TruncatedSeries":
        """Build a series from ``values``, padding with zeros up to ``order``."""
        arr = np.asarray(list(values), dtype=np.complex128)
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be >= 0")
            out = np.zeros(order + 1, dtype=np.complex128)
            out[: min(arr.size, order + 1)] = arr[: order + 1]
            arr = out
        return cls(arr)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def monomial(cls, exponent: int, coefficient: complex = 1.0, order: int | None = None) -> "TruncatedSeries":
        """``coefficient * z**exponent`` at truncation ``order`` (default: exponent)."""
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        order = exponent if order is None else order
        out = np.zeros(order + 1, dtype=np.complex128)
        if exponent <= order:
            out[exponent] = coefficient
        return cls(out)

    @classmethod
    def geometric(cls, order: int, ratio: complex = 1.0) -> "TruncatedSeries":
        """Truncation of ``z / (1 - ratio*z)``: coefficients ``ratio**(k-1)`` for k >= 1.

        With ``ratio=1`` this is the termwise-product identity on series
        with vanishing constant term.
        """
        out = np.zeros(order + 1, dtype=np.complex128)
        out[1:] = np.power(complex(ratio), np.arange(order, dtype=float))
        return cls(out)

    # -- basic queries -------------------------------------------------

    @property
    def truncation_order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, k: int) -> complex:
        return complex(self.coeffs[k])

    def __repr__(self) -> str:
        head = np.array2string(self.coeffs[:4], precision=6, separator=", ")
        return f"TruncatedSeries(order={self.truncation_order}, coeffs={head}...)"

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above ``order`` (never pads)."""
        if order >= self.truncation_order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1])

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return linear_combine(1.0, self, 1.0, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return linear_combine(1.0, self, -1.0, other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return cauchy_product(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1.0)

    def scale(self, scalar: complex) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs * complex(scalar))

    def hadamard(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return hadamard(self, other)

    def differentiate(self) -> "TruncatedSeries":
        return differentiate(self)

    def integrate(self) -> "TruncatedSeries":
        return integrate(self)

    def reciprocal(self) -> "TruncatedSeries":
        return reciprocal(self)

    def z_times_derivative(self) -> "TruncatedSeries":
        """``z * f'(z)`` at the same truncation order (coefficients ``k*ck``)."""
        return TruncatedSeries(self.coeffs * np.arange(self.coeffs.size))

    def __call__(self, z):
        return evaluate(self, z)


def _common(f: TruncatedSeries, g: TruncatedSeries) -> tuple[np.ndarray, np.ndarray]:
    n = min(len(f), len(g))
    return f.coeffs[:n], g.coeffs[:n]


def linear_combine(alpha: complex, f: TruncatedSeries, beta: complex, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise ``alpha*f + beta*g`` at the shared truncation order."""
    a, b = _common(f, g)
    return TruncatedSeries(complex(alpha) * a + complex(beta) * b)


def cauchy_product(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Product series: ``c_k = sum_j f_j g_{k-j}``, truncated at the shared order."""
    a, b = _common(f, g)
    return TruncatedSeries(_kernels.cauchy_product(a, b))


def hadamard(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Termwise coefficient product ``c_k = f_k * g_k`` (Hadamard convolution)."""
    a, b = _common(f, g)
    return TruncatedSeries(a * b)


def differentiate(f: TruncatedSeries) -> TruncatedSeries:
    """Term-by-term derivative; the order drops by one."""
    if f.truncation_order < 1:
        raise DegenerateOrderError("cannot differentiate a series of order 0")
    return TruncatedSeries(f.coeffs[1:] * np.arange(1, f.coeffs.size))


def integrate(f: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative vanishing at the origin; the order grows by one."""
    out = np.zeros(f.coeffs.size + 1, dtype=np.complex128)
    out[1:] = f.coeffs / np.arange(1, f.coeffs.size + 1)
    return TruncatedSeries(out)


def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """Series ``r`` with ``f * r = 1`` up to the truncation order.

    Requires ``|f(0)| > RECIPROCAL_EPS``; the triangular recurrence is exact
    in exact arithmetic and loses roughly one digit per decade of
    coefficient growth otherwise.
    """
    c0 = abs(complex(f.coeffs[0]))
    if c0 <= RECIPROCAL_EPS:
        raise NearSingularDivisionError(
            f"constant term {c0:.3e} below {RECIPROCAL_EPS:.0e}; reciprocal is ill-posed"
        )
    return TruncatedSeries(_kernels.series_reciprocal(f.coeffs))


def divide(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Quotient series ``f / g`` at the shared truncation order."""
    a, b = _common(f, g)
    return cauchy_product(TruncatedSeries(a), reciprocal(TruncatedSeries(b)))


def evaluate(f: TruncatedSeries, z):
    """Horner evaluation of ``f`` at ``z`` (scalar or ndarray of points)."""
    pts = np.asarray(z, dtype=np.complex128)
    values = _kernels.horner_many(f.coeffs, pts.ravel())
    if pts.ndim == 0:
        return complex(values[0])
    return values.reshape(pts.shape)


def coefficients_close(f: TruncatedSeries, g: TruncatedSeries, tol: float = 0.0) -> bool:
    """True when the shared-order coefficients agree to within ``tol``."""
    a, b = _common(f, g)
    return bool(np.max(np.abs(a - b)) <= tol) if a.size else True
