"""Numeric kernel dispatch: compiled core with a pure-numpy fallback.

The Cython extension ``_native`` carries the hot inner loops (Horner
evaluation on point grids, Cauchy products, the reciprocal recurrence).
It is optional: when the build skipped it, or ``HARMONIC_SHEAR_PURE=1``
is set, the numpy implementations in ``_fallback`` are used instead.
``BACKEND`` records which one is active.
"""

from __future__ import annotations

import os

import numpy as np

from . import _fallback

if os.environ.get("HARMONIC_SHEAR_PURE", "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "fallback"
else:
    try:
        from . import _native as _impl  # type: ignore[attr-defined]

        BACKEND = "native"
    except ImportError:
        _impl = _fallback
        BACKEND = "fallback"


def _as_c128(values) -> np.ndarray:
    return np.ascontiguousarray(values, dtype=np.complex128)


def horner_many(coeffs, points) -> np.ndarray:
    """Evaluate sum_k coeffs[k] * z**k at every z of ``points``."""
    return _impl.horner_many(_as_c128(coeffs), _as_c128(points))


def cauchy_product(a, b) -> np.ndarray:
    """Truncated Cauchy product, length min(len(a), len(b))."""
    return _impl.cauchy_product(_as_c128(a), _as_c128(b))


def series_reciprocal(a) -> np.ndarray:
    """Coefficients of 1/a to the length of ``a``; a[0] must be nonzero."""
    return _impl.series_reciprocal(_as_c128(a))
