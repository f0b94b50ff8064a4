"""Pure-numpy implementations of the hot kernels.

Used whenever the compiled extension is unavailable (or disabled through
``HARMONIC_SHEAR_PURE=1``).  Semantics match ``_native`` exactly.
"""

from __future__ import annotations

import numpy as np


def horner_many(coeffs: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Evaluate sum_k coeffs[k] * z**k at every z in ``points``."""
    return np.polynomial.polynomial.polyval(points, coeffs)


def cauchy_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Truncated Cauchy product; output length is min(len(a), len(b))."""
    n = min(a.shape[0], b.shape[0])
    return np.convolve(a[:n], b[:n])[:n]


def series_reciprocal(a: np.ndarray) -> np.ndarray:
    """Coefficients of 1/a, same length as ``a``; a[0] must be nonzero."""
    n = a.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    inv0 = 1.0 / a[0]
    out[0] = inv0
    for k in range(1, n):
        out[k] = -inv0 * np.dot(a[1 : k + 1], out[k - 1 :: -1])
    return out
