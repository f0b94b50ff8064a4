"""Backend parity: the compiled kernels must match the numpy fallback."""

import numpy as np
import pytest

from harmonic_shear import _kernels
from harmonic_shear._kernels import _fallback

native = pytest.importorskip(
    "harmonic_shear._kernels._native", reason="compiled extension not built"
)


def random_complex(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def test_backend_reported():
    assert _kernels.BACKEND in ("native", "fallback")


def test_horner_parity():
    rng = np.random.default_rng(30)
    for _ in range(10):
        c = random_complex(rng, int(rng.integers(1, 300)))
        z = 0.95 * random_complex(rng, 64) / np.abs(random_complex(rng, 64)).max()
        a = native.horner_many(np.ascontiguousarray(c), np.ascontiguousarray(z))
        b = _fallback.horner_many(c, z)
        assert np.allclose(a, b, rtol=1e-13, atol=1e-13)


def test_cauchy_parity():
    rng = np.random.default_rng(31)
    for _ in range(10):
        a = random_complex(rng, int(rng.integers(1, 200)))
        b = random_complex(rng, int(rng.integers(1, 200)))
        out_n = native.cauchy_product(np.ascontiguousarray(a), np.ascontiguousarray(b))
        out_f = _fallback.cauchy_product(a, b)
        assert out_n.shape == out_f.shape
        assert np.allclose(out_n, out_f, rtol=1e-12, atol=1e-12)


def test_reciprocal_parity():
    rng = np.random.default_rng(32)
    for _ in range(10):
        a = random_complex(rng, 128) * 0.1
        a[0] = 1.0 + 0.2j
        out_n = native.series_reciprocal(np.ascontiguousarray(a))
        out_f = _fallback.series_reciprocal(a)
        assert np.allclose(out_n, out_f, rtol=1e-12, atol=1e-12)


def test_dispatch_coerces_dtypes():
    out = _kernels.horner_many([0, 1, 1], [0.5])
    assert out.dtype == np.complex128
    assert out[0] == pytest.approx(0.75)
