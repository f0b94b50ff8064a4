"""Harmonic convolutions and the closed-form dilatation of half-plane convolutions.

Two convolutions act on maps ``f = h + conj(g)``:

* ``f1 * f2 = h1*h2 + conj(g1*g2)`` (termwise on both parts), and
* ``f ~* phi = h*phi + conj(g*phi)`` for an analytic ``phi``,

where ``*`` on analytic series is the Hadamard (termwise coefficient)
product.  Convolving with the right half-plane map has the closed form
``h1 * F = (F + zF')/2`` and ``g1 * F = (F - zF')/2`` for any analytic
``F``, which collapses the dilatation of ``f1 * f2`` - with ``f1`` the
right half-plane map and ``f2`` a shear of the kernel ``phi_{mu,nu}`` with
dilatation ``omega`` - to the rational expression implemented by
:func:`omega1_eval`.  For a monomial dilatation ``omega = a z^n`` the
numerator and denominator become explicit polynomials ``p, q`` of degree
``n + 2`` (:func:`omega1_monomial`), which stay well-behaved even at the
class boundary ``|a| = 1`` where series division is ill-posed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OutOfClassError, VanishingDenominatorError
from .mappings import HarmonicMap
from .series import TruncatedSeries, differentiate, divide, hadamard

#: Pointwise formulas reject denominators smaller than this in modulus.
DENOMINATOR_EPS = 1e-12


def harmonic_convolve(f1: HarmonicMap, f2: HarmonicMap) -> HarmonicMap:
    """Termwise convolution of two harmonic maps (both parts Hadamard)."""
    return HarmonicMap(hadamard(f1.h, f2.h), hadamard(f1.g, f2.g))


def tilde_convolve(f: HarmonicMap, phi: TruncatedSeries) -> HarmonicMap:
    """Convolve both parts of ``f`` with the analytic series ``phi``."""
    return HarmonicMap(hadamard(f.h, phi), hadamard(f.g, phi))


def half_plane_convolve_shortcut(F: TruncatedSeries) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``(h1*F, g1*F) = ((F + zF')/2, (F - zF')/2)`` for normalized ``F``."""
    if abs(F[0]) > 1e-9 or abs(F[1] - 1.0) > 1e-9:
        raise ValueError("shortcut expects a normalized series (F(0)=0, F'(0)=1)")
    zFp = F.z_times_derivative()
    return (
        TruncatedSeries((F.coeffs + zFp.coeffs) / 2.0),
        TruncatedSeries((F.coeffs - zFp.coeffs) / 2.0),
    )


def dilatation_of_convolution(f1: HarmonicMap, f2: HarmonicMap) -> TruncatedSeries:
    """``(g1*g2)' / (h1*h2)'`` as a truncated series (the independent oracle
    for :func:`omega1_eval`)."""
    conv = harmonic_convolve(f1, f2)
    return divide(differentiate(conv.g), differentiate(conv.h))


def omega1_eval(omega: TruncatedSeries, mu: float, nu: float, z):
    """Dilatation of (right half-plane map) * (shear of ``phi_{mu,nu}`` with
    dilatation ``omega``), evaluated pointwise.

    With ``D = 1 - 2 z e^{i mu} cos(nu) + z^2 e^{2 i mu}`` and
    ``u = 1 + omega e^{-2 i mu}``:

        omega1 = -z * (omega' D - omega u D')
                 / (2 u (1 - z e^{i mu} cos nu) - z omega' e^{-2 i mu} D).

    Accepts a scalar or an ndarray of points; raises
    :class:`VanishingDenominatorError` (with the offending point) when the
    denominator drops below ``DENOMINATOR_EPS``.
    """
    pts = np.asarray(z, dtype=np.complex128)
    w = omega(pts)
    if omega.truncation_order == 0:
        wp = np.zeros_like(pts)
    else:
        wp = differentiate(omega)(pts)
    emu = np.exp(1j * mu)
    e2 = emu * emu
    c = np.cos(nu)
    D = 1.0 - 2.0 * pts * emu * c + pts * pts * e2
    Dp = -2.0 * emu * c + 2.0 * pts * e2
    u = 1.0 + w / e2
    num = wp * D - w * u * Dp
    den = 2.0 * u * (1.0 - pts * emu * c) - pts * wp * D / e2
    bad = np.abs(den) <= DENOMINATOR_EPS
    if np.any(bad):
        offender = pts.ravel()[np.flatnonzero(np.atleast_1d(bad))[0]]
        raise VanishingDenominatorError(
            f"dilatation denominator vanishes at z = {offender}", offender
        )
    out = -pts * num / den
    return complex(out) if pts.ndim == 0 else out


@dataclass(frozen=True, eq=False)
class MonomialDilatation:
    """Polynomial pair ``(p, q)`` with ``omega1(z) = z^n p(z) / q(z)`` for the
    dilatation ``omega = a z^n`` (|a| <= 1).

    On the class boundary ``|a| = 1`` the pair is self-inversive up to the
    phase ``a**2``: ``q_k = a^2 * conj(p_{n+2-k})``, hence ``|p| = |q|`` on
    the unit circle and ``|omega1| = 1`` there.
    """

    a: complex
    n: int
    mu: float
    nu: float
    p: np.ndarray = field(repr=False)
    q: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.p.flags.writeable = False
        self.q.flags.writeable = False

    def __call__(self, z):
        """``z^n p(z) / q(z)``; near-zeros of ``q`` yield non-finite values
        rather than exceptions (useful when hunting for |omega1| > 1)."""
        pts = np.asarray(z, dtype=np.complex128)
        pv = np.polynomial.polynomial.polyval(pts, self.p)
        qv = np.polynomial.polynomial.polyval(pts, self.q)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = pts**self.n * pv / qv
        return complex(out) if pts.ndim == 0 else out

    def numerator_root_product_modulus(self) -> float:
        """``|p_0 / p_{n+2}|``: the modulus of the product of the roots of
        ``p``.  Equals ``n/2`` whenever ``|a| = 1``."""
        return float(abs(self.p[0] / self.p[self.n + 2]))


def omega1_monomial(a: complex, n: int, mu: float, nu: float) -> MonomialDilatation:
    """Explicit ``(p, q)`` for ``omega = a z^n``:

        p = a^2 z^{n+2} - a^2 cos(nu) e^{-i mu} z^{n+1}
            + a (1 - n/2) e^{2 i mu} z^2 - a (1 - n) cos(nu) e^{i mu} z - a n/2,
        q = 1 - e^{i mu} cos(nu) z
            + a ((1 - n/2) e^{-2 i mu} z^n - (1 - n) cos(nu) e^{-i mu} z^{n+1}
                 - n z^{n+2} / 2).

    For ``n in {1, 2}`` the generic terms overlap and add up.
    """
    a = complex(a)
    if abs(a) > 1.0 + 1e-12:
        raise OutOfClassError(f"|a| = {abs(a):.6f} > 1 leaves the admissible class")
    if n < 1:
        raise ValueError("monomial degree n must be >= 1")
    c = np.cos(nu)
    emu = np.exp(1j * mu)
    p = np.zeros(n + 3, dtype=np.complex128)
    q = np.zeros(n + 3, dtype=np.complex128)
    p[n + 2] += a * a
    p[n + 1] += -a * a * c / emu
    p[2] += a * (1.0 - n / 2.0) * emu * emu
    p[1] += -a * (1.0 - n) * c * emu
    p[0] += -a * n / 2.0
    q[0] += 1.0
    q[1] += -emu * c
    q[n] += a * (1.0 - n / 2.0) / (emu * emu)
    q[n + 1] += -a * (1.0 - n) * c / emu
    q[n + 2] += -a * n / 2.0
    return MonomialDilatation(a=a, n=int(n), mu=float(mu), nu=float(nu), p=p, q=q)


def generalized_dilatation_params(a: complex, n: int, mu1: float, mu2: float) -> tuple[complex, float]:
    """Reduce the generalized half-plane convolution to the fixed-``f1`` case.

    When ``f1`` is the generalized half-plane map at angle ``mu1`` and
    ``f2`` shears the kernel at ``mu1 + mu2`` with dilatation ``a z^n``,
    the convolution's dilatation is :func:`omega1_eval` /
    :func:`omega1_monomial` with ``a`` replaced by ``a e^{2 i mu1}`` and
    ``mu = mu1 + mu2``.
    """
    return complex(a) * np.exp(2j * mu1), float(mu1 + mu2)
