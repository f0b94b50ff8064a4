"""Construction of planar harmonic mappings by shearing.

A harmonic mapping ``f = h + conj(g)`` is stored as the pair of its analytic
part ``h`` and co-analytic part ``g``.  The shear construction recovers
``(h, g)`` from a prescribed convex analytic target ``T = h + e^{-2i mu} g``
together with an analytic dilatation ``omega = g'/h'``:

    h' = T' / (1 + e^{-2i mu} omega),      g' = omega * h'.

Canonical targets provided here: the right half-plane map ``z/(1-z)``, its
slanted variant ``z/(1 - e^{i alpha} z)``, vertical/slanted strip maps, and
the convex kernel ``phi`` with parameters ``(mu, nu)`` defined by

    phi'(z) = 1 / (1 - 2 z e^{i mu} cos(nu) + z^2 e^{2 i mu}).

The derivative coefficients of ``phi`` satisfy the three-term recurrence of
Chebyshev polynomials of the second kind, ``c_n = e^{i n mu} U_n(cos nu)``,
which is exact and O(N) - no series division involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateStripError, NotSensePreservingError
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    cauchy_product,
    differentiate,
    divide,
    integrate,
    linear_combine,
    reciprocal,
)

_TWO_PI = 2.0 * math.pi

#: CLI identifiers of the named families.
FAMILY_IDENTIFIERS = (
    "half-plane",
    "slanted-half-plane",
    "strip",
    "slanted-strip",
    "phi-kernel",
    "generalized-half-plane",
)


def reduce_angle(theta: float) -> float:
    """Reduce an arbitrary real angle into ``[0, 2*pi)``."""
    return float(theta) % _TWO_PI


@dataclass(frozen=True)
class KernelParams:
    """Angles ``(mu, nu)`` of the convex kernel ``phi``.

    Arbitrary reals are accepted; ``mu`` is reduced mod ``2*pi`` and ``nu``
    is folded into ``[0, pi]`` (the kernel depends on ``nu`` only through
    ``cos nu``).
    """

    mu: float
    nu: float

    def __post_init__(self):
        object.__setattr__(self, "mu", reduce_angle(self.mu))
        nu = reduce_angle(self.nu)
        if nu > math.pi:
            nu = _TWO_PI - nu
        object.__setattr__(self, "nu", nu)


@dataclass(frozen=True, eq=False)
class HarmonicMap:
    """Pair ``(h, g)`` of truncated series representing ``f = h + conj(g)``.

    Both parts share the truncation order and vanish at the origin.  The
    usual normalization ``h'(0) = 1`` holds for every named family; shears
    with ``omega(0) != 0`` scale it to ``1/(1 + e^{-2i mu} omega(0))``, so
    it is reported by :meth:`is_normalized` rather than enforced.
    """

    h: TruncatedSeries
    g: TruncatedSeries

    def __post_init__(self):
        n = min(self.h.truncation_order, self.g.truncation_order)
        object.__setattr__(self, "h", self.h.truncate(n))
        object.__setattr__(self, "g", self.g.truncate(n))
        if abs(self.h[0]) > 1e-12 or abs(self.g[0]) > 1e-12:
            raise ValueError("harmonic map parts must vanish at the origin")

    @property
    def truncation_order(self) -> int:
        return self.h.truncation_order

    def is_normalized(self, tol: float = 1e-9) -> bool:
        """True when ``h'(0) = 1`` within ``tol``."""
        return abs(self.h[1] - 1.0) <= tol

    def in_class_s0h(self, tol: float = 1e-9) -> bool:
        """True when additionally ``g'(0) = 0`` within ``tol``."""
        return self.is_normalized(tol) and abs(self.g[1]) <= tol

    def evaluate(self, z):
        """Pointwise ``h(z) + conj(g(z))``."""
        return self.h(z) + np.conjugate(self.g(z))

    def analytic_combination(self, angle: float) -> TruncatedSeries:
        """The analytic function ``h + e^{-2i angle} g``."""
        return linear_combine(1.0, self.h, np.exp(-2j * angle), self.g)

    def shear_combination(self, gamma: float) -> TruncatedSeries:
        """The analytic function ``h - e^{2i gamma} g`` used by the
        direction-``gamma`` convexity criterion."""
        return linear_combine(1.0, self.h, -np.exp(2j * gamma), self.g)

    def dilatation(self) -> TruncatedSeries:
        return dilatation_series(self)


# -- kernel and targets ------------------------------------------------


def phi_prime_series(params: KernelParams, order: int) -> TruncatedSeries:
    """Derivative of the kernel: coefficients ``e^{i n mu} U_n(cos nu)``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    t = 2.0 * np.exp(1j * params.mu) * math.cos(params.nu)
    e2 = np.exp(2j * params.mu)
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1.0
    if order >= 1:
        c[1] = t
    for n in range(2, order + 1):
        c[n] = t * c[n - 1] - e2 * c[n - 2]
    return TruncatedSeries(c)


def phi_series(params: KernelParams, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The kernel ``phi`` itself, normalized by ``phi(0)=0``, ``phi'(0)=1``.

    ``(mu, nu) = (0, 0)`` gives ``z/(1-z)``; ``(0, pi/2)`` gives ``arctan z``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    return integrate(phi_prime_series(params, order - 1))


def half_plane_target(alpha: float, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``z / (1 - e^{i alpha} z)``, the slanted half-plane target."""
    return TruncatedSeries.geometric(order, ratio=np.exp(1j * reduce_angle(alpha)))


def strip_target(mu: float, alpha: float = 0.0, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Slanted-strip target
    ``(e^{-i alpha} / (2 i sin mu)) * log((1 + z e^{i(alpha+mu)}) / (1 + z e^{i(alpha-mu)}))``.

    Expanded termwise from ``log(1+w) = sum (-1)^{k+1} w^k / k``;
    ``sin(mu) = 0`` is rejected rather than limit-handled (the degenerate
    case is exactly the half-plane family).
    """
    mu = reduce_angle(mu)
    s = math.sin(mu)
    if abs(s) < 1e-9:
        raise DegenerateStripError(f"sin(mu) = {s:.1e}; strip target degenerates")
    alpha = reduce_angle(alpha)
    k = np.arange(1, order + 1, dtype=float)
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    # (-1)^(k+1) e^{i(k-1) alpha} sin(k mu) / (k sin mu)
    coeffs[1:] = (-1.0) ** (k + 1) * np.exp(1j * (k - 1) * alpha) * np.sin(k * mu) / (k * s)
    return TruncatedSeries(coeffs)


def strip_bounds(mu: float) -> tuple[float, float]:
    """Analytic bounds ``((mu - pi)/(2 sin mu), mu/(2 sin mu))`` of the strip."""
    mu = reduce_angle(mu)
    s = math.sin(mu)
    if abs(s) < 1e-9:
        raise DegenerateStripError("strip bounds undefined for sin(mu) = 0")
    return (mu - math.pi) / (2.0 * s), mu / (2.0 * s)


# -- shear construction ------------------------------------------------


def shear_construct(target: TruncatedSeries, mu: float, omega: TruncatedSeries) -> HarmonicMap:
    """Solve ``h + e^{-2i mu} g = target`` with ``g' = omega * h'``.

    ``target`` must be normalized (``T(0)=0``, ``T'(0)=1``) and the
    dilatation must be sense-preserving at the origin, ``|omega(0)| < 1``,
    which keeps the divisor ``1 + e^{-2i mu} omega`` away from zero there.
    """
    if abs(target[0]) > 1e-9 or abs(target[1] - 1.0) > 1e-9:
        raise ValueError("shear target must satisfy T(0) = 0 and T'(0) = 1")
    w0 = abs(omega[0])
    if w0 >= 1.0:
        raise NotSensePreservingError(f"|omega(0)| = {w0:.6f} >= 1")
    tp = differentiate(target)
    # pad omega to the derivative's order so nothing truncates early
    om = TruncatedSeries.from_coefficients(omega.coeffs, order=tp.truncation_order)
    div = np.array(om.coeffs * np.exp(-2j * reduce_angle(mu)))
    div[0] += 1.0
    hp = cauchy_product(tp, reciprocal(TruncatedSeries(div)))
    gp = cauchy_product(om, hp)
    return HarmonicMap(integrate(hp), integrate(gp))


def dilatation_series(f: HarmonicMap) -> TruncatedSeries:
    """``g' / h'`` as a truncated series (requires ``h'(0) != 0``)."""
    return divide(differentiate(f.g), differentiate(f.h))


# -- named families ----------------------------------------------------


def right_half_plane_map(order: int = DEFAULT_ORDER) -> HarmonicMap:
    """The extremal right half-plane map with dilatation ``-z``:

    ``h = (z/(1-z) + z/(1-z)^2)/2``  (coefficients ``(k+1)/2``),
    ``g = (z/(1-z) - z/(1-z)^2)/2``  (coefficients ``(1-k)/2``).
    """
    return generalized_half_plane_map(0.0, order)


def generalized_half_plane_map(mu1: float, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Shear of ``z/(1-z)`` at angle ``mu1`` with dilatation ``-e^{2i mu1} z``.

    Same ``h`` as the right half-plane map; ``g`` picks up the phase
    ``e^{2i mu1}``.
    """
    k = np.arange(order + 1, dtype=float)
    h = (k + 1.0) / 2.0 + 0j
    g = np.exp(2j * reduce_angle(mu1)) * (1.0 - k) / 2.0
    h[0] = 0.0
    g[0] = 0.0
    return HarmonicMap(TruncatedSeries(h), TruncatedSeries(g))


def slanted_half_plane_map(alpha: float, omega: TruncatedSeries, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Shear of the slanted half-plane target at angle ``alpha``."""
    return shear_construct(half_plane_target(alpha, order), alpha, omega)


def slanted_strip_map(mu: float, alpha: float, omega: TruncatedSeries, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Shear of the slanted strip target at angle ``alpha``.

    The strip interpretation (image between the bounds of
    :func:`strip_bounds`) is geometric for ``pi/2 < mu < pi``; see
    :func:`strip_target` for the degenerate angles.
    """
    return shear_construct(strip_target(mu, alpha, order), alpha, omega)
