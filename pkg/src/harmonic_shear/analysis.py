"""Grid-based certificates on the unit disk.

Every check here samples a finite polar grid and reports the extremal value
together with the witness point attaining it.  A passing report is a
*certificate at desk scale* - evidence from sampling, not a proof - and a
failing directional-convexity search is one-sided (no pair found, not a
disproof).

Numerical policy:

* certificate tolerance ``TAU = 1e-7``; strict open-disk inequalities are
  tested as ``>= -TAU`` at the largest sampled radius;
* truncated series of the canonical (rational/logarithmic) families are
  only evaluated up to ``SERIES_RADIUS_CAP = 0.9``.  For unit-size
  coefficients the dropped tail at the default order 256 is below
  ``0.9**257 / (1 - 0.9) ~ 1.7e-11``, far below ``TAU``; closer to the
  boundary the truncation error would dominate the quantity being
  certified.  Closed-form (polynomial) evaluations use the full grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from .convolve import DENOMINATOR_EPS, MonomialDilatation, omega1_monomial
from .mappings import HarmonicMap, reduce_angle
from .series import TruncatedSeries, differentiate

#: Certificate tolerance for inequalities that are strict on the open disk.
TAU = 1e-7

#: Largest radius at which truncated-series evaluation is trusted.
SERIES_RADIUS_CAP = 0.9

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.995)
DEFAULT_ANGLES = 720

#: (mu, nu) lattice used by the directional-convexity search.
DEFAULT_LATTICE = (90, 45)


@dataclass(frozen=True)
class SampleGrid:
    """Polar evaluation grid: ``radii`` x ``n_angles`` equispaced angles."""

    radii: tuple[float, ...]
    n_angles: int = DEFAULT_ANGLES

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        if not radii:
            raise ValueError("grid needs at least one radius")
        if any(not 0.0 < r < 1.0 for r in radii):
            raise ValueError("radii must lie strictly inside (0, 1)")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("radii must be strictly increasing")
        if self.n_angles < 8:
            raise ValueError("need at least 8 angles")
        object.__setattr__(self, "radii", radii)

    @property
    def r_max(self) -> float:
        return self.radii[-1]

    @property
    def size(self) -> int:
        return len(self.radii) * self.n_angles

    @cached_property
    def angles(self) -> np.ndarray:
        return np.linspace(0.0, 2.0 * math.pi, self.n_angles, endpoint=False)

    @cached_property
    def points(self) -> np.ndarray:
        """All grid points as a flat complex array (radius-major)."""
        return (np.asarray(self.radii)[:, None] * np.exp(1j * self.angles)[None, :]).ravel()

    def capped(self, r_max: float = SERIES_RADIUS_CAP) -> "SampleGrid":
        """Sub-grid with radii at most ``r_max`` (for series-backed checks)."""
        kept = tuple(r for r in self.radii if r <= r_max + 1e-12)
        if not kept:
            raise ValueError(f"no grid radii at or below {r_max}")
        return SampleGrid(kept, self.n_angles)


def default_grid() -> SampleGrid:
    return SampleGrid(DEFAULT_RADII, DEFAULT_ANGLES)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a grid certificate."""

    passed: bool
    extremal_value: float
    witness: complex
    samples_checked: int
    criterion: str
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "extremal_value": self.extremal_value,
            "witness": [self.witness.real, self.witness.imag],
            "samples_checked": self.samples_checked,
            "criterion": self.criterion,
            "details": self.details,
        }


def _finite_abs(values: np.ndarray) -> np.ndarray:
    # poles show up as inf/nan; keep them as large finite witnesses
    out = np.abs(values)
    return np.where(np.isfinite(out), out, 1e12)


def sup_modulus(eval_fn: Callable, grid: SampleGrid, criterion: str = "sense-preserving") -> CheckReport:
    """Pass iff ``max |eval_fn(z)| < 1 - TAU`` over the grid."""
    pts = grid.points
    vals = _finite_abs(np.asarray(eval_fn(pts)))
    i = int(np.argmax(vals))
    top = float(vals[i])
    return CheckReport(
        passed=top < 1.0 - TAU,
        extremal_value=top,
        witness=complex(pts[i]),
        samples_checked=pts.size,
        criterion=criterion,
    )


def convexity_check(phi: TruncatedSeries, grid: SampleGrid) -> CheckReport:
    """Pass iff ``min Re(1 + z phi''/phi') > 0`` over the capped grid."""
    pts = grid.capped().points
    d1 = differentiate(phi)
    p1 = d1(pts)
    small = np.abs(p1) <= 1e-10
    if np.any(small):
        j = int(np.flatnonzero(small)[0])
        return CheckReport(
            passed=False,
            extremal_value=float(np.abs(p1[j])),
            witness=complex(pts[j]),
            samples_checked=pts.size,
            criterion="derivative-vanishes",
        )
    vals = (1.0 + pts * differentiate(d1)(pts) / p1).real
    i = int(np.argmin(vals))
    return CheckReport(
        passed=bool(vals[i] > 0.0),
        extremal_value=float(vals[i]),
        witness=complex(pts[i]),
        samples_checked=pts.size,
        criterion="convexity",
    )


def _rz_values(phi_prime_vals: np.ndarray, pts: np.ndarray, gamma: float, mu: float, nu: float) -> np.ndarray:
    """Re part of the directional-convexity expression
    ``e^{i(mu-gamma)} (1 - 2 z e^{-i mu} cos nu + z^2 e^{-2 i mu}) phi'(z)``."""
    em = np.exp(-1j * mu)
    quad = 1.0 - 2.0 * pts * em * np.cos(nu) + pts * pts * em * em
    return (np.exp(1j * (mu - gamma)) * quad * phi_prime_vals).real


def rz_check(phi: TruncatedSeries, gamma: float, mu: float, nu: float, grid: SampleGrid) -> CheckReport:
    """Single-pair directional-convexity inequality (pass iff ``min Re >= -TAU``).

    A pair ``(mu, nu)`` making the expression nonnegative on the whole disk
    certifies that ``phi`` maps onto a domain convex in the direction
    ``gamma``; this check samples the capped grid.
    """
    gamma, mu = reduce_angle(gamma), reduce_angle(mu)
    pts = grid.capped().points
    vals = _rz_values(differentiate(phi)(pts), pts, gamma, mu, nu)
    i = int(np.argmin(vals))
    return CheckReport(
        passed=bool(vals[i] >= -TAU),
        extremal_value=float(vals[i]),
        witness=complex(pts[i]),
        samples_checked=pts.size,
        criterion="direction-convexity-rz",
        details={"gamma": gamma, "mu": mu, "nu": float(nu)},
    )


def _rz_sweep(tp_vals: np.ndarray, pts: np.ndarray, gamma: float, mus: np.ndarray, nus: np.ndarray):
    """Best (min over grid) value of the directional expression over a
    (mu, nu) lattice; the quadratic is affine in cos(nu), so each mu row
    reduces to two real grid vectors."""
    best = (-np.inf, 0.0, 0.0)
    cos_nus = np.cos(nus)
    for m in mus:
        em = np.exp(-1j * m)
        base = np.exp(1j * (m - gamma)) * tp_vals
        u = ((1.0 + pts * pts * em * em) * base).real
        v = ((2.0 * pts * em) * base).real
        mins = np.min(u[None, :] - cos_nus[:, None] * v[None, :], axis=1)
        j = int(np.argmax(mins))
        if mins[j] > best[0]:
            best = (float(mins[j]), float(m), float(nus[j]))
            if best[0] >= 0.0:
                break
    return best


def direction_convexity_certificate(
    f: HarmonicMap,
    gamma: float,
    grid: SampleGrid | None = None,
    lattice: tuple[int, int] = DEFAULT_LATTICE,
) -> CheckReport:
    """Search for a directional-convexity certificate of ``f`` in direction
    ``gamma``.

    Precondition: the dilatation of ``f`` stays inside the unit disk on the
    capped grid (local univalence).  Then the analytic combination
    ``h - e^{2i gamma} g`` is scanned over a ``(mu, nu)`` lattice for a pair
    making the directional expression nonnegative; the lattice is refined
    around the best pair when no member passes outright.  Failure means *no
    certificate found*.
    """
    grid = default_grid() if grid is None else grid
    gamma = reduce_angle(gamma)
    capped = grid.capped()
    pts = capped.points

    sense = sup_modulus(f.dilatation(), capped)
    if not sense.passed:
        return CheckReport(
            passed=False,
            extremal_value=sense.extremal_value,
            witness=sense.witness,
            samples_checked=sense.samples_checked,
            criterion="not-sense-preserving",
            details={"gamma": gamma},
        )

    tp_vals = differentiate(f.shear_combination(gamma))(pts)
    mu_steps, nu_steps = lattice
    mus = np.linspace(0.0, 2.0 * math.pi, mu_steps, endpoint=False)
    nus = np.linspace(0.0, math.pi, nu_steps, endpoint=False)
    best, mu_b, nu_b = _rz_sweep(tp_vals, pts, gamma, mus, nus)

    span_mu, span_nu = 2.0 * math.pi / mu_steps, math.pi / nu_steps
    rounds = 0
    while best < -TAU and rounds < 3:
        mus = mu_b + np.linspace(-span_mu, span_mu, 19)
        nus = np.clip(nu_b + np.linspace(-span_nu, span_nu, 19), 0.0, math.pi)
        cand = _rz_sweep(tp_vals, pts, gamma, mus, nus)
        if cand[0] > best:
            best, mu_b, nu_b = cand
        span_mu /= 9.0
        span_nu /= 9.0
        rounds += 1

    vals = _rz_values(tp_vals, pts, gamma, mu_b, nu_b)
    i = int(np.argmin(vals))
    passed = bool(best >= -TAU)
    return CheckReport(
        passed=passed,
        extremal_value=float(best),
        witness=complex(pts[i]),
        samples_checked=pts.size,
        criterion="direction-convexity" if passed else "no-certificate",
        details={"gamma": gamma, "mu": reduce_angle(mu_b), "nu": float(nu_b)},
    )


def boundary_extrema_count(f: HarmonicMap, gamma: float, r: float, n_samples: int = DEFAULT_ANGLES) -> int:
    """Strict sign changes of the first differences of
    ``theta -> Im(e^{-i gamma} f(r e^{i theta}))`` around the circle.

    Value 2 is the signature of an image convex in the direction ``gamma``
    (the orthogonal projection of the boundary curve is unimodal).  First
    differences below 1e-12 are coalesced with their neighbours so that
    flat boundary arcs do not register spurious extrema.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("radius must lie in (0, 1)")
    if n_samples < 64:
        raise ValueError("need at least 64 samples")
    theta = np.linspace(0.0, 2.0 * math.pi, n_samples, endpoint=False)
    z = r * np.exp(1j * theta)
    heights = (np.exp(-1j * gamma) * f.evaluate(z)).imag
    diffs = np.diff(np.append(heights, heights[0]))
    signs = np.sign(diffs[np.abs(diffs) >= 1e-12])
    if signs.size == 0:
        return 0
    return int(np.count_nonzero(signs != np.roll(signs, 1)))


def theorem_bound(n: int) -> float:
    """Largest admissible ``|a|`` for the monomial dilatation ``a z^n``:
    1 for ``n in {1, 2}`` and ``n - 1 - sqrt(n^2 - 2n)`` for ``n >= 3``."""
    if int(n) != n or n < 1:
        raise ValueError("n must be a positive integer")
    if n <= 2:
        return 1.0
    return float(n - 1 - math.sqrt(n * n - 2 * n))


def bound_expression(a: complex, n: int) -> float:
    """``1 + |a|^2 - |a| (|2 - n| + n)``; nonnegative exactly on the
    admissible range of :func:`theorem_bound`."""
    t = abs(complex(a))
    return float(1.0 + t * t - t * (abs(2.0 - n) + n))


def _boundary_margin(md: MonomialDilatation, n_samples: int) -> tuple[float, complex]:
    """Min of ``|q|^2 - |p|^2`` over the unit circle."""
    circle = np.exp(1j * np.linspace(0.0, 2.0 * math.pi, n_samples, endpoint=False))
    pv = np.polynomial.polynomial.polyval(circle, md.p)
    qv = np.polynomial.polynomial.polyval(circle, md.q)
    gap = np.abs(qv) ** 2 - np.abs(pv) ** 2
    i = int(np.argmin(gap))
    return float(gap[i]), complex(circle[i])


def verify_monomial_theorem(
    a: complex, n: int, mu: float, nu: float, grid: SampleGrid | None = None
) -> CheckReport:
    """Certify local univalence of the half-plane/kernel convolution with
    dilatation ``a z^n`` inside the admissible range.

    Checks, in order: the admissibility expression is nonnegative, ``q``
    does not vanish on the grid, ``|omega1| = |z^n p/q|`` stays below 1 on
    the grid, and ``|q|^2 - |p|^2 >= -1e-9`` on the unit circle (equality
    is attained when ``|a|`` sits exactly on the bound).
    """
    grid = default_grid() if grid is None else grid
    bound = theorem_bound(n)
    if abs(complex(a)) > bound + 1e-12:
        return CheckReport(
            passed=False,
            extremal_value=float(abs(complex(a))),
            witness=complex(a),
            samples_checked=0,
            criterion="out-of-theorem-range",
            details={"n": int(n), "bound": bound},
        )
    md = omega1_monomial(a, n, mu, nu)
    pts = grid.points
    expr = bound_expression(a, n)

    qv = np.abs(np.polynomial.polynomial.polyval(pts, md.q))
    jq = int(np.argmin(qv))
    q_min = float(qv[jq])

    w = _finite_abs(md(pts))
    jw = int(np.argmax(w))
    w_max = float(w[jw])

    margin, margin_witness = _boundary_margin(md, max(2048, grid.n_angles))

    ok = (
        expr >= -1e-12
        and q_min > DENOMINATOR_EPS
        and w_max < 1.0 - TAU
        and margin >= -1e-9
    )
    return CheckReport(
        passed=bool(ok),
        extremal_value=w_max,
        witness=complex(pts[jw]),
        samples_checked=pts.size,
        criterion="monomial-theorem",
        details={
            "bound_expression": expr,
            "q_min": q_min,
            "q_witness": [pts[jq].real, pts[jq].imag],
            "omega1_max": w_max,
            "boundary_margin": margin,
            "boundary_witness": [margin_witness.real, margin_witness.imag],
        },
    )


def counterexample_search(
    n: int, phase: float, mu: float, nu: float, grid: SampleGrid | None = None
) -> CheckReport:
    """Hunt for ``|omega1| > 1`` for the unimodular dilatation
    ``a = e^{i phase}`` with ``n >= 3`` (where local univalence fails).

    A coarse grid pass is followed by three rounds of 10x local polar
    refinement around the best cell.  The report also verifies that the
    modulus of the product of the roots of ``p`` equals ``n/2``
    (``|p_0 / p_{n+2}|``), the obstruction forcing some root of ``p``
    outside the disk.
    """
    if n < 3:
        raise ValueError("counterexamples require n >= 3")
    grid = default_grid() if grid is None else grid
    md = omega1_monomial(np.exp(1j * phase), n, mu, nu)

    pts = grid.points
    vals = _finite_abs(md(pts))
    i = int(np.argmax(vals))
    best, witness = float(vals[i]), complex(pts[i])

    d_r, d_t = 0.05, 2.0 * math.pi / grid.n_angles
    r0, t0 = abs(witness), math.atan2(witness.imag, witness.real)
    for _ in range(3):
        rr = np.clip(np.linspace(r0 - d_r, r0 + d_r, 21), 1e-9, 1.0 - 1e-9)
        tt = np.linspace(t0 - d_t, t0 + d_t, 21)
        local = (rr[:, None] * np.exp(1j * tt)[None, :]).ravel()
        lv = _finite_abs(md(local))
        j = int(np.argmax(lv))
        if lv[j] > best:
            best, witness = float(lv[j]), complex(local[j])
            r0, t0 = abs(witness), math.atan2(witness.imag, witness.real)
        d_r /= 10.0
        d_t /= 10.0

    ratio = md.numerator_root_product_modulus()
    ratio_ok = abs(ratio - n / 2.0) <= 1e-12
    found = best > 1.0 + TAU
    return CheckReport(
        passed=bool(found and ratio_ok),
        extremal_value=best,
        witness=witness,
        samples_checked=pts.size,
        criterion="counterexample",
        details={
            "root_product_modulus": ratio,
            "expected_root_product": n / 2.0,
            "witness_found": bool(found),
        },
    )
