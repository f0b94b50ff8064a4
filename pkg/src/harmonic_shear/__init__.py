"""Planar harmonic mappings: shear construction, Hadamard convolution, and
numerical certificates of local univalence and directional convexity."""

from ._kernels import BACKEND
from .analysis import (
    CheckReport,
    SampleGrid,
    bound_expression,
    boundary_extrema_count,
    convexity_check,
    counterexample_search,
    default_grid,
    direction_convexity_certificate,
    rz_check,
    sup_modulus,
    theorem_bound,
    verify_monomial_theorem,
)
from .convolve import (
    MonomialDilatation,
    dilatation_of_convolution,
    generalized_dilatation_params,
    half_plane_convolve_shortcut,
    harmonic_convolve,
    omega1_eval,
    omega1_monomial,
    tilde_convolve,
)
from .errors import (
    DegenerateOrderError,
    DegenerateStripError,
    HarmonicShearError,
    NearSingularDivisionError,
    NotSensePreservingError,
    OutOfClassError,
    VanishingDenominatorError,
)
from .mappings import (
    HarmonicMap,
    KernelParams,
    dilatation_series,
    generalized_half_plane_map,
    half_plane_target,
    phi_series,
    right_half_plane_map,
    shear_construct,
    slanted_half_plane_map,
    slanted_strip_map,
    strip_bounds,
    strip_target,
)
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    cauchy_product,
    differentiate,
    divide,
    evaluate,
    hadamard,
    integrate,
    linear_combine,
    reciprocal,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CheckReport",
    "DEFAULT_ORDER",
    "DegenerateOrderError",
    "DegenerateStripError",
    "HarmonicMap",
    "HarmonicShearError",
    "KernelParams",
    "MonomialDilatation",
    "NearSingularDivisionError",
    "NotSensePreservingError",
    "OutOfClassError",
    "SampleGrid",
    "TruncatedSeries",
    "VanishingDenominatorError",
    "bound_expression",
    "boundary_extrema_count",
    "cauchy_product",
    "convexity_check",
    "counterexample_search",
    "default_grid",
    "differentiate",
    "dilatation_of_convolution",
    "dilatation_series",
    "direction_convexity_certificate",
    "divide",
    "evaluate",
    "generalized_dilatation_params",
    "generalized_half_plane_map",
    "hadamard",
    "half_plane_convolve_shortcut",
    "half_plane_target",
    "harmonic_convolve",
    "integrate",
    "linear_combine",
    "omega1_eval",
    "omega1_monomial",
    "phi_series",
    "reciprocal",
    "right_half_plane_map",
    "rz_check",
    "shear_construct",
    "slanted_half_plane_map",
    "slanted_strip_map",
    "strip_bounds",
    "strip_target",
    "sup_modulus",
    "theorem_bound",
    "tilde_convolve",
    "verify_monomial_theorem",
]
