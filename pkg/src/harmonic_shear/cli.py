"""Command-line surface: construct families, convolve, certify, export.

Verbs: ``gen | convolve | check | verify | export-boundary``.

Map documents are JSON (schema_version "1") holding the coefficient lists
of both parts, so they round-trip bit-exactly; boundary curves are CSV.
Exit codes are a stable contract: 0 pass, 1 certificate fail, 2 usage,
3 evaluation error, 4 I/O.  ``HARMONIC_SHEAR_GRID=r1,r2,...;M`` overrides
the default certificate grid.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import analysis, convolve, mappings
from .errors import HarmonicShearError
from .series import DEFAULT_ORDER, TruncatedSeries

SCHEMA_VERSION = "1"

EXIT_PASS = 0
EXIT_CERTIFICATE_FAIL = 1
EXIT_USAGE = 2
EXIT_EVALUATION = 3
EXIT_IO = 4

GRID_ENV_VAR = "HARMONIC_SHEAR_GRID"


# -- documents ----------------------------------------------------------


def _pairs(series: TruncatedSeries) -> list[list[float]]:
    return [[c.real, c.imag] for c in series.coeffs]


def _series(pairs: list[list[float]]) -> TruncatedSeries:
    return TruncatedSeries(np.array([complex(re, im) for re, im in pairs]))


@dataclass
class MapDocument:
    """JSON-serializable harmonic map: family tag, parameters, coefficients."""

    family: str
    params: dict
    truncation: int
    h: list[list[float]]
    g: list[list[float]]
    schema_version: str = SCHEMA_VERSION

    @classmethod
    def from_map(cls, family: str, params: dict, fmap: mappings.HarmonicMap) -> "MapDocument":
        return cls(
            family=family,
            params=params,
            truncation=fmap.truncation_order,
            h=_pairs(fmap.h),
            g=_pairs(fmap.g),
        )

    def to_map(self) -> mappings.HarmonicMap:
        return mappings.HarmonicMap(_series(self.h), _series(self.g))

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "family": self.family,
            "params": self.params,
            "truncation": self.truncation,
            "h": self.h,
            "g": self.g,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MapDocument":
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
        if len(data["h"]) != len(data["g"]):
            raise ValueError("h and g coefficient lists must have equal length")
        return cls(
            family=data["family"],
            params=data.get("params", {}),
            truncation=int(data["truncation"]),
            h=data["h"],
            g=data["g"],
        )


@dataclass
class CurveExport:
    """Sampled boundary curve at fixed radius: rows (theta, re, im)."""

    r: float
    rows: list[tuple[float, float, float]] = field(default_factory=list)

    def write_csv(self, stream) -> None:
        writer = csv.writer(stream)
        writer.writerow(["theta", "re", "im"])
        writer.writerows(self.rows)


# -- flag parsing helpers ------------------------------------------------


def parse_complex(text: str) -> complex:
    """Parse ``re``, ``re,im`` or the polar literal ``r∠theta``."""
    text = text.strip()
    for sep in ("∠", "<"):
        if sep in text:
            r, _, t = text.partition(sep)
            return float(r) * complex(math.cos(float(t)), math.sin(float(t)))
    if "," in text:
        re_part, _, im_part = text.partition(",")
        return complex(float(re_part), float(im_part))
    return complex(float(text), 0.0)


def parse_omega(text: str, order: int) -> tuple[TruncatedSeries, dict]:
    """Parse a monomial dilatation flag ``a=<complex>[,n=<int>]``."""
    text = text.strip()
    if not text.startswith("a="):
        raise ValueError(f"dilatation flag must look like 'a=0.5,n=2', got {text!r}")
    body = text[2:]
    if ",n=" in body:
        a_text, _, n_text = body.partition(",n=")
        n = int(n_text)
    else:
        a_text, n = body, 1
    a = parse_complex(a_text)
    if n < 1:
        raise ValueError("dilatation exponent n must be >= 1")
    if abs(a) > 1.0:
        raise ValueError(f"|a| = {abs(a):.6f} > 1 is not a valid dilatation")
    return TruncatedSeries.monomial(n, a, order=order), {"a": [a.real, a.imag], "n": n}


def build_grid(args) -> tuple[analysis.SampleGrid, bool]:
    """Grid from flags, else the env override, else the default.

    Returns (grid, user_specified).
    """
    radii = getattr(args, "radii", None)
    angles = getattr(args, "angles", None)
    if radii or angles:
        r = tuple(float(x) for x in radii.split(",")) if radii else analysis.DEFAULT_RADII
        m = int(angles) if angles else analysis.DEFAULT_ANGLES
        return analysis.SampleGrid(r, m), True
    env = os.environ.get(GRID_ENV_VAR)
    if env:
        r_text, _, m_text = env.partition(";")
        r = tuple(float(x) for x in r_text.split(",") if x)
        m = int(m_text) if m_text else analysis.DEFAULT_ANGLES
        return analysis.SampleGrid(r, m), True
    return analysis.default_grid(), False


def _write_json(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_document(path: str) -> MapDocument:
    with open(path) as fh:
        return MapDocument.from_dict(json.load(fh))


# -- gen -----------------------------------------------------------------


def cmd_gen(args, parser) -> int:
    order = args.N
    omega, omega_params = parse_omega(args.omega, order) if args.omega else (
        TruncatedSeries.zero(order),
        {"a": [0.0, 0.0], "n": 1},
    )
    family = args.family
    params: dict = {}
    if family == "half-plane":
        fmap = mappings.right_half_plane_map(order)
    elif family == "generalized-half-plane":
        if args.mu1 is None:
            parser.error("--mu1 is required for generalized-half-plane")
        params = {"mu1": args.mu1}
        fmap = mappings.generalized_half_plane_map(args.mu1, order)
    elif family == "slanted-half-plane":
        if args.alpha is None:
            parser.error("--alpha is required for slanted-half-plane")
        params = {"alpha": args.alpha, "omega": omega_params}
        fmap = mappings.slanted_half_plane_map(args.alpha, omega, order)
    elif family == "strip":
        if args.mu is None:
            parser.error("--mu is required for strip")
        params = {"mu": args.mu, "alpha": 0.0, "omega": omega_params}
        fmap = mappings.slanted_strip_map(args.mu, 0.0, omega, order)
    elif family == "slanted-strip":
        if args.mu is None or args.alpha is None:
            parser.error("--mu and --alpha are required for slanted-strip")
        params = {"mu": args.mu, "alpha": args.alpha, "omega": omega_params}
        fmap = mappings.slanted_strip_map(args.mu, args.alpha, omega, order)
    elif family == "phi-kernel":
        if args.mu is None or args.nu is None:
            parser.error("--mu and --nu are required for phi-kernel")
        params = {"mu": args.mu, "nu": args.nu}
        phi = mappings.phi_series(mappings.KernelParams(args.mu, args.nu), order)
        fmap = mappings.HarmonicMap(phi, TruncatedSeries.zero(order))
    else:  # pragma: no cover - argparse choices guard this
        parser.error(f"unknown family {family!r}")

    doc = MapDocument.from_map(family, params, fmap)
    _write_json(doc.to_dict(), args.out)
    print(
        "normalization: h(0)={:.1e} g(0)={:.1e} h'(0)-1={:.1e} g'(0)={:.3e}".format(
            abs(fmap.h[0]), abs(fmap.g[0]), abs(fmap.h[1] - 1.0), abs(fmap.g[1])
        ),
        file=sys.stderr,
    )
    return EXIT_PASS


# -- convolve -------------------------------------------------------------


def cmd_convolve(args, parser) -> int:
    d1, d2 = _load_document(args.doc1), _load_document(args.doc2)
    if d1.truncation != d2.truncation:
        print(
            f"warning: truncation mismatch ({d1.truncation} vs {d2.truncation}); "
            "truncating to the smaller order",
            file=sys.stderr,
        )
    fmap = convolve.harmonic_convolve(d1.to_map(), d2.to_map())
    doc = MapDocument.from_map(
        "custom",
        {"operation": "convolve", "inputs": [d1.family, d2.family]},
        fmap,
    )
    _write_json(doc.to_dict(), args.out)
    return EXIT_PASS


# -- check ----------------------------------------------------------------


def cmd_check(args, parser) -> int:
    doc = _load_document(args.doc)
    fmap = doc.to_map()
    grid, user_grid = build_grid(args)
    if args.criterion == "sense":
        used = grid if user_grid else grid.capped()
        report = analysis.sup_modulus(fmap.dilatation(), used)
    elif args.criterion == "convex":
        if max(abs(complex(re, im)) for re, im in doc.g) > 1e-12:
            parser.error("criterion 'convex' applies to analytic documents (g = 0); "
                         "use 'direction' certificates for genuinely harmonic maps")
        report = analysis.convexity_check(fmap.h, grid)
    elif args.criterion == "direction":
        if args.gamma is None:
            parser.error("--gamma is required for criterion 'direction'")
        report = analysis.direction_convexity_certificate(fmap, args.gamma, grid)
    elif args.criterion == "boundary":
        if args.gamma is None or args.r is None:
            parser.error("--gamma and --r are required for criterion 'boundary'")
        count = analysis.boundary_extrema_count(fmap, args.gamma, args.r, grid.n_angles)
        payload = {
            "criterion": "boundary-extrema",
            "passed": count == 2,
            "count": count,
            "gamma": args.gamma,
            "r": args.r,
            "samples_checked": grid.n_angles,
        }
        print(json.dumps(payload, indent=2))
        return EXIT_PASS if count == 2 else EXIT_CERTIFICATE_FAIL
    else:  # pragma: no cover
        parser.error(f"unknown criterion {args.criterion!r}")
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_PASS if report.passed else EXIT_CERTIFICATE_FAIL


# -- verify ---------------------------------------------------------------


def _suite_monomial(args, grid) -> list[dict]:
    a = parse_complex(args.a)
    report = analysis.verify_monomial_theorem(a, args.n, args.mu, args.nu, grid)
    case = {"n": args.n, "a": [a.real, a.imag], "mu": args.mu, "nu": args.nu}
    case.update(report.to_dict())
    return [case]


def _suite_counterexample(args, grid) -> list[dict]:
    report = analysis.counterexample_search(args.n, args.phase, args.mu, args.nu, grid)
    case = {"n": args.n, "phase": args.phase, "mu": args.mu, "nu": args.nu}
    case.update(report.to_dict())
    return [case]


def _suite_generalized_f1(args, grid) -> list[dict]:
    a = parse_complex(args.a)
    a_eff, mu = convolve.generalized_dilatation_params(a, args.n, args.mu1, args.mu2)
    bound_case = {"check": "dilatation-bound", "n": args.n, "a": [a.real, a.imag]}
    bound_case.update(analysis.verify_monomial_theorem(a_eff, args.n, mu, args.nu, grid).to_dict())

    order = args.N
    f1 = mappings.generalized_half_plane_map(args.mu1, order)
    omega = TruncatedSeries.monomial(args.n, a, order=order)
    phi = mappings.phi_series(mappings.KernelParams(mu, args.nu), order)
    f2 = mappings.shear_construct(phi, args.mu2, omega)
    conv = convolve.harmonic_convolve(f1, f2)
    count = analysis.boundary_extrema_count(conv, -mu, 0.95, grid.n_angles)
    sense = analysis.sup_modulus(conv.dilatation(), grid.capped())
    direction_case = {
        "check": "direction-signature",
        "gamma": -mu,
        "extrema_count": count,
        "sense_preserving": sense.passed,
        "passed": bool(count == 2 and sense.passed),
    }
    return [bound_case, direction_case]


def _suite_phi_convex(args, grid) -> list[dict]:
    rng = np.random.default_rng(args.seed)
    cases = []
    for _ in range(args.samples):
        mu = float(rng.uniform(0.0, 2.0 * math.pi))
        nu = float(rng.uniform(0.0, math.pi))
        phi = mappings.phi_series(mappings.KernelParams(mu, nu), args.N)
        case = {"mu": mu, "nu": nu}
        case.update(analysis.convexity_check(phi, grid).to_dict())
        cases.append(case)
    return cases


def _suite_tilde_convex(args, grid) -> list[dict]:
    a = parse_complex(args.a)
    order = args.N
    omega = TruncatedSeries.monomial(1, a, order=order)
    f = mappings.shear_construct(TruncatedSeries.geometric(order), args.mu, omega)
    phi = mappings.phi_series(mappings.KernelParams(args.mu, args.nu), order)
    conv = convolve.tilde_convolve(f, phi)
    cases = []
    for k in range(args.directions):
        gamma = k * math.pi / args.directions
        case = {"gamma": gamma}
        case.update(analysis.direction_convexity_certificate(conv, gamma, grid).to_dict())
        cases.append(case)
    return cases


_SUITES = {
    "monomial-theorem": _suite_monomial,
    "counterexample": _suite_counterexample,
    "generalized-f1": _suite_generalized_f1,
    "phi-convex": _suite_phi_convex,
    "tilde-convex": _suite_tilde_convex,
}


def cmd_verify(args, parser) -> int:
    grid, _ = build_grid(args)
    cases = _SUITES[args.suite](args, grid)
    passed = all(c["passed"] for c in cases)
    print(json.dumps({"suite": args.suite, "passed": passed, "cases": cases}, indent=2))
    return EXIT_PASS if passed else EXIT_CERTIFICATE_FAIL


# -- export-boundary -------------------------------------------------------


def cmd_export_boundary(args, parser) -> int:
    doc = _load_document(args.doc)
    if not 0.0 < args.r < 1.0:
        parser.error("--r must lie in (0, 1)")
    fmap = doc.to_map()
    theta = np.linspace(0.0, 2.0 * math.pi, args.samples, endpoint=False)
    values = fmap.evaluate(args.r * np.exp(1j * theta))
    export = CurveExport(
        r=args.r,
        rows=[(float(t), float(w.real), float(w.imag)) for t, w in zip(theta, values)],
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            export.write_csv(fh)
    else:
        export.write_csv(sys.stdout)
    if doc.family in ("strip", "slanted-strip"):
        lo, hi = mappings.strip_bounds(doc.params["mu"])
        print(f"strip bounds: ({lo:.6f}, {hi:.6f})", file=sys.stderr)
    return EXIT_PASS


# -- parser ----------------------------------------------------------------

DEFAULT_ANGLES_EXPORT = analysis.DEFAULT_ANGLES


def _add_grid_flags(sub) -> None:
    sub.add_argument("--radii", help="comma-separated grid radii in (0,1)")
    sub.add_argument("--angles", type=int, help="number of equispaced angles")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-shear",
        description="Shear construction, convolution and univalence/convexity "
        "certificates for planar harmonic mappings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct a named family and write its document")
    gen.add_argument("--family", required=True, choices=mappings.FAMILY_IDENTIFIERS)
    gen.add_argument("--mu", type=float, help="kernel/strip angle (radians)")
    gen.add_argument("--nu", type=float, help="kernel angle (radians)")
    gen.add_argument("--alpha", type=float, help="slant angle (radians)")
    gen.add_argument("--mu1", type=float, help="generalized half-plane angle (radians)")
    gen.add_argument("--omega", help="monomial dilatation 'a=<complex>,n=<int>'")
    gen.add_argument("--N", type=int, default=DEFAULT_ORDER, help="truncation order")
    gen.add_argument("--out", help="output path (default: stdout)")

    conv = sub.add_parser("convolve", help="termwise-convolve two map documents")
    conv.add_argument("doc1")
    conv.add_argument("doc2")
    conv.add_argument("--out", help="output path (default: stdout)")

    check = sub.add_parser("check", help="run a certificate on a map document")
    check.add_argument("doc")
    check.add_argument("--criterion", required=True, choices=("sense", "convex", "direction", "boundary"))
    check.add_argument("--gamma", type=float, help="direction angle (radians)")
    check.add_argument("--r", type=float, help="circle radius for the boundary criterion")
    _add_grid_flags(check)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(_SUITES))
    verify.add_argument("--n", type=int, default=1, help="monomial dilatation degree")
    verify.add_argument("--a", default="0", help="dilatation coefficient ('re[,im]' or 'r∠theta')")
    verify.add_argument("--mu", type=float, default=0.0)
    verify.add_argument("--nu", type=float, default=0.0)
    verify.add_argument("--mu1", type=float, default=0.0)
    verify.add_argument("--mu2", type=float, default=0.0)
    verify.add_argument("--phase", type=float, default=0.0)
    verify.add_argument("--samples", type=int, default=20)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--directions", type=int, default=36)
    verify.add_argument("--N", type=int, default=DEFAULT_ORDER)
    _add_grid_flags(verify)

    export = sub.add_parser("export-boundary", help="sample the image of a circle to CSV")
    export.add_argument("doc")
    export.add_argument("--r", type=float, required=True)
    export.add_argument("--samples", type=int, default=DEFAULT_ANGLES_EXPORT)
    export.add_argument("--out", help="output path (default: stdout)")

    return parser


_COMMANDS = {
    "gen": cmd_gen,
    "convolve": cmd_convolve,
    "check": cmd_check,
    "verify": cmd_verify,
    "export-boundary": cmd_export_boundary,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _COMMANDS[args.command]
    try:
        return handler(args, parser)
    except (FileNotFoundError, PermissionError, IsADirectoryError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HarmonicShearError as exc:
        payload = {"error": str(exc)}
        point = getattr(exc, "point", None)
        if point is not None:
            payload["point"] = [point.real, point.imag]
        print(json.dumps(payload), file=sys.stderr)
        return EXIT_EVALUATION


if __name__ == "__main__":
    sys.exit(main())
