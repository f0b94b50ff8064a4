#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the three hot kernels on representative sizes, plus an end-to-end
certificate workload (shear construction + dilatation sup over the default
grid).  Run as::

    python3 benchmarks/bench_kernels.py [--repeats 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from harmonic_shear._kernels import _fallback

try:
    from harmonic_shear._kernels import _native
except ImportError:
    _native = None

BACKENDS = {"fallback": _fallback}
if _native is not None:
    BACKENDS["native"] = _native


def best_of(repeats, fn, *args):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def kernel_cases(rng):
    order_small, order_big = 256, 2048
    c_small = rng.standard_normal(order_small + 1) + 1j * rng.standard_normal(order_small + 1)
    c_big = rng.standard_normal(order_big + 1) + 1j * rng.standard_normal(order_big + 1)
    grid = (
        np.linspace(0.1, 0.9, 12)[:, None]
        * np.exp(1j * np.linspace(0, 2 * np.pi, 720, endpoint=False))[None, :]
    ).ravel()
    recip_in = c_small * 0.002
    recip_in[0] = 1.0
    return [
        (f"horner order={order_small} x {grid.size} pts", "horner_many", (c_small, grid)),
        (f"horner order={order_big} x {grid.size} pts", "horner_many", (c_big, grid)),
        (f"cauchy_product n={order_small}", "cauchy_product", (c_small, c_small)),
        (f"cauchy_product n={order_big}", "cauchy_product", (c_big, c_big)),
        (f"series_reciprocal n={order_small}", "series_reciprocal", (recip_in,)),
    ]


def end_to_end(repeats):
    import os

    from harmonic_shear import _kernels
    from harmonic_shear.analysis import default_grid, sup_modulus
    from harmonic_shear.mappings import KernelParams, phi_series, shear_construct
    from harmonic_shear.series import TruncatedSeries

    def workload():
        omega = TruncatedSeries.monomial(2, 0.4 + 0.3j, order=256)
        f = shear_construct(phi_series(KernelParams(0.9, 1.3), 256), 0.9, omega)
        sup_modulus(f.dilatation(), default_grid().capped())

    print(f"\nend-to-end (shear + dilatation sup), active backend = {_kernels.BACKEND}")
    print(f"  {best_of(repeats, workload) * 1e3:9.3f} ms")
    if _kernels.BACKEND == "native":
        print("  (set HARMONIC_SHEAR_PURE=1 and re-run to time the fallback end-to-end)")
    del os


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    cases = kernel_cases(rng)
    names = list(BACKENDS)
    width = max(len(label) for label, _, _ in cases)

    header = f"{'kernel':<{width}}  " + "  ".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, fn_name, fn_args in cases:
        contig = tuple(np.ascontiguousarray(a, dtype=np.complex128) for a in fn_args)
        times = [best_of(args.repeats, getattr(BACKENDS[n], fn_name), *contig) for n in names]
        row = f"{label:<{width}}  " + "  ".join(f"{t * 1e3:10.3f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:7.2f}x"
        print(row)

    end_to_end(args.repeats)


if __name__ == "__main__":
    main()
