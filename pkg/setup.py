"""Build script: compiles the optional Cython kernel extension.

The extension is a pure speedup; if Cython or a C compiler is missing the
install falls back to the numpy kernels and everything still works.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a warning, not an install error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping compiled kernel {ext.name}: {exc}")


try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "harmonic_shear._kernels._native",
                ["src/harmonic_shear/_kernels/_native.pyx"],
                include_dirs=[numpy.get_include()],
                # kernels only ever see finite inputs; fast-math drops the
                # branchy NaN handling from C99 complex multiplication
                extra_compile_args=["-O3", "-ffast-math"],
            )
        ],
        language_level="3",
    )
except ImportError as exc:  # pragma: no cover - exercised only without Cython
    warnings.warn(f"building without the compiled kernels: {exc}")
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
