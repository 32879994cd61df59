"""Build script: compiles the optional RK4 kernel extension.

The package is pure Python except for heunpoly._rk4, a small Cython kernel
for the floating-point verification integrator.  If Cython or a C compiler
is unavailable the build falls through and the package uses the pure-Python
fallback (heunpoly._rk4_fallback) selected at import time.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install over the optional speedup module."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing / misconfigured
            warnings.warn(f"skipping compiled kernel ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name} ({exc}); using pure-Python fallback")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "heunpoly._rk4",
                ["src/heunpoly/_rk4.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
