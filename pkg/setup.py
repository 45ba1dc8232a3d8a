"""Build script: compiles the optional Cython tidset kernels.

The package works without the extension (a numpy fallback is selected at
import time), so any build failure here only costs speed, not correctness.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; building without compiled tidset kernels")
        return []
    return cythonize(
        ["src/rulecover/_kernels/_tidset_cy.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )


class optional_build_ext(build_ext):
    """Degrade to the pure-Python kernels if compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # CCompilerError, DistutilsExecError, ...
            warnings.warn(f"compiled kernels skipped ({exc}); using the numpy fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped ({exc}); using the numpy fallback")


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
