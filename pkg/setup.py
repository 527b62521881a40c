"""Build script: compiles the optional fast kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure to cythonize or
compile is downgraded to a warning.
"""

import os
import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that tolerates a missing or broken C toolchain."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover
            warnings.warn(f"fast kernels not built, using pure-Python fallback: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            warnings.warn(f"fast kernels not built, using pure-Python fallback: {exc}")


ext_modules = []
if os.environ.get("HYPERMONO_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hypermono/kernels/_fast.pyx"],
            language_level="3",
        )
    except ImportError:  # pragma: no cover
        warnings.warn("Cython not available, building without fast kernels")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
