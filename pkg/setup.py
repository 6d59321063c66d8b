"""Build script for the optional compiled digit-kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure to build it is
downgraded to a warning.  Set PALSUM_NO_EXT=1 to skip the build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


def _extensions():
    if os.environ.get("PALSUM_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("palsum: Cython not available, building without compiled kernels",
              file=sys.stderr)
        return []
    ext = Extension("palsum._digitops", ["src/palsum/_digitops.pyx"])
    return cythonize([ext], compiler_directives={"language_level": "3"})


class OptionalBuildExt(build_ext):
    """build_ext that tolerates a missing or broken C toolchain."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"palsum: compiled kernels skipped ({exc}); "
              "the pure-Python fallback will be used", file=sys.stderr)


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
