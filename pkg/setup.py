"""Build script for the optional compiled kernels.

The package is pure Python except for absorder._ckernels, a small Cython
module that accelerates cycle counting and pairwise order-test tables.  If
Cython or a C compiler is unavailable the build falls back to a pure-Python
install; absorder.kernels picks whichever implementation imports.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Skip the extension (with a notice) instead of failing the install."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            self._warn(exc)

    def _warn(self, exc):
        print(
            "WARNING: building absorder._ckernels failed (%s); "
            "falling back to the pure-Python kernels" % (exc,),
            file=sys.stderr,
        )


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("absorder._ckernels", ["src/absorder/_ckernels.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
