"""Build the optional Cython kernel.

The package works without the extension (a pure-Python twin is selected at
import time), so a missing compiler or Cython only costs speed, not
functionality.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping C kernel build ({exc}); "
                  "pure-Python backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  "pure-Python backend will be used")


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without the C kernel")
        return []
    ext = Extension(
        "divprod._kernel",
        ["src/divprod/_kernel.pyx"],
    )
    return cythonize([ext], language_level="3")


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
