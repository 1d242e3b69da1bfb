"""Build hook: compile the optional fast kernels when Cython + a C compiler
are available, otherwise install the pure-Python/numpy fallback only.

The package works identically either way; `herglotz_lab._backend.BACKEND`
reports which implementation is active.
"""

import os
import sys

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("HERGLOTZ_LAB_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("herglotz-lab: Cython not available, skipping compiled kernels",
              file=sys.stderr)
        return []
    ext = Extension(
        "herglotz_lab._kernels",
        sources=["src/herglotz_lab/_kernels.pyx"],
    )
    try:
        return cythonize(
            [ext],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "embedsignature": True,
            },
        )
    except Exception as exc:  # cythonize failed: fall back to pure python
        print(f"herglotz-lab: kernel compilation skipped ({exc})",
              file=sys.stderr)
        return []


setup(ext_modules=_extensions())
