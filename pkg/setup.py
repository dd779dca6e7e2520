"""Build script for the optional compiled bitset kernels.

The package works without the extension: toughgraph.kernels falls back to
the pure-Python implementation at import time if _ckernels is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "toughgraph._ckernels",
                ["src/toughgraph/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
