"""Build script for the optional compiled kernel.

The package is pure Python plus one Cython extension for the hot loops
(automorphism enumeration and conjugacy partitioning). If Cython is not
available the extension is skipped and the pure-Python fallback in
alexq._kernels_py is used at runtime.
"""

from pathlib import Path

from setuptools import Extension, setup

PYX = "src/alexq/_kernels_cy.pyx"

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    if (Path(__file__).parent / PYX).exists():
        ext_modules = cythonize(
            [Extension("alexq._kernels_cy", [PYX])],
            language_level="3",
        )
    else:
        ext_modules = []

setup(ext_modules=ext_modules)
