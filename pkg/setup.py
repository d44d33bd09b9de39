"""Build script for the optional compiled backend.

The package is pure Python plus one Cython extension holding the hot
numerical kernels.  If the extension cannot be built the install still
succeeds and the numpy fallback is selected at import time.
"""

import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "gaussbound.backends._speedups",
                sources=["src/gaussbound/backends/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
