# Builds the optional Cython kernel extension.  If Cython or a C compiler is
# unavailable the package still installs; ebcm.kernels falls back to the pure
# Python implementation at import time.
from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension
    import numpy

    ext_modules = cythonize(
        [
            Extension(
                "ebcm.kernels._fast",
                ["src/ebcm/kernels/_fast.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
