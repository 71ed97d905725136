import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HFP_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("hfpc._scan", ["src/hfpc/_scan.pyx"])],
            language_level=3,
        )
    except ImportError:
        # No Cython available: the package falls back to the pure-Python
        # kernels selected at import time in hfpc._backend.
        ext_modules = []

setup(ext_modules=ext_modules)
