import os

from setuptools import setup

ext_modules = []
if os.environ.get("ZECKINV_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/zeckinv/_kernel.pyx"],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install the pure-Python package only.
        # zeckinv._core falls back automatically at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
