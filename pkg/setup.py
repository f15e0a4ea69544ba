"""Build script.

The compiled term-arithmetic kernel is optional: when Cython and a C
compiler are available the extension singcurves._kernel_c is built,
otherwise the package falls back to the pure-Python kernel at import
time.  `SINGCURVES_NO_EXT=1 pip install .` skips the extension.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SINGCURVES_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/singcurves/_kernel_c.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
