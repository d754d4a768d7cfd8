import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GKMGRASS_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gkmgrass._poly_cy",
                    ["src/gkmgrass/_poly_cy.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: the pure-Python kernels are used instead.
        ext_modules = []

setup(ext_modules=ext_modules)
