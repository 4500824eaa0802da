import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MUCYCLES_PURE") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("mucycles._fastscan", ["src/mucycles/_fastscan.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
