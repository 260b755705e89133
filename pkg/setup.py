import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("EQLAT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "eqlat._countcore",
                    ["src/eqlat/_countcore.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: install the pure-Python kernel only.
        ext_modules = []

setup(ext_modules=ext_modules)
