import os

from setuptools import setup

# The GF(p) row-reduction kernel is optional: without a compiler (or with
# BURCHKIT_SKIP_EXT set) the package falls back to the pure-Python kernel.
ext_modules = []
if not os.environ.get("BURCHKIT_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/burchkit/_gfp_kernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
