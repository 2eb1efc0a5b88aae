"""Build the optional Cython kernels.

The package works without them: ``hexpath.kernels`` falls back to the
pure-Python implementations when ``hexpath._ckernels`` cannot be imported.
"""
from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:  # build without the compiled core
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "hexpath._ckernels",
                ["src/hexpath/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
