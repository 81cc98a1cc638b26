"""Build script for the optional compiled counting kernels.

The package works without the extension (a pure-Python backend is selected
at import time), so the extension is marked optional: a failed compile
degrades to the fallback instead of breaking the install.
"""

import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "hypercc._kernels._ckern",
        ["src/hypercc/_kernels/_ckern.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
