"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-numpy
fallback is selected at import time), so a failed compile downgrades to a
warning instead of aborting the install.
"""

import sys

import numpy as np
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "magictrace._kernels",
                ["src/magictrace/_kernels.pyx"],
                include_dirs=[np.get_include()],
                # -ffp-contract=off keeps IEEE rounding per operation so the
                # compiled kernels match the numpy fallback bit for bit.
                extra_compile_args=["-O3", "-ffp-contract=off"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on toolchain
    print(f"warning: skipping compiled kernels ({exc}); "
          "falling back to pure-python backend", file=sys.stderr)

setup(ext_modules=ext_modules)
