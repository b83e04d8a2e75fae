"""Build script for the optional compiled split-scan kernel.

The extension must stay bit-compatible with the numpy fallback in
adview._kernels._split_py, so no -ffast-math and no -march flags: those
permit reassociation / FMA contraction, which changes low-order bits.
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "adview._kernels._split_cy",
                ["src/adview/_kernels/_split_cy.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    extensions = []

setup(ext_modules=extensions)
