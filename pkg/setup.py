"""Build script for the compiled Jacobi kernel.

The extension is optional at runtime: if it is missing the package falls
back to the pure-Python kernel (see specbound._kernel).
"""

from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "specbound._jacobi_cy",
        ["src/specbound/_jacobi_cy.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
