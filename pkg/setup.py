"""Build script. The Cython extension is a best-effort accelerator; the package
works without it (pure-Python kernels are selected at import time)."""

from setuptools import setup, Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "comodules._kernels._fast",
                ["src/comodules/_kernels/_fast.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
