from setuptools import Extension, setup

# The compiled kernels are an optional speedup: if Cython or a C compiler
# is unavailable the install proceeds and the package falls back to the
# pure-Python kernels at import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "bitstash._kernels",
                ["src/bitstash/_kernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
