"""Build script: compiles the optional event-loop kernel extension.

The package works without the extension (a pure NumPy fallback is selected
at import time), so the build degrades gracefully when Cython or a C
compiler is unavailable.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "trapmc._kernels",
                ["src/trapmc/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
