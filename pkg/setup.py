"""Build script: compiles the optional scalar-arithmetic extension.

The package works without the extension (a pure-Python backend ships in
``exacteig._kernel_py``); if Cython or a C toolchain is missing we install
pure-only rather than failing the build.
"""

from setuptools import Extension, setup

extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("exacteig._kernel", ["src/exacteig/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=extensions)
