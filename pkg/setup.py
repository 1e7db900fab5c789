"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension: inclab.kernels
falls back to the numpy implementation when the compiled module is
missing (see src/inclab/kernels/__init__.py).
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "inclab.kernels._speedups",
                ["src/inclab/kernels/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O2"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
