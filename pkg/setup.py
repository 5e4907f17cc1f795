import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# optional=True: if no C toolchain is present the install still succeeds and
# bgdb.kernels falls back to the numpy implementation at import time.
extensions = [
    Extension(
        "bgdb.kernels._convcore",
        ["src/bgdb/kernels/_convcore.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"})
    if cythonize
    else []
)
