import os

from setuptools import Extension, setup

# The compiled sweep kernels are an optimization, not a requirement: the
# package falls back to src/apery3/_pykernels.py when the extension is
# missing.  Set APERY3_PURE_BUILD=1 to skip compilation entirely.
ext_modules = []
if not os.environ.get("APERY3_PURE_BUILD"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "apery3._kernels",
                    ["src/apery3/_kernels.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level="3",
        )

setup(ext_modules=ext_modules)
