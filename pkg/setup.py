"""Build script: compiles the optional fast kernel extension.

The package is pure Python plus one optional compiled module,
redchern._mulcore, generated from src/redchern/_mulcore.pyx.  If Cython or a
C toolchain is missing the extension is skipped and redchern falls back to
the pure-Python kernels in redchern._mulcore_py at import time.

Build in place with:
    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "redchern._mulcore",
                ["src/redchern/_mulcore.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
