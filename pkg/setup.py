import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = [
        Extension(
            "polytorus._ext",
            ["src/polytorus/_ext.pyx"],
            include_dirs=[np.get_include()],
            extra_compile_args=["-O3"],
        )
    ]
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
except ImportError:
    # pure-Python install still works; polytorus.kernels falls back to numpy
    ext_modules = []

setup(ext_modules=ext_modules)
