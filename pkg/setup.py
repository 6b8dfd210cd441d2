import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # build without the extension; the pure-Python kernels are used
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "slpgram._speedups",
                ["src/slpgram/_speedups.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
