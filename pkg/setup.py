import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# -ffp-contract=off: the compiled kernels must round every multiply before
# the following add, exactly like the numpy fallback, or the two backends
# stop being bit-for-bit interchangeable.  No -ffast-math for the same
# reason.
extensions = [
    Extension(
        "skullseg.kernels._fastops",
        ["src/skullseg/kernels/_fastops.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3", "-march=native", "-fopenmp", "-ffp-contract=off"],
        extra_link_args=["-fopenmp"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
