"""Build hook for the optional compiled kernels.

Without Cython the package installs pure Python and ``ncnn.kernels`` falls
back to ``ncnn._pykernels``.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("ncnn._kernels", ["src/ncnn/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
