from setuptools import Extension, setup
from Cython.Build import cythonize

ext = Extension("homvec.kernels._ckernel", ["src/homvec/kernels/_ckernel.pyx"])

setup(ext_modules=cythonize([ext], language_level=3))
