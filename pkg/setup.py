from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("tensorparse._speedups", ["src/tensorparse/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback in tensorparse._pyops is used instead.
    ext_modules = []

setup(ext_modules=ext_modules)
