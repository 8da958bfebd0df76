"""Build the optional compiled kernels.

If Cython or a C compiler is missing the package still installs and runs
on the pure-Python kernels.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("skewcyc._kernels._native", ["src/skewcyc/_kernels/_native.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except Exception as exc:  # noqa: BLE001
    print(f"skipping compiled kernels: {exc}")

setup(ext_modules=ext_modules)
