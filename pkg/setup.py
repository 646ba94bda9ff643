from setuptools import Extension, setup

# The compiled kernel is optional: if Cython (or a C compiler) is missing the
# build still succeeds and the package falls back to the pure-Python kernels.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "genpos._kernels._fastrank",
                ["src/genpos/_kernels/_fastrank.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
