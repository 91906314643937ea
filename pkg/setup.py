from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled scan core is optional: hookcert.kernels falls back to the pure
# Python implementation when the extension is absent (or HOOKCERT_PURE=1).
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "hookcert.kernels._scan_c",
                ["src/hookcert/kernels/_scan_c.pyx"],
                extra_compile_args=["-O3"],
                language="c",
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
