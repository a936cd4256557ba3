from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "spinspread._kernels_cy",
                ["src/spinspread/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    # The compiled backend is a speedup, not a requirement: fall back to the
    # pure-Python kernels if the toolchain is missing.
    for ext in ext_modules:
        ext.optional = True

setup(ext_modules=ext_modules)
