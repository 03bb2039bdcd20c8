"""Build script: compiles the optional Monte Carlo reduction kernel.

The extension is marked optional; if Cython or a C compiler is missing the
install still succeeds and risevt.simulate falls back to the numpy backend.
Compiled with -ffp-contract=off so the kernel and the numpy fallback produce
bit-identical results (no FMA contraction of mu + sigma*z).
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "risevt._mc_kernel",
                ["src/risevt/_mc_kernel.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3", "-ffp-contract=off"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
