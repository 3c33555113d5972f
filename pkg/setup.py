from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "cliquesim._kernel",
        ["src/cliquesim/_kernel.pyx"],
        language="c++",
        extra_compile_args=["-O3", "-std=c++17"],
    )
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
