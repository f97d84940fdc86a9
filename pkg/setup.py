from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python fallback is used at runtime
    ext_modules = []
else:
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("hstaralg._boolkern", ["src/hstaralg/_boolkern.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
