"""Build script for the optional compiled frontier builders.

The package is fully functional without the extension; bdd.build falls back
to the pure-Python builder when graphdd._core is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("graphdd._core", ["src/graphdd/_core.pyx"])],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
