"""Build glue for the optional compiled kernels.

The package works without the extension (numpy fallback); a missing
compiler or Cython only costs speed, so extension build failures are
non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/optcurves/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover
    print(f"optcurves: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
