"""Build hook: compile the max-flow kernel when Cython is available.

The package works without the extension (a pure-Python kernel is
selected at import time), so any compilation failure downgrades to a
pure build instead of aborting the install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/densdel/_dinic.pyx"], language_level=3, quiet=True
    )
except Exception as exc:  # no Cython or no compiler: pure-Python build
    print(f"skipping compiled max-flow kernel: {exc}")

setup(ext_modules=ext_modules)
