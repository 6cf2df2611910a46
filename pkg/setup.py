"""Build script.  The compiled counting kernel is optional: if Cython or a C
compiler is unavailable the install still succeeds and the package falls back
to the numpy implementation at import time."""

from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print("warning: compiled kernel not built (%s); "
                  "falling back to pure-python kernel" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("warning: failed to compile %s (%s); "
                  "falling back to pure-python kernel" % (ext.name, exc))


ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("weilrep._kernel._fastcount",
                   ["src/weilrep/_kernel/_fastcount.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
