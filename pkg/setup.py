import os

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class optional_build_ext(build_ext):
    """Build the speedup extension if possible, fall back to pure Python."""

    def run(self):
        try:
            build_ext.run(self)
        except (PlatformError, FileNotFoundError):
            self._skip("build_ext failed; using the pure-Python kernels")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except (CCompilerError, ExecError, PlatformError, ValueError):
            self._skip(f"could not compile {ext.name}; using the pure-Python kernels")

    def _skip(self, why):
        print("*" * 72)
        print(why)
        print("*" * 72)


ext_modules = []
if not os.environ.get("HOCHCAP_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hochcap/_speedups.pyx"],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
