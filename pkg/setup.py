"""Build script for the optional compiled kernels.

The package is pure Python; qrules._ckernels only accelerates the
convolution / row-elimination inner loops.  If the extension cannot be
built, installation proceeds and the pure-Python kernels are used.
"""
import logging

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

log = logging.getLogger(__name__)


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            log.warning("skipping compiled kernels: %s", exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            log.warning("skipping %s: %s", ext.name, exc)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("qrules._ckernels", ["src/qrules/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(cmdclass={"build_ext": OptionalBuildExt}, ext_modules=extensions())
