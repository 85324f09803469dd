"""Build script: compiles the optional exact-linear-algebra extension.

The package works without the extension (mfcat.kernel falls back to the
pure-Python twin), so any build failure here downgrades to a warning.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or cython missing
            sys.stderr.write(
                "warning: building mfcat._kernel failed (%s); "
                "falling back to pure-Python kernel\n" % exc
            )

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            sys.stderr.write(
                "warning: building %s failed (%s); pure-Python kernel will "
                "be used\n" % (ext.name, exc)
            )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    return cythonize(
        [Extension("mfcat._kernel", ["src/mfcat/_kernel.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
