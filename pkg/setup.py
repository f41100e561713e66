"""Build script: compiles the optional search kernel when Cython and a C
toolchain are available; the package falls back to the pure-Python kernel
otherwise, so a failed extension build is never fatal.

Set KNESERLAB_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Let the extension build fail without failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain missing
            print(f"skipping compiled kernel ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping {ext.name} ({exc}); using pure-Python fallback")


def extensions():
    if os.environ.get("KNESERLAB_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("Cython not available; building without the compiled kernel")
        return []
    from setuptools import Extension

    return cythonize(
        [
            Extension(
                "kneserlab._hamcore",
                ["src/kneserlab/_hamcore.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
