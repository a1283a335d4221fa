"""Build script: compiles the interval-kernel extension when a toolchain is
available, otherwise installs the pure-Python package unchanged (the kernel
facade falls back at import time)."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "sgscert._ivcore",
                ["src/sgscert/_ivcore.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    print(f"sgscert: building without compiled interval core ({exc})")

setup(ext_modules=ext_modules)
