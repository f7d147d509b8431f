"""Builds the _biform extension directly from the C++ core sources so
that `pip install -e . --no-build-isolation` needs only setuptools and
pybind11 (the CMake build remains the primary path for the CLI and
test suites)."""

from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "_biform",
    sorted(glob("src/*.cpp")) + ["python/bindings.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
