from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = [
    "src/numeric.cpp",
    "src/quadint.cpp",
    "src/pell.cpp",
    "src/poly.cpp",
    "src/circuit.cpp",
    "src/gadgets.cpp",
    "src/pipeline.cpp",
    "src/suites.cpp",
    "python/module.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "diozi._core",
            sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
