"""CMake-driven build of the netlqg._core extension module.

The wheel backend is plain setuptools; this shim configures the CMake
project with tests off, builds only the pybind11 target, and drops the
resulting shared object where setuptools expects the extension.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DNETLQG_BUILD_TESTS=OFF",
                "-DNETLQG_BUILD_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core"],
            cwd=build_dir,
            check=True,
        )
        built = sorted((build_dir / "python" / "netlqg").glob("_core.*"))
        if not built:
            raise RuntimeError("cmake did not produce the _core module")
        dest = Path(self.get_ext_fullpath(ext.name)).resolve()
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[-1], dest)


setup(
    ext_modules=[CMakeExtension("netlqg._core")],
    cmdclass={"build_ext": CMakeBuild},
)
