import os
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
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_path.parent.mkdir(parents=True, exist_ok=True)
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DLABELSEM_PIP_BUILD=ON",
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython_EXECUTABLE={sys.executable}",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={ext_path.parent}",
            ],
            check=True,
        )
        subprocess.run(
            [
                "cmake",
                "--build", str(build_dir),
                "--target", "labelsem_python",
                f"-j{os.cpu_count() or 2}",
            ],
            check=True,
        )


setup(
    packages=["labelsem"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("labelsem._core")],
    cmdclass={"build_ext": CMakeBuild},
)
