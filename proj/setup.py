import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()

        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                "-DSOFTCLUST_BUILD_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core",
             "-j", str(os.cpu_count() or 1)],
            check=True,
        )

        staged = build_dir / "python" / "softclust"
        built = [p for p in staged.glob("_core*") if p.suffix in (".so", ".pyd", ".dylib")]
        if not built:
            raise RuntimeError(f"cmake did not produce a _core module in {staged}")
        out_dir.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], out_dir / built[0].name)


setup(
    ext_modules=[CMakeExtension("softclust._core")],
    cmdclass={"build_ext": CMakeBuild},
)
