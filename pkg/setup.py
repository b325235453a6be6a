"""Build flatbgg for distribution, with the metadata of src/flatbgg/__init__.py"""

import re
from pathlib import Path

import setuptools

HERE = Path(__file__).parent
INIT = (HERE / "src" / "flatbgg" / "__init__.py").read_text()


def dunder(name):
    """The string assigned to __name__ in the package __init__"""
    match = re.search(rf"^__{name}__ = \"([^\"]*)\"", INIT, re.M)
    if not match:
        raise RuntimeError(f"no __{name}__ in src/flatbgg/__init__.py")
    return match.group(1)


def requirements():
    lines = (HERE / "requirements.txt").read_text().splitlines()
    return [line.split("#")[0].strip() for line in lines if line.split("#")[0].strip()]


setuptools.setup(
    name=dunder("title"),
    version=dunder("version"),
    license=dunder("license"),
    author=dunder("author"),
    description=dunder("description"),
    long_description=(HERE / "README.rst").read_text(),
    long_description_content_type="text/x-rst",
    packages=setuptools.find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=requirements(),
    python_requires=">=3.8",
    entry_points={"console_scripts": ["flatbgg = flatbgg.cli:main"]},
)
