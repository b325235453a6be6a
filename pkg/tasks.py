"""Definition of invoke tasks

Every function in this file decorated with `@task` is an invoke task, run from the
command line by calling invoke with the name of the function (or one of its aliases),
e.g. to install all normal and development dependencies::

    invoke dependencies

To see a full list of the available tasks, and the full description of one::

    invoke --list
    invoke --help deps

Read more about invoke here: https://www.pyinvoke.org/
"""

import os
import platform
import sys
from pathlib import Path
from shutil import rmtree

from invoke import task

THIS_DIR = Path(__file__).parent
SOURCE_DIR = THIS_DIR / "src" / "flatbgg"
TESTS_DIR = THIS_DIR / "tests"
DEV_SCRIPTS_DIR = THIS_DIR / "development_scripts"
# Patterns of files and directories deleted by the clean task
CLEAN_PATTERNS = ("__pycache__", "*.pyc", "*.pyo", ".mypy_cache", ".pytest_cache")


# ### QA tasks


@task(aliases=["lint"])
def flake8(context):
    """Run flake8 on the source and the tests

    The ``context`` argument is passed in by invoke, see
    http://docs.pyinvoke.org/en/stable/api/context.html
    """
    print("# flake8")
    with context.cd(THIS_DIR):
        return context.run(f"flake8 {SOURCE_DIR} {TESTS_DIR}", warn=True).return_code


@task(
    aliases=["test", "tests"],
    help={
        "color": "Whether to display pytest output in color, 'yes' or 'no'",
        "slow": "Also run the slow tests on large tensor products, disabled by default",
    },
)
def pytest(context, color="yes", slow=False):
    """Run the test suite, optionally with the slow tests"""
    print("# pytest")
    if platform.system() == "Windows":
        color = "no"
    arguments = "--slow" if slow else ""
    with context.cd(THIS_DIR):
        command = f"pytest tests --color {color} {arguments}"
        return context.run(command, warn=True).return_code


@task(aliases=("check_black", "black_check", "bc"))
def check_code_format(context):
    """Check that the code, tests and development_scripts are black formatted"""
    print("# black --check")
    with context.cd(THIS_DIR):
        command = f"black --check {SOURCE_DIR} {TESTS_DIR} {DEV_SCRIPTS_DIR}"
        return context.run(command, warn=True).return_code


@task(aliases=["QA", "qa", "check"])
def checks(context):
    """Run all QA checks"""
    combined_return_code = flake8(context)
    combined_return_code += pytest(context)
    combined_return_code += check_code_format(context)
    if combined_return_code == 0:
        print()
        print(r"+----------+")
        print(r"| All good |")
        print(r"+----------+")


@task(aliases=("black",))
def format_code(context):
    """Format the source, tests and development scripts with black"""
    context.run(f"black {SOURCE_DIR} {TESTS_DIR} {DEV_SCRIPTS_DIR}")


@task(help={"environment": "Run only this tox environment, like 'py311' or 'flake8'"})
def tox(context, environment=None):
    """Run tox in parallel, on all environments of tox.ini or just one"""
    with context.cd(THIS_DIR):
        context.run("tox -p auto" + (f" -e {environment}" if environment else ""))


# ### Maintenance tasks


@task
def clean(context, dryrun=False):
    """Clean the repository of temporary files and caches

    Arguments:
        dryrun (bool): Only show what would be deleted. On the command line this is
            the ``--dryrun`` or ``-d`` option: `invoke clean --dryrun`
    """
    if dryrun:
        print("CLEANING DRYRUN")
    for clean_pattern in CLEAN_PATTERNS:
        for cleanpath in THIS_DIR.glob("**/" + clean_pattern):
            print("DELETE DIR :" if cleanpath.is_dir() else "DELETE FILE:", cleanpath)
            if dryrun:
                continue
            if cleanpath.is_dir():
                rmtree(cleanpath)
            else:
                cleanpath.unlink()


@task(aliases=["deps"])
def dependencies(context):
    """Install or upgrade pip, the dependencies and the development dependencies"""
    # See https://stackoverflow.com/a/1883251/11640721 for virtual env detection trick
    conda_environment = os.environ.get("CONDA_PREFIX")
    if conda_environment is None and sys.prefix == sys.base_prefix:
        raise RuntimeError(
            "Current python does not seem to be in a virtual environment, which is the "
            "recommended way to install dependencies for development."
        )
    context.run("python -m pip install --upgrade pip")
    command = "python -m pip install --upgrade -r"
    context.run(command + " requirements.txt")
    context.run(command + " requirements-dev.txt")
