"""The command line of flatbgg: `python -m flatbgg` or the `flatbgg` script

Example:

    flatbgg bgg --algebra conformal:3,0 --rep standard --degree 4 --out d0_matrices
    flatbgg verify --config job.txt --scope bgg

Exit codes: 0 when all checks pass, 1 when a check failed, 2 for a configuration
error (including constructions the algebra does not support).
"""

import argparse
import sys

from .config import config
from .exceptions import AlgebraError, ConfigError, FlatModelError, RepresentationError
from .jobs import JobConfig, run_job
from .readers.job_file import COMMANDS, FORMATS, VERIFY_SCOPES

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2

CONFIG_ERRORS = (ConfigError, AlgebraError, RepresentationError, FlatModelError)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="flatbgg",
        description="Exact BGG operators, products and their identities on flat models",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        sub = subparsers.add_parser(command, help=f"run the {command} job")
        sub.add_argument("--config", help="job file of 'key = value' lines")
        sub.add_argument(
            "--algebra", help="built-in name like conformal:3,0, or a constants file"
        )
        sub.add_argument("--rep", help="representation expression like ext(standard,2)")
        sub.add_argument("--degree", type=int, help="polynomial degree cutoff D")
        sub.add_argument("--seed", type=int, help="seed of the random sections")
        sub.add_argument("--out", help="output directory")
        sub.add_argument("--format", choices=FORMATS, help="format of table artifacts")
        sub.add_argument("--scope", choices=VERIFY_SCOPES, help="scope of verify")
        sub.add_argument(
            "--inject-fault",
            action="store_true",
            default=None,
            help="flip one structure constant to see the Jacobi check fail",
        )
        sub.add_argument("--verbose", action="store_true", help="print progress")
    return parser


def job_from_arguments(arguments):
    """The JobConfig of parsed arguments. Flags override the job file."""
    overrides = {
        "command": arguments.command,
        "algebra": arguments.algebra,
        "rep": arguments.rep,
        "degree": arguments.degree,
        "seed": arguments.seed,
        "out": arguments.out,
        "format": arguments.format,
        "scope": arguments.scope,
        "inject_fault": arguments.inject_fault,
    }
    if arguments.config:
        return JobConfig.from_file(arguments.config, **overrides)
    return JobConfig(**{key: v for key, v in overrides.items() if v is not None})


def main(*args):
    """Run the command line on args (defaults to sys.argv) and return the exit code"""
    parser = build_parser()
    arguments = parser.parse_args(args or None)
    if arguments.verbose:
        config.verbose = True
    try:
        job = job_from_arguments(arguments)
        result = run_job(job)
    except CONFIG_ERRORS as e:
        print(f"flatbgg: {e.__class__.__name__}: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    verification = result.verification
    counts = verification.counts()
    print(
        f"{job.command} on {job.algebra} / {job.rep}: {counts['pass']} passed, "
        f"{counts['fail']} failed, {counts['not applicable']} not applicable"
    )
    for record in verification.failed:
        print(f"FAILED {record.name}: {record.details}")
    print(f"wrote {', '.join(str(path) for path in result.artifacts)}")
    return EXIT_PASS if verification.passed else EXIT_CHECK_FAILED
