"""Jobs: the configuration of a batch run and the orchestration of its artifacts

A job names an algebra (a built-in name like "conformal:3,0" or the path to a
structure constant file), a representation expression, the degree cutoff D, a
command and an output directory. run_job() builds what the command needs, runs
the corresponding checks of flatbgg.verification, writes the artifact files and
returns a JobResult. Given the same job and seed, every artifact except the
timings file is byte-identical across runs.
"""

from pathlib import Path

from . import __version__
from .algebras import builtin_parabolic
from .bgg.context import BGGContext
from .config import config
from .exceptions import AlgebraError, ConfigError
from .exporters import (
    HomologyTableExporter,
    MatrixExporter,
    ReportExporter,
    TimingsExporter,
)
from .homology import ChainComplexData
from .readers import JobFileReader, StructureConstantsReader
from .readers.job_file import COMMANDS, FORMATS, VERIFY_SCOPES
from .representations import build_representation, parse_representation
from .tools import say
from .verification import VerificationSuite

TRUE_STRINGS = ("true", "yes", "1")

# the check scope each command runs; verify runs JobConfig.scope
COMMAND_SCOPES = {
    "homology": "homology",
    "bgg": "bgg",
    "cup": "cup",
    "ainf": "ainf",
    "dual": "dual",
    "deform": "deform",
}

DEFAULT_REPRESENTATIONS = {"deform": "adjoint"}

DELIMITERS = {"csv": ",", "tsv": "\t"}


class JobConfig:
    """The settings of one job

    Attributes:
        command (str): One of "homology", "bgg", "cup", "ainf", "dual", "deform",
            "verify"
        algebra (str): A built-in name or the path to a structure constant file
        rep (str): The representation expression
        degree (int): The degree cutoff D
        out (Path): The output directory
        seed (int): The seed of the random sections
        scope (str): The verification scope of the verify command
        format (str): "csv" or "tsv", the format of the table artifacts
        inject_fault (bool): Whether to flip one structure constant of the algebra
    """

    def __init__(
        self,
        command="verify",
        algebra=None,
        rep=None,
        degree=None,
        out=None,
        seed=None,
        scope="all",
        format="csv",
        inject_fault=False,
    ):
        self.command = command
        self.algebra = algebra
        self.rep = rep or DEFAULT_REPRESENTATIONS.get(command, "standard")
        self.degree = config.default_max_degree if degree is None else int(degree)
        self.out = Path(out) if out else config.output_directory
        self.seed = config.default_seed if seed is None else int(seed)
        self.scope = scope
        self.format = format
        self.inject_fault = inject_fault
        self.validate()

    def __repr__(self):
        return (
            f"{self.__class__.__name__}(command='{self.command}', "
            f"algebra='{self.algebra}', rep='{self.rep}', degree={self.degree})"
        )

    def validate(self):
        """Raise a ConfigError for the first invalid setting"""
        if self.command not in COMMANDS:
            raise ConfigError(
                f"unknown command '{self.command}'. Options are {COMMANDS}"
            )
        if not self.algebra:
            raise ConfigError("the job names no algebra")
        if self.degree < 0:
            raise ConfigError(f"the degree cutoff must be >= 0, not {self.degree}")
        if self.scope not in VERIFY_SCOPES:
            raise ConfigError(
                f"unknown scope '{self.scope}'. Options are {VERIFY_SCOPES}"
            )
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format '{self.format}'. Options are {FORMATS}")
        tree = parse_representation(self.rep)
        if self.command == "deform" and tree != ("adjoint",):
            raise ConfigError(
                f"deform works on the adjoint module, not on '{self.rep}'"
            )

    @classmethod
    def from_settings(cls, settings):
        """Return a JobConfig from {key: string value}, as read from a job file"""
        settings = dict(settings)
        if "inject_fault" in settings:
            settings["inject_fault"] = str(settings["inject_fault"]).lower() in (
                TRUE_STRINGS
            )
        return cls(**settings)

    @classmethod
    def from_file(cls, path_to_file, **overrides):
        """Return the JobConfig of a job file. Overrides that are not None win."""
        settings = JobFileReader().read(path_to_file)
        settings.update({key: v for key, v in overrides.items() if v is not None})
        return cls.from_settings(settings)

    def as_dict(self):
        """The job echo of the report. The output directory is left out, so that
        reports of the same job in different places are identical."""
        return {
            "command": self.command,
            "algebra": self.algebra,
            "rep": self.rep,
            "degree": self.degree,
            "seed": self.seed,
            "scope": self.scope,
            "format": self.format,
            "inject_fault": self.inject_fault,
        }

    def algebra_and_grading(self):
        """Return (LieAlgebraData, ParabolicGrading) of the job's algebra"""
        path = Path(self.algebra)
        if path.suffix in (".csv", ".tsv") or path.exists():
            return StructureConstantsReader().read(path)
        try:
            return builtin_parabolic(self.algebra)
        except AlgebraError as e:
            raise ConfigError(f"could not build the algebra '{self.algebra}': {e}")


class JobResult:
    """What run_job returns

    Attributes:
        config (JobConfig): The job
        verification (VerificationReport): The checks that ran
        report (dict): The content of the report file
        artifacts (list of Path): The files written, report file last
    """

    def __init__(self, config, verification, report, artifacts):
        self.config = config
        self.verification = verification
        self.report = report
        self.artifacts = artifacts

    def __repr__(self):
        return (
            f"{self.__class__.__name__}({self.config.command}, "
            f"exit_code={self.exit_code}, {len(self.artifacts)} artifacts)"
        )

    @property
    def exit_code(self):
        return self.verification.exit_code


def export_artifacts(what, obj, out, format="csv", name=None):
    """Write one artifact file to the directory `out` and return its path

    Args:
        what (str): "matrix", "table", "report" or "timings"
        obj: The OperatorMatrix, ChainComplexData, report dict or timings list
        out (Path): The output directory
        format (str): "csv" or "tsv" for the table artifacts
        name (str): The file name without suffix. Defaults to `what`.
    """
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    name = name or what
    if what == "report":
        return ReportExporter().export(obj, out / f"{name}.json")
    exporter_classes = {
        "matrix": MatrixExporter,
        "table": HomologyTableExporter,
        "timings": TimingsExporter,
    }
    if what not in exporter_classes:
        raise ConfigError(
            f"cannot export '{what}'. Options are {['report'] + list(exporter_classes)}"
        )
    exporter = exporter_classes[what]()
    return exporter.export(obj, out / f"{name}.{format}", delim=DELIMITERS[format])


def run_job(job):
    """Run a job: construct, verify and write the artifacts

    Args:
        job (JobConfig): The job

    Returns:
        JobResult: with the report and the paths of the artifacts
    """
    algebra, grading = job.algebra_and_grading()
    checked_algebra = algebra.with_flipped_constant() if job.inject_fault else algebra
    scope = COMMAND_SCOPES.get(job.command, job.scope)
    say(f"running {job}")
    suite = VerificationSuite(
        checked_algebra, grading, job.rep, max_degree=job.degree, seed=job.seed
    )
    verification = suite.run(scope)

    artifacts = []
    fmt = job.format
    writes_table = job.command in ("homology", "bgg", "verify")
    if writes_table and not verification.algebra_failed:
        complex_data = ChainComplexData(
            grading, build_representation(job.rep, algebra, grading)
        )
        artifacts.append(
            export_artifacts("table", complex_data, job.out, fmt, "homology_table")
        )
        if job.command == "bgg":
            context = BGGContext(complex_data, job.degree)
            for k in range(grading.n):
                matrix = context.bgg_matrix(k)
                artifacts.append(
                    export_artifacts("matrix", matrix, job.out, fmt, f"D_{k}")
                )
    if job.command == "verify":
        artifacts.append(
            export_artifacts("timings", verification.timings(), job.out, fmt)
        )

    report_name = "report.json"
    report = {
        "flatbgg_version": __version__,
        "job": job.as_dict(),
        "scope": scope,
        "passed": verification.passed,
        "counts": verification.counts(),
        "checks": verification.to_dicts(),
        "artifacts": sorted([path.name for path in artifacts] + [report_name]),
    }
    artifacts.append(export_artifacts("report", report, job.out, name="report"))
    return JobResult(job, verification, report, artifacts)
