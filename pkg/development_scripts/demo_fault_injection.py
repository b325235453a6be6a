"""This script demonstrates what a failing run looks like: one structure constant of
the conformal algebra is flipped, the Jacobi check fails, and every check after the
lie group is recorded as not applicable, with the reason."""

from pathlib import Path

from flatbgg.config import config
from flatbgg.jobs import JobConfig, run_job

config.verbose = True
config.n_random_samples = 3

out = Path.home() / "flatbgg_demos" / "fault"
job = JobConfig(
    command="verify",
    algebra="conformal:3,0",
    rep="standard",
    degree=2,
    scope="bgg",
    out=out,
    inject_fault=True,
)
result = run_job(job)

print(f"exit code: {result.exit_code}")
for record in result.verification.records:
    print(f"{record.status:>15}  {record.name}: {record.details}")
