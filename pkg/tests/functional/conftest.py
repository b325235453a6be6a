"""Fixtures used across the functional tests"""

from unittest.mock import patch

from pytest import fixture

from flatbgg.config import config
from flatbgg.jobs import JobConfig, run_job


@fixture(autouse=True)
def few_samples():
    """Fewer random sections per product check, to keep the jobs quick"""
    with patch.object(config, "n_random_samples", 3):
        yield


@fixture(scope="function")
def bgg_job(tmp_path):
    """Fixture that runs the bgg job of the standard conformal module at D = 2"""
    job = JobConfig(
        command="bgg",
        algebra="conformal:3,0",
        rep="standard",
        degree=2,
        seed=7,
        out=tmp_path / "bgg",
    )
    return run_job(job)


@fixture(scope="function")
def run_verify_twice(tmp_path):
    """Fixture that returns a function running one verify job into two directories"""

    def run(**settings):
        results = []
        for name in ("first", "second"):
            job = JobConfig(command="verify", out=tmp_path / name, **settings)
            results.append(run_job(job))
        return results

    return run
