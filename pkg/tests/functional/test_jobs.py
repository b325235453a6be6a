"""Tests that jobs write complete, consistent and reproducible artifacts"""

import pytest

from flatbgg import BGGContext
from flatbgg.flat_model import coordinate_exterior_derivative
from flatbgg.jobs import JobConfig, run_job
from flatbgg.readers import HomologyTableReader, MatrixReader

# NOTE The `bgg_job` and `run_verify_twice` arguments are provided by shared
# fixtures in conftest.py in this directory


class TestBGGJob:
    """This class tests the artifacts of a bgg job"""

    def test_report(self, bgg_job):
        assert bgg_job.exit_code == 0
        report = bgg_job.report
        assert report["job"]["seed"] == 7
        assert report["counts"]["fail"] == 0
        assert report["artifacts"] == [
            "D_0.csv",
            "D_1.csv",
            "D_2.csv",
            "homology_table.csv",
            "report.json",
        ]

    def test_matrices_form_a_complex(self, bgg_job):
        out = bgg_job.config.out
        d0, d1, d2 = [MatrixReader().read(out / f"D_{k}.csv") for k in range(3)]
        assert (d1 @ d0).is_zero
        assert (d2 @ d1).is_zero
        assert d0.shape == (50, 10)
        assert not d0.is_zero

    def test_table_matches_the_matrices(self, bgg_job):
        out = bgg_job.config.out
        table = HomologyTableReader().read(out / "homology_table.csv")
        assert list(table["dim_H"]) == [1, 5, 5, 1]
        d1 = MatrixReader().read(out / "D_1.csv")
        # H_1 sections of degree <= 2 in 3 variables
        assert d1.shape[1] == 5 * 10


class TestReproducibility:
    """Given the same job and seed, the artifacts are identical"""

    @pytest.mark.parametrize(
        "settings",
        [
            {"algebra": "conformal:3,0", "rep": "trivial", "degree": 2, "scope": "cup"},
            {"algebra": "g2", "rep": "trivial", "degree": 1, "scope": "homology"},
        ],
    )
    def test_identical_reports(self, run_verify_twice, settings):
        first, second = run_verify_twice(seed=3, **settings)
        for name in ("report.json", "homology_table.csv"):
            with open(first.config.out / name, "rb") as f:
                first_bytes = f.read()
            with open(second.config.out / name, "rb") as f:
                second_bytes = f.read()
            assert first_bytes == second_bytes
        assert first.report == second.report

    def test_seed_is_echoed(self, run_verify_twice):
        first, _ = run_verify_twice(
            algebra="projective:2", rep="standard", degree=1, scope="homology", seed=11
        )
        assert first.report["job"]["seed"] == 11
        assert {check["seed"] for check in first.report["checks"]} == {11}


class TestOtherJobs:
    def test_trivial_module_writes_de_rham(self, tmp_path):
        job = JobConfig(
            command="bgg", algebra="conformal:3,0", rep="trivial", degree=2, out=tmp_path
        )
        run_job(job)
        context = BGGContext.from_names("conformal:3,0", "trivial", max_degree=2)
        for k in range(3):
            exterior = (
                context.harmonic_projection(k + 1)
                @ coordinate_exterior_derivative(context.complex, k)
                @ context.harmonic_embedding(k)
            )
            read_back = MatrixReader().read(tmp_path / f"D_{k}.csv")
            assert (read_back - exterior.matrix(2)).is_zero

    @pytest.mark.slow
    def test_projective_verify_passes(self, tmp_path):
        job = JobConfig(algebra="projective:2", rep="standard", degree=3, out=tmp_path)
        result = run_job(job)
        assert result.report["passed"] is True
        assert result.report["counts"]["fail"] == 0
