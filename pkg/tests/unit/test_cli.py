"""Tests for the command line and its exit codes"""
from unittest.mock import patch

import pytest

from flatbgg.cli import EXIT_CHECK_FAILED, EXIT_CONFIG_ERROR, EXIT_PASS, main
from flatbgg.config import config


@pytest.fixture(autouse=True)
def few_samples():
    with patch.object(config, "n_random_samples", 2):
        yield


def homology_arguments(out, *extra):
    return (
        "homology",
        "--algebra",
        "conformal:3,0",
        "--rep",
        "trivial",
        "--degree",
        "1",
        "--out",
        str(out),
    ) + extra


class TestMain:
    def test_pass(self, tmp_path, capsys):
        assert main(*homology_arguments(tmp_path)) == EXIT_PASS
        output = capsys.readouterr().out
        assert "0 failed" in output
        assert "report.json" in output
        assert (tmp_path / "report.json").exists()

    def test_injected_fault(self, tmp_path, capsys):
        exit_code = main(*homology_arguments(tmp_path, "--inject-fault"))
        assert exit_code == EXIT_CHECK_FAILED
        assert "FAILED Jacobi identity" in capsys.readouterr().out

    def test_tsv_format(self, tmp_path):
        assert main(*homology_arguments(tmp_path, "--format", "tsv")) == EXIT_PASS
        assert (tmp_path / "homology_table.tsv").exists()

    @pytest.mark.parametrize(
        "arguments, message",
        [
            (("homology", "--algebra", "nonsense:3"), "ConfigError"),
            (("homology", "--algebra", "g2", "--rep", "ext("), "at position 4"),
            (("bgg", "--algebra", "g2", "--rep", "trivial"), "restricted to"),
        ],
    )
    def test_config_errors(self, tmp_path, capsys, arguments, message):
        exit_code = main(*arguments, "--degree", "1", "--out", str(tmp_path))
        assert exit_code == EXIT_CONFIG_ERROR
        assert message in capsys.readouterr().err

    def test_job_file(self, tmp_path):
        job_file = tmp_path / "job.txt"
        job_file.write_text(
            "# homology of the trivial module\n"
            "algebra = conformal:3,0\nrep = trivial\ndegree = 5\n"
        )
        out = tmp_path / "out"
        arguments = ("homology", "--config", str(job_file), "--degree", "1")
        assert main(*arguments, "--out", str(out)) == EXIT_PASS
        assert (out / "homology_table.csv").exists()

    def test_bad_job_file(self, tmp_path, capsys):
        job_file = tmp_path / "job.txt"
        job_file.write_text("algebra = conformal:3,0\nrep: trivial\n")
        exit_code = main("homology", "--config", str(job_file))
        assert exit_code == EXIT_CONFIG_ERROR
        assert "(at position 24)" in capsys.readouterr().err

    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            main("plot", "--algebra", "g2")
