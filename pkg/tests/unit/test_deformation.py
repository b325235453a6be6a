"""Tests for bgg/deformation.py"""
import numpy as np
import pytest

from flatbgg.bgg import BGGContext, deformation_obstruction
from flatbgg.exceptions import ContractError, DeformationError


@pytest.fixture(scope="module")
def adjoint():
    return BGGContext.from_names("conformal:3,0", "adjoint", max_degree=2)


class TestDeformationObstruction:
    def test_pure_gauge(self, adjoint):
        gauge = adjoint.random_homology_section(0, np.random.default_rng(6))
        report = deformation_obstruction(adjoint, gauge=gauge)
        assert report.obstruction_closed is True
        assert report.closed
        assert report.to_dict()["pure_gauge"] is True
        assert report.deformation == adjoint.bgg_operator(0).apply(gauge)

    def test_zero_deformation(self, adjoint):
        gauge = adjoint.random_homology_section(0, np.random.default_rng(6))
        zero = gauge - gauge
        report = deformation_obstruction(adjoint, gauge=zero)
        assert report.obstruction.is_zero
        assert report.exact

    def test_exactly_one_input(self, adjoint):
        with pytest.raises(ContractError):
            deformation_obstruction(adjoint)

    def test_non_closed_deformation(self, adjoint):
        rng = np.random.default_rng(9)
        deformation = adjoint.random_homology_section(1, rng, max_degree=3)
        with pytest.raises(DeformationError) as info:
            deformation_obstruction(adjoint, deformation=deformation)
        assert not info.value.residual.is_zero

    def test_constant_deformation(self, adjoint):
        rng = np.random.default_rng(12)
        deformation = adjoint.random_homology_section(1, rng, max_degree=0)
        assert adjoint.bgg_operator(1).apply(deformation).is_zero
        report = deformation_obstruction(adjoint, deformation=deformation)
        assert report.gauge is None
        assert report.to_dict() == {
            "deformation_terms": deformation.n_terms,
            "pure_gauge": False,
            "closed": True,
            "obstruction_zero": True,
            "obstruction_terms": 0,
            "obstruction_closed": True,
            "exact": True,
        }
        assert report.preimage.is_zero

    def test_non_strict_records_the_residual(self, adjoint):
        rng = np.random.default_rng(9)
        deformation = adjoint.random_homology_section(1, rng, max_degree=3)
        report = deformation_obstruction(adjoint, deformation=deformation, strict=False)
        assert report.closed is False
        assert report.to_dict()["closed"] is False
