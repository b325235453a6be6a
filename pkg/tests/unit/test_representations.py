"""Tests for representations.py"""
import pytest
from sympy import QQ

from flatbgg.algebras import builtin_parabolic
from flatbgg.exceptions import ConfigError, RepresentationError
from flatbgg.lie_algebra import ParabolicGrading, build_lie_algebra
from flatbgg.representations import (
    build_representation,
    lowering_violations,
    parse_representation,
    validate_representation,
    weight_decomposition,
    weight_multiset,
)


@pytest.fixture(scope="module")
def conformal():
    return builtin_parabolic("conformal:3,0")


class TestParseRepresentation:
    def test_nested_expression(self):
        tree = parse_representation("ext(tensor(standard, dual(standard)), 2)")
        assert tree == (
            "ext",
            ("tensor", ("standard",), ("dual", ("standard",))),
            2,
        )

    def test_synonym(self):
        assert parse_representation("exterior_power(adjoint,3)") == (
            "exterior_power",
            ("adjoint",),
            3,
        )

    @pytest.mark.parametrize(
        "expression, position",
        [
            ("standrd", 0),
            ("ext(standard)", 12),
            ("standard extra", 9),
            ("tensor(standard,)", 16),
            ("ext(standard,k)", 13),
            ("dual(standard", 13),
        ],
    )
    def test_errors_name_the_position(self, expression, position):
        with pytest.raises(ConfigError, match=f"at position {position}") as info:
            parse_representation(expression)
        assert info.value.position == position


class TestConstructors:
    @pytest.mark.parametrize(
        "expression, dim",
        [
            ("trivial", 1),
            ("standard", 5),
            ("adjoint", 10),
            ("dual(standard)", 5),
            ("tensor(standard,standard)", 25),
            ("ext(standard,2)", 10),
            ("ext(standard,3)", 10),
            ("end(standard)", 25),
        ],
    )
    def test_dimensions_and_validity(self, conformal, expression, dim):
        algebra, grading = conformal
        representation = build_representation(expression, algebra, grading)
        assert representation.dim == dim
        assert representation.is_g_module
        assert validate_representation(representation) == []
        assert lowering_violations(representation) == []

    def test_labels(self, conformal):
        algebra, grading = conformal
        assert build_representation("standard", algebra, grading).space.labels[0] == (
            "v0"
        )
        wedge = build_representation("ext(standard,2)", algebra, grading)
        assert wedge.space.labels[0] == "v0^v1"
        tensor = build_representation("tensor(standard,dual(standard))", *conformal)
        assert tensor.space.labels[1] == "v0.v1*"

    def test_weight_decomposition(self, conformal):
        standard = build_representation("standard", *conformal)
        assert weight_decomposition(standard) == {
            QQ(1): ["v0"],
            QQ(0): ["v1", "v2", "v3"],
            QQ(-1): ["v4"],
        }

    def test_dual_negates_weights(self, conformal):
        standard = build_representation("standard", *conformal)
        dual = build_representation("dual(standard)", *conformal)
        assert dual.weights == tuple(-w for w in standard.weights)

    def test_adjoint_weights_are_the_grading(self, conformal):
        algebra, grading = conformal
        adjoint = build_representation("adjoint", algebra, grading)
        assert list(adjoint.weights) == [grading.weights[a] for a in algebra.labels]

    def test_projective_weights_are_fractional(self):
        standard = build_representation("standard", *builtin_parabolic("projective:2"))
        assert weight_multiset(standard) == ["-1/3", "-1/3", "2/3"]

    def test_standard_needs_matrices(self):
        algebra = build_lie_algebra(
            ["h", "e", "f"],
            {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}},
            name="sl2",
        )
        grading = ParabolicGrading(algebra, {"h": QQ(1, 2)})
        assert build_representation("adjoint", algebra, grading).dim == 3
        with pytest.raises(RepresentationError):
            build_representation("standard", algebra, grading)

    def test_exterior_power_out_of_range(self, conformal):
        with pytest.raises(RepresentationError):
            build_representation("ext(standard,6)", *conformal)
