"""Tests for lie_algebra.py and the built-in algebras"""
import pytest
from sympy import QQ

from flatbgg.algebras import builtin_parabolic
from flatbgg.exceptions import AlgebraError
from sympy.polys.matrices import DomainMatrix

from flatbgg.lie_algebra import ParabolicGrading, build_lie_algebra, trace_of

SL2_CONSTANTS = {
    ("h", "e"): {"e": 2},
    ("h", "f"): {"f": -2},
    ("e", "f"): {"h": 1},
}


@pytest.fixture
def sl2():
    return build_lie_algebra(["h", "e", "f"], SL2_CONSTANTS, name="sl2")


class TestStructureConstants:
    def test_antisymmetry_is_completed(self, sl2):
        assert sl2.bracket_labels("e", "h") == {"e": QQ(-2)}
        assert sl2.bracket_labels("f", "e") == {"h": QQ(-1)}
        assert sl2.antisymmetry_violations() == []

    def test_records_with_indices(self, sl2):
        records = [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]
        algebra = build_lie_algebra(["h", "e", "f"], records, name="sl2")
        assert algebra.constants == sl2.constants

    def test_killing_form(self, sl2):
        assert sl2.killing("e", "f") == 4
        assert sl2.killing("h", "h") == 8
        assert sl2.killing("e", "e") == 0

    def test_trace_of(self):
        matrix = DomainMatrix.from_dok(
            {(0, 0): QQ(1, 2), (0, 1): QQ(7), (1, 1): QQ(-3)}, (2, 2), QQ
        )
        assert trace_of(matrix) == QQ(-5, 2)
        assert trace_of(DomainMatrix.zeros((3, 3), QQ)) == 0

    def test_inconsistent_pair_is_refused(self):
        constants = dict(SL2_CONSTANTS)
        constants[("e", "h")] = {"e": 2}
        with pytest.raises(AlgebraError, match="antisymmetry"):
            build_lie_algebra(["h", "e", "f"], constants)

    def test_flipped_constant_breaks_jacobi(self, sl2):
        faulty = sl2.with_flipped_constant()
        assert faulty.jacobi_violations() == [("h", "e", "f")]
        with pytest.raises(AlgebraError, match=r"Jacobi identity on the triple"):
            faulty.validate()

    def test_unchecked_build(self):
        constants = dict(SL2_CONSTANTS)
        constants[("h", "e")] = {"e": -2}
        algebra = build_lie_algebra(["h", "e", "f"], constants, check=False)
        assert algebra.jacobi_violations()


class TestParabolicGrading:
    def test_sl2_grading(self, sl2):
        grading = ParabolicGrading(sl2, {"h": QQ(1, 2)})
        assert grading.weights == {"h": 0, "e": 1, "f": -1}
        assert grading.m_labels == ["e"]
        assert grading.m_dual_labels == ["f"]
        assert grading.p_labels == ["h", "f"]
        assert grading.check_invariant_pairing()

    def test_grading_element_must_act_diagonally(self, sl2):
        with pytest.raises(AlgebraError, match="not diagonal"):
            ParabolicGrading(sl2, {"e": 1})

    @pytest.mark.parametrize(
        "name, dim, layers, abelian",
        [
            ("conformal:3,0", 10, {-1: 3, 0: 4, 1: 3}, True),
            ("conformal:3", 10, {-1: 3, 0: 4, 1: 3}, True),
            ("projective:2", 8, {-1: 2, 0: 4, 1: 2}, True),
            (
                "g2",
                14,
                {-3: 2, -2: 1, -1: 2, 0: 4, 1: 2, 2: 1, 3: 2},
                False,
            ),
        ],
    )
    def test_builtin_layers(self, name, dim, layers, abelian):
        algebra, grading = builtin_parabolic(name)
        assert algebra.dim == dim
        assert {w: len(labels) for w, labels in grading.layers.items()} == layers
        assert grading.is_abelian is abelian
        assert algebra.jacobi_violations() == []

    def test_builtin_killing_form(self):
        algebra, grading = builtin_parabolic("projective:2")
        assert grading.check_invariant_pairing()
        assert any(
            algebra.killing(first, second)
            for first in grading.m_labels
            for second in grading.m_dual_labels
        )

    def test_builtin_pairing_and_depth(self):
        _, grading = builtin_parabolic("conformal:2,1")
        assert grading.depth == 1
        assert grading.check_invariant_pairing()
        _, grading = builtin_parabolic("g2")
        assert grading.depth == 3

    def test_flipped_builtin(self):
        algebra, _ = builtin_parabolic("conformal:3,0")
        assert algebra.with_flipped_constant().jacobi_violations()

    @pytest.mark.parametrize(
        "name", ["nonsense", "conformal:2", "conformal:3,0,1", "projective:x"]
    )
    def test_bad_builtin_names(self, name):
        with pytest.raises(AlgebraError):
            builtin_parabolic(name)
