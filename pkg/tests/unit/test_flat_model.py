"""Tests for flat_model.py: polynomial sections and constant-coefficient operators"""
import numpy as np
import pytest
from sympy import QQ

from flatbgg.algebras import builtin_parabolic
from flatbgg.exceptions import ContractError, FlatModelError
from flatbgg.flat_model import (
    FlatOperator,
    PolySectionSpace,
    Section,
    coordinate_exterior_derivative,
    epsilon_action,
    monomial_label,
    monomials,
    random_section,
    twisted_de_rham,
)
from flatbgg.homology import ChainComplexData
from flatbgg.operator_matrix import OperatorMatrix
from flatbgg.representations import build_representation
from flatbgg.spaces import BasedSpace


@pytest.fixture
def fiber():
    return BasedSpace(["f"], weights=[1], name="F")


@pytest.fixture
def d1(fiber):
    """The partial derivative in x1 of sections in two variables"""
    return FlatOperator(fiber, fiber, 2, {(1, 0): OperatorMatrix.identity(fiber)})


def complex_of(name, expression):
    algebra, grading = builtin_parabolic(name)
    return ChainComplexData(grading, build_representation(expression, algebra, grading))


class TestSections:
    def test_monomial_order(self):
        assert monomials(2, 2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]

    def test_monomial_label(self):
        assert monomial_label((2, 0, 1)) == "x1^2*x3"
        assert monomial_label((0, 0)) == "1"

    def test_section_space(self, fiber):
        space = PolySectionSpace(fiber, 3, 2)
        assert space.dim == 10
        assert space.labels[1] == "x1|f"
        assert space.weight("x1^2|f") == QQ(-1)

    def test_arithmetic(self, fiber):
        a = Section.monomial(fiber, (1, 0), "f", 2)
        b = Section.monomial(fiber, (0, 1), "f")
        total = a + b
        assert total.n_terms == 2
        assert (total - a) == b
        assert (a - a).is_zero
        assert a.scale(QQ(1, 2)).records() == [((1, 0), "f", QQ(1))]

    def test_vector_round_trip(self, fiber):
        space = PolySectionSpace(fiber, 2, 2)
        section = Section.monomial(fiber, (1, 1), "f", 3)
        assert Section.from_vector(space, section.to_vector(space)) == section
        with pytest.raises(ContractError):
            Section.monomial(fiber, (3, 0), "f").to_vector(space)

    def test_random_sections_are_seeded(self, fiber):
        space = PolySectionSpace(fiber, 2, 3)
        first = random_section(space, np.random.default_rng(7))
        second = random_section(space, np.random.default_rng(7))
        assert first == second


class TestFlatOperator:
    def test_apply(self, fiber, d1):
        section = Section.monomial(fiber, (2, 1), "f")
        assert d1(section) == Section.monomial(fiber, (1, 1), "f", 2)
        assert d1(Section.monomial(fiber, (0, 3), "f")).is_zero

    def test_composition_and_order(self, d1):
        second = d1 @ d1
        assert list(second.symbol) == [(2, 0)]
        assert second.order == 2
        assert second.truncated(1).is_zero
        assert not second.equals(second.truncated(1))
        assert second.equals(second.truncated(1), max_order=1)

    def test_matrix_agrees_with_apply(self, fiber, d1):
        space = PolySectionSpace(fiber, 2, 3)
        matrix = d1.matrix(3)
        section = random_section(space, np.random.default_rng(1))
        image = Section.from_vector(space, matrix.apply(section.to_vector(space)))
        assert image == d1(section)

    def test_adjoint(self, fiber, d1):
        adjoint = d1.adjoint()
        assert adjoint.domain.labels == ("f*",)
        assert adjoint.symbol[(1, 0)].index_entries() == {(0, 0): QQ(-1)}
        assert adjoint.adjoint() == d1

    def test_symbol_must_fit(self, fiber, d1):
        other = BasedSpace(["g"])
        with pytest.raises(ContractError):
            FlatOperator(other, other, 2, {(1, 0): OperatorMatrix.identity(fiber)})
        with pytest.raises(ContractError):
            FlatOperator(fiber, fiber, 3, {(1, 0): OperatorMatrix.identity(fiber)})


class TestTwistedDeRham:
    @pytest.fixture(scope="class")
    def standard_complex(self):
        return complex_of("conformal:3,0", "standard")

    @pytest.mark.parametrize("k", [0, 1])
    def test_squares_to_zero(self, standard_complex, k):
        coordinate = coordinate_exterior_derivative(standard_complex, k + 1)
        assert (coordinate @ coordinate_exterior_derivative(standard_complex, k)).is_zero
        twisted = twisted_de_rham(standard_complex, k + 1)
        assert (twisted @ twisted_de_rham(standard_complex, k)).is_zero

    def test_epsilon_action_is_first_order(self, standard_complex):
        operator = epsilon_action(standard_complex, 1)
        assert operator.order == 1
        assert operator.homogeneous_part(0).is_zero

    def test_non_abelian_is_refused(self):
        with pytest.raises(FlatModelError, match="restricted to"):
            coordinate_exterior_derivative(complex_of("g2", "trivial"), 0)
