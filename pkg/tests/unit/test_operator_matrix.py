"""Tests for operator_matrix.py"""
import pytest
from sympy import QQ

from flatbgg.exceptions import ContractError, SingularRestrictionError
from flatbgg.operator_matrix import (
    OperatorMatrix,
    invert_on_subspace,
    rank_factor,
    solve_linear,
)
from flatbgg.spaces import BasedSpace, SubspaceBasis


@pytest.fixture
def domain():
    return BasedSpace(["a", "b", "c"])


@pytest.fixture
def codomain():
    return BasedSpace(["x", "y"])


@pytest.fixture
def rank_one(domain, codomain):
    """The map with rows (1, 2, 3) and (2, 4, 6)"""
    entries = {("x", "a"): 1, ("x", "b"): 2, ("x", "c"): 3}
    entries.update({("y", label): 2 * v for (_, label), v in list(entries.items())})
    return OperatorMatrix.from_entries(domain, codomain, entries, name="A")


def diagonal(space, values):
    return OperatorMatrix.from_index_entries(
        space, space, {(i, i): v for i, v in enumerate(values)}
    )


class TestOperatorMatrix:
    def test_entries(self, rank_one):
        assert rank_one.nnz == 6
        assert rank_one.entries[("y", "c")] == QQ(6)

    def test_zero_entries_are_dropped(self, domain, codomain):
        operator = OperatorMatrix.from_entries(domain, codomain, {("x", "a"): 0})
        assert operator.is_zero
        assert operator == OperatorMatrix.zero(domain, codomain)

    def test_arithmetic(self, rank_one):
        doubled = rank_one + rank_one
        assert doubled == rank_one.scale(2)
        assert (doubled - rank_one.scale(2)).is_zero
        assert (-rank_one).entries[("x", "a")] == -1

    def test_composition_needs_matching_spaces(self, rank_one, codomain):
        with pytest.raises(ContractError):
            rank_one @ OperatorMatrix.identity(codomain)
        assert OperatorMatrix.identity(codomain) @ rank_one == rank_one

    def test_transpose(self, rank_one):
        transposed = rank_one.transpose()
        assert transposed.domain.labels == ("x*", "y*")
        assert transposed.codomain.labels == ("a*", "b*", "c*")
        assert transposed.entries[("c*", "y*")] == 6

    def test_apply(self, rank_one):
        assert rank_one.apply({0: 1, 2: -1}) == {0: QQ(-2), 1: QQ(-4)}
        assert rank_one.apply({0: 3, 1: 0, 2: -1}) == {}


class TestRankFactor:
    def test_rank_one(self, rank_one):
        kernel, image, rank = rank_factor(rank_one)
        assert rank == 1
        assert kernel.dim == 2
        assert image.dim == 1
        assert (rank_one @ kernel.embedding()).is_zero

    def test_zero_map(self, domain, codomain):
        kernel, image, rank = rank_factor(OperatorMatrix.zero(domain, codomain))
        assert (kernel.dim, image.dim, rank) == (3, 0, 0)

    def test_pivot_order_is_reproducible(self, rank_one):
        first, _, _ = rank_factor(rank_one)
        second, _, _ = rank_factor(rank_one)
        assert first.matrix == second.matrix


class TestSolveLinear:
    def test_solution_in_image(self, rank_one):
        solution = solve_linear(rank_one, {0: 2, 1: 4})
        assert rank_one.apply(solution) == {0: QQ(2), 1: QQ(4)}

    def test_outside_image(self, rank_one):
        assert solve_linear(rank_one, [1, 0]) is None

    def test_zero_right_hand_side(self, rank_one):
        assert solve_linear(rank_one, {}) == {}

    def test_wrong_length(self, rank_one):
        with pytest.raises(ContractError):
            solve_linear(rank_one, [1, 2, 3])


class TestInvertOnSubspace:
    def test_invariant_subspace(self, domain):
        operator = diagonal(domain, [2, 3, 5])
        subspace = SubspaceBasis(domain, [{0: 1}, {2: 1}])
        inverse = invert_on_subspace(operator, subspace)
        assert inverse.index_entries() == {(0, 0): QQ(1, 2), (1, 1): QQ(1, 5)}

    def test_not_invariant(self, domain):
        operator = diagonal(domain, [2, 3, 5])
        subspace = SubspaceBasis(domain, [{0: 1, 1: 1}])
        with pytest.raises(ContractError):
            invert_on_subspace(operator, subspace)

    def test_singular_restriction_names_a_kernel_vector(self, domain):
        operator = diagonal(domain, [0, 1, 1])
        subspace = SubspaceBasis(domain, [{0: 1}, {1: 1}])
        with pytest.raises(SingularRestrictionError, match="'a'"):
            invert_on_subspace(operator, subspace)
