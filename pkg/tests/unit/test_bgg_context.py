"""Tests for the flat BGG operators of bgg/context.py and bgg/neumann.py"""
import pytest

from flatbgg.bgg import BGGContext, kernel_stabilization, twistor_kernel
from flatbgg.exceptions import ContractError, FlatModelError
from flatbgg.flat_model import FlatOperator, Section, coordinate_exterior_derivative


@pytest.fixture(scope="module")
def standard():
    return BGGContext.from_names("conformal:3,0", "standard", max_degree=3)


@pytest.fixture(scope="module")
def trivial():
    return BGGContext.from_names("conformal:3,0", "trivial", max_degree=2)


class TestNeumannInverse:
    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_inverse_on_boundaries(self, standard, k):
        neumann = standard.neumann(k)
        assert neumann.inverse_on_sections()
        assert neumann.truncated_index(3) <= 4
        assert neumann.truncated_index(0) <= 1

    def test_nilpotency_indices(self, standard):
        indices = standard.nilpotency_indices(max_degree=1)
        assert sorted(indices) == [0, 1, 2, 3]
        for truncated, symbolic in indices.values():
            assert truncated == min(symbolic, 2)

    def test_empty_subbundle(self, trivial):
        neumann = trivial.neumann(1)
        assert neumann.dim == 0
        assert neumann.symbolic_index == 0
        assert neumann.truncated_index(5) == 0


class TestSplittingOperators:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_q_by_boundaries_and_quotient_agree(self, standard, k):
        assert standard.q_operator(k).equals(standard.q_operator_quotient(k))

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_pi_is_a_projection(self, standard, k):
        pi = standard.pi_operator(k)
        assert (pi @ pi).equals(pi)
        if k > 0:
            assert (standard.boundary(k) @ pi).is_zero
            assert (standard.pi_operator(k - 1) @ standard.boundary(k)).is_zero
        assert (pi @ standard.first_order_quabla(k)).is_zero
        assert (standard.first_order_quabla(k) @ pi).is_zero

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_pi_commutes_with_twisted_de_rham(self, standard, k):
        dg = standard.twisted_de_rham(k)
        left = dg @ standard.pi_operator(k)
        right = standard.pi_operator(k + 1) @ dg
        assert left.equals(right)

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_project_represent(self, standard, k):
        product = standard.project(k) @ standard.represent(k)
        assert product.equals(FlatOperator.identity(standard.homology_fiber(k), 3))


class TestBGGOperators:
    def test_orders(self, standard):
        assert standard.bgg_operator(0).order == 2
        assert standard.bgg_operator(1).order == 1
        adjoint = BGGContext.from_names("conformal:3,0", "adjoint", max_degree=2)
        assert adjoint.bgg_operator(0).order == 1

    @pytest.mark.parametrize("k", [0, 1])
    def test_sequence_is_a_complex(self, standard, k):
        product = standard.bgg_operator(k + 1) @ standard.bgg_operator(k)
        assert product.is_zero

    def test_trivial_module_gives_de_rham(self, trivial):
        for k in range(trivial.n):
            exterior = (
                trivial.harmonic_projection(k + 1)
                @ coordinate_exterior_derivative(trivial.complex, k)
                @ trivial.harmonic_embedding(k)
            )
            assert trivial.bgg_operator(k).equals(exterior)

    def test_matrix_shape(self, standard):
        matrix = standard.bgg_matrix(0, max_degree=2)
        assert matrix.shape == (10 * 5, 10 * 1)

    def test_degree_contracts(self, standard):
        with pytest.raises(ContractError):
            standard.bgg_operator(3)
        with pytest.raises(ContractError):
            standard.q_operator(0)

    def test_non_abelian_is_refused(self):
        with pytest.raises(FlatModelError):
            BGGContext.from_names("g2", "trivial")


class TestTwistorKernel:
    def test_conformal_standard(self, standard):
        kernel = twistor_kernel(standard, 4)
        assert kernel.dim == 5
        fiber = standard.homology_fiber(0)
        square = sum(
            (
                Section.monomial(fiber, exponent, "H0_0")
                for exponent in [(0, 0, 2), (0, 2, 0)]
            ),
            Section.monomial(fiber, (2, 0, 0), "H0_0"),
        )
        assert kernel.contains(square.to_vector(kernel.ambient))
        mixed = Section.monomial(fiber, (1, 1, 0), "H0_0")
        assert not kernel.contains(mixed.to_vector(kernel.ambient))

    def test_projective_standard(self):
        context = BGGContext.from_names("projective:2", "standard")
        assert twistor_kernel(context, 4).dim == 3

    def test_stabilization(self, standard):
        assert kernel_stabilization(standard, 3) == 2
        with pytest.warns(UserWarning, match="too small"):
            assert kernel_stabilization(standard, 1) is None

    @pytest.mark.slow
    def test_conformal_adjoint(self):
        context = BGGContext.from_names("conformal:3,0", "adjoint")
        assert twistor_kernel(context, 4).dim == 10
