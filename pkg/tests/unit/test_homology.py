"""Tests for homology.py: chain spaces, delta, d, quabla and the Hodge split"""
import pytest

from flatbgg.algebras import builtin_parabolic
from flatbgg.exceptions import ContractError
from flatbgg.homology import ChainComplexData
from flatbgg.operator_matrix import OperatorMatrix
from flatbgg.representations import build_representation


def complex_of(name, expression):
    algebra, grading = builtin_parabolic(name)
    return ChainComplexData(grading, build_representation(expression, algebra, grading))


@pytest.fixture(scope="module")
def standard_complex():
    return complex_of("conformal:3,0", "standard")


class TestChainComplex:
    def test_chain_space_dimensions(self, standard_complex):
        assert [space.dim for space in standard_complex.spaces] == [5, 15, 15, 5]

    def test_chain_labels(self, standard_complex):
        assert standard_complex.spaces[0].labels[0] == "1|v0"
        assert standard_complex.spaces[2].labels[0] == "K1^K2|v0"

    @pytest.mark.parametrize("k", [2, 3])
    def test_delta_squared(self, standard_complex, k):
        product = standard_complex.delta(k - 1) @ standard_complex.delta(k)
        assert product.is_zero

    @pytest.mark.parametrize("k", [0, 1])
    def test_d_squared(self, standard_complex, k):
        assert (standard_complex.d(k + 1) @ standard_complex.d(k)).is_zero

    def test_end_maps_are_zero(self, standard_complex):
        delta_0 = standard_complex.delta(0)
        assert delta_0.shape == (0, 5)
        assert delta_0.is_zero
        assert delta_0.codomain.name == "C_-1"
        d_3 = standard_complex.d(3)
        assert d_3.shape == (0, standard_complex.spaces[3].dim)
        assert (d_3 @ standard_complex.d(2)).is_zero
        assert (standard_complex.delta(0) @ standard_complex.delta(1)).is_zero

    def test_degree_contracts(self, standard_complex):
        with pytest.raises(ContractError):
            standard_complex.delta(4)
        with pytest.raises(ContractError):
            standard_complex.d(-1)
        with pytest.raises(ContractError):
            standard_complex.p_action("P1", 1)

    def test_delta_is_p_equivariant(self, standard_complex):
        for label in standard_complex.grading.p_labels:
            left = standard_complex.p_action(label, 0) @ standard_complex.delta(1)
            right = standard_complex.delta(1) @ standard_complex.p_action(label, 1)
            assert (left - right).is_zero


class TestHomology:
    @pytest.mark.parametrize(
        "name, expression, dims",
        [
            ("conformal:3,0", "standard", [1, 5, 5, 1]),
            ("conformal:3,0", "trivial", [1, 3, 3, 1]),
            ("projective:2", "standard", [1, 3, 2]),
        ],
    )
    def test_homology_dims(self, name, expression, dims):
        complex_data = complex_of(name, expression)
        assert complex_data.homology_dims() == dims
        assert complex_data.euler_characteristic() == 0

    def test_hodge_split_fills_the_chains(self, standard_complex):
        for k, space in enumerate(standard_complex.spaces):
            assert sum(standard_complex.hodge_split(k).dims) == space.dim

    def test_homology_table(self, standard_complex):
        table = standard_complex.homology_table()
        assert [row["k"] for row in table] == [0, 1, 2, 3]
        assert table[0] == {
            "k": 0,
            "dim_C": 5,
            "dim_im_d": 0,
            "dim_harmonic": 1,
            "dim_im_delta": 4,
            "dim_H": 1,
            "harmonic_weights": "1",
        }

    def test_projection_inverts_embedding(self, standard_complex):
        module = standard_complex.homology(1)
        product = module.projection @ module.embedding
        assert (product - OperatorMatrix.identity(module.space)).is_zero

    def test_m_dual_acts_trivially(self, standard_complex):
        for k in range(standard_complex.n + 1):
            module = standard_complex.homology(k)
            for label in standard_complex.grading.m_dual_labels:
                action = standard_complex.p_action(label, k)
                assert (module.projection @ action @ module.embedding).is_zero

    def test_g2_trivial(self):
        complex_data = complex_of("g2", "trivial")
        assert not complex_data.is_abelian
        assert complex_data.homology_dims() == [1, 2, 3, 3, 2, 1]
        assert complex_data.euler_characteristic() == 0

    @pytest.mark.slow
    def test_conformal_4_adjoint(self):
        assert complex_of("conformal:4,0", "adjoint").homology(2).dim == 10
