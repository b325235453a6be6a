"""Tests for spaces.py"""
import pytest
from sympy import QQ

from flatbgg.exceptions import ContractError
from flatbgg.spaces import BasedSpace, SubspaceBasis, dual_label


@pytest.fixture
def space():
    return BasedSpace(["a", "b", "c"], weights=[1, 0, "-1/2"], name="V")


class TestBasedSpace:
    def test_labels_must_be_distinct(self):
        with pytest.raises(ContractError):
            BasedSpace(["a", "a"])

    def test_weights_by_label(self):
        space = BasedSpace(["a", "b"], weights={"b": 2, "a": "1/3"})
        assert space.weights == (QQ(1, 3), QQ(2))
        assert space.weight("b") == 2

    def test_weight_multiset(self, space):
        assert space.weight_multiset() == ["-1/2", "0", "1"]

    def test_dual(self, space):
        dual = space.dual()
        assert dual.labels == ("a*", "b*", "c*")
        assert dual.weights == (QQ(-1), QQ(0), QQ(1, 2))
        assert dual.name == "V*"
        assert dual.dual() == space

    def test_dual_label(self):
        assert dual_label("e1") == "e1*"
        assert dual_label("e1*") == "e1"

    def test_unknown_label(self, space):
        with pytest.raises(ContractError):
            space.index("d")


class TestSubspaceBasis:
    """Test SubspaceBasis with vectors a + b and c"""

    @pytest.fixture
    def subspace(self, space):
        return SubspaceBasis(space, [{0: 1, 1: 1}, {2: 1}], name="w")

    def test_dependent_vectors_are_refused(self, space):
        with pytest.raises(ContractError):
            SubspaceBasis(space, [{0: 1}, {0: 2}])

    def test_coordinates(self, subspace):
        assert subspace.coordinates({0: 2, 1: 2, 2: -1}) == {0: QQ(2), 1: QQ(-1)}
        assert subspace.coordinates({0: 1}) is None
        assert not subspace.contains({1: 1})

    def test_weights(self, subspace):
        assert subspace.weights() == [None, QQ(-1, 2)]

    def test_embedding(self, subspace):
        embedding = subspace.embedding()
        assert embedding.domain.labels == ("w0", "w1")
        assert embedding.codomain == subspace.ambient
        assert embedding.nnz == 3

    def test_span_equals(self, space, subspace):
        other = SubspaceBasis(space, [{0: 1, 1: 1, 2: 1}, {2: 3}])
        assert subspace.span_equals(other)
        assert not subspace.span_equals(SubspaceBasis(space, [{0: 1}, {2: 1}]))
