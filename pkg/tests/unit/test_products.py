"""Tests for the cup and triple products of bgg/products.py"""
import numpy as np
import pytest

from flatbgg.bgg import BGGContext, twistor_kernel
from flatbgg.bgg.pairings import triple_from_pairing, triple_tensor, unit_pairing
from flatbgg.bgg.products import (
    CupProduct,
    TripleProduct,
    massey_representative,
    solve_preimage,
)
from flatbgg.exceptions import ContractError, PairingError
from flatbgg.flat_model import Section
from flatbgg.homology import ChainComplexData


@pytest.fixture(scope="module")
def trivial():
    return BGGContext.from_names("conformal:3,0", "trivial", max_degree=2)


@pytest.fixture(scope="module")
def forms(trivial):
    """The cup product of forms, trivial x trivial -> trivial"""
    module = trivial.representation
    return CupProduct(unit_pairing(module, module), trivial, trivial, trivial)


@pytest.fixture(scope="module")
def triple(trivial):
    module = trivial.representation
    contexts = {key: trivial for key in ("1", "2", "3", "12", "23", "4")}
    return TripleProduct(triple_from_pairing(unit_pairing(module, module)), contexts)


@pytest.fixture(scope="module")
def tensor_triple():
    """The tensor triple product of W = V throughout, V the standard module"""
    standard = BGGContext.from_names("conformal:3,0", "standard", max_degree=1)
    module = standard.representation
    pairings = triple_tensor(module, module, module)

    def context_of(representation):
        complex_data = ChainComplexData(standard.grading, representation)
        return BGGContext(complex_data, max_degree=1)

    square = context_of(pairings.first_pair.target)
    contexts = {"1": standard, "2": standard, "3": standard, "12": square}
    contexts["23"] = square
    contexts["4"] = context_of(pairings.pair_first_with_third.target)
    return TripleProduct(pairings, contexts)


def constant_form(context, k, i):
    fiber = context.homology_fiber(k)
    return Section.monomial(fiber, (0, 0, 0), fiber.labels[i])


class TestCupProduct:
    @pytest.mark.parametrize("k, l", [(0, 0), (0, 1), (1, 1)])
    def test_leibniz(self, trivial, forms, k, l):
        rng = np.random.default_rng(3)
        for _ in range(3):
            alpha = trivial.random_homology_section(k, rng)
            beta = trivial.random_homology_section(l, rng)
            assert forms.leibniz_residual(alpha, k, beta, l).is_zero

    def test_graded_commutative_on_one_forms(self, trivial, forms):
        a, b = constant_form(trivial, 1, 0), constant_form(trivial, 1, 1)
        product = forms(a, 1, b, 1)
        assert not product.is_zero
        assert product == -forms(b, 1, a, 1)
        assert forms(a, 1, a, 1).is_zero

    def test_vacuous_degrees(self, trivial, forms):
        a = constant_form(trivial, 2, 0)
        assert forms.leibniz_residual(a, 2, a, 2) is None
        with pytest.raises(ContractError):
            forms(a, 2, a, 2)

    def test_twistor_extension(self, trivial):
        standard = BGGContext.from_names("conformal:3,0", "standard", max_degree=2)
        pairing = unit_pairing(standard.representation, trivial.representation)
        cup = CupProduct(pairing, standard, trivial, standard)
        kernel = twistor_kernel(standard, 2)
        one = constant_form(trivial, 0, 0)
        for vector in kernel.vectors:
            alpha = Section.from_vector(kernel.ambient, vector)
            residuals = cup.twistor_extension_residuals(alpha, one)
            assert all(residual.is_zero for residual in residuals)

    def test_mismatched_contexts(self, trivial):
        standard = BGGContext.from_names("conformal:3,0", "standard")
        module = trivial.representation
        with pytest.raises(PairingError):
            CupProduct(unit_pairing(module, module), standard, trivial, trivial)


class TestPreimages:
    def test_exact_target(self, trivial):
        fiber = trivial.homology_fiber(0)
        source = Section.monomial(fiber, (1, 1, 0), "H0_0")
        target = trivial.bgg_operator(0).apply(source)
        preimage = solve_preimage(trivial, 0, target)
        assert trivial.bgg_operator(0).apply(preimage) == target

    def test_non_closed_target(self, trivial):
        fiber = trivial.homology_fiber(1)
        target = Section.monomial(fiber, (1, 1, 1), fiber.labels[0])
        assert solve_preimage(trivial, 0, target) is None

    def test_zero_target(self, trivial):
        zero = Section.zero(trivial.homology_fiber(1), 3)
        assert solve_preimage(trivial, 0, zero).is_zero


class TestTripleProduct:
    def test_associator(self, trivial, triple):
        rng = np.random.default_rng(5)
        for k, l, m in ((0, 0, 0), (0, 1, 0), (1, 0, 1)):
            sections = [trivial.random_homology_section(d, rng) for d in (k, l, m)]
            residual = triple.associator_residual(
                sections[0], k, sections[1], l, sections[2], m
            )
            assert residual.is_zero

    def test_massey_representative_is_closed(self, trivial, triple):
        alpha, beta, gamma = (constant_form(trivial, 1, i) for i in range(3))
        representative = massey_representative(triple, alpha, 1, beta, 1, gamma, 1)
        assert trivial.bgg_operator(2).apply(representative).is_zero

    def test_massey_needs_exact_products(self, trivial, triple):
        fiber = trivial.homology_fiber(1)
        alpha = Section.monomial(fiber, (1, 1, 1), fiber.labels[0])
        beta = constant_form(trivial, 1, 1)
        with pytest.raises(ContractError, match="exact"):
            massey_representative(triple, alpha, 1, beta, 1, beta, 1)


class TestStandardCoefficients:
    @pytest.mark.parametrize("k, l", [(0, 0), (0, 1), (1, 1)])
    def test_leibniz(self, tensor_triple, k, l):
        standard = tensor_triple.contexts["1"]
        cup = tensor_triple.cup_12
        rng = np.random.default_rng(17)
        for _ in range(2):
            alpha = standard.random_homology_section(k, rng)
            beta = standard.random_homology_section(l, rng)
            assert cup.leibniz_residual(alpha, k, beta, l).is_zero

    @pytest.mark.parametrize("degrees", [(0, 0, 0), (0, 1, 0)])
    def test_associator(self, tensor_triple, degrees):
        standard = tensor_triple.contexts["1"]
        rng = np.random.default_rng(23)
        alpha, beta, gamma = (standard.random_homology_section(k, rng) for k in degrees)
        k, l, m = degrees
        residual = tensor_triple.associator_residual(alpha, k, beta, l, gamma, m)
        assert residual.is_zero
