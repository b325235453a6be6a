"""Tests for the dual BGG sequence and the cap product of bgg/duality.py"""
import numpy as np
import pytest

from flatbgg.bgg import BGGContext, CapProduct, DualBGGContext
from flatbgg.bgg.duality import (
    cap_pairing_residual,
    divergence_adjointness_residual,
    pair_sections,
    scalar_polynomial,
)
from flatbgg.bgg.pairings import unit_pairing
from flatbgg.exceptions import ContractError, PairingError


@pytest.fixture(scope="module")
def contexts():
    standard = BGGContext.from_names("conformal:3,0", "standard", max_degree=2)
    trivial = BGGContext.from_names("conformal:3,0", "trivial", max_degree=2)
    dual, dual_trivial = DualBGGContext(standard), DualBGGContext(trivial)
    pairing = unit_pairing(standard.representation, trivial.representation)
    cap = CapProduct(pairing, standard, dual_trivial, dual)
    return standard, dual, dual_trivial, cap


class TestDualSequence:
    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_pi_hat_is_the_adjoint(self, contexts, k):
        _, dual, _, _ = contexts
        assert dual.pi_is_adjoint(k)

    @pytest.mark.parametrize("k", [0, 1])
    def test_dual_sequence_is_a_complex(self, contexts, k):
        _, dual, _, _ = contexts
        assert (dual.bgg_operator(k) @ dual.bgg_operator(k + 1)).is_zero

    def test_dual_fibers(self, contexts):
        standard, dual, _, _ = contexts
        for k in range(standard.n + 1):
            fiber = dual.homology_fiber(k)
            assert fiber.same_labels(standard.homology_fiber(k).dual())


class TestCapProduct:
    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_divergence_adjointness(self, contexts, k):
        standard, dual, dual_trivial, cap = contexts
        rng = np.random.default_rng(k)
        for _ in range(3):
            alpha = standard.random_homology_section(k, rng)
            b = dual.random_homology_section(k + 1, rng)
            residual = divergence_adjointness_residual(cap, dual_trivial, alpha, k, b)
            assert residual == {}

    def test_cap_in_degree_zero_is_the_pairing(self, contexts):
        standard, dual, _, cap = contexts
        rng = np.random.default_rng(8)
        alpha = standard.random_homology_section(0, rng)
        b = dual.random_homology_section(0, rng)
        assert cap_pairing_residual(cap, alpha, b) == {}
        assert pair_sections(alpha, b)

    def test_pairing_needs_dual_fibers(self, contexts):
        standard, _, _, _ = contexts
        alpha = standard.random_homology_section(1, np.random.default_rng(0))
        with pytest.raises(PairingError):
            pair_sections(alpha, alpha)
        with pytest.raises(ContractError):
            scalar_polynomial(alpha)
