"""Tests for bgg/a_infinity.py"""
import warnings
from unittest.mock import patch

import numpy as np
import pytest

from flatbgg.bgg import BGGContext
from flatbgg.bgg.a_infinity import (
    AInfinityMaps,
    a_infinity_relation,
    expand_lambda,
    lambda_term_count,
    select_sign_convention,
)
from flatbgg.bgg.pairings import composition_pairing, triple_from_pairing
from flatbgg.bgg.products import CupProduct, TripleProduct
from flatbgg.config import config
from flatbgg.exceptions import ContractError
from flatbgg.homology import ChainComplexData
from flatbgg.representations import end_representation


class TestLambdaExpansion:
    def test_expansion(self):
        assert expand_lambda(2) == ["-a1 ^ -a2"]
        assert expand_lambda(3) == ["-a1 ^ Q(-a2 ^ -a3)", "Q(-a1 ^ -a2) ^ -a3"]

    @pytest.mark.parametrize("m, count", [(2, 1), (3, 2), (4, 5)])
    def test_term_counts(self, m, count):
        with pytest.warns(UserWarning, match="Catalan"):
            assert lambda_term_count(m) == count

    def test_arity_one(self):
        with pytest.raises(ContractError):
            expand_lambda(1)


@pytest.fixture(scope="module")
def de_rham_algebra():
    """End of the trivial module, the forms with the wedge product"""
    trivial = BGGContext.from_names("conformal:3,0", "trivial", max_degree=2)
    algebra = end_representation(trivial.representation)
    context = BGGContext(ChainComplexData(trivial.grading, algebra), max_degree=2)
    return composition_pairing(algebra, algebra), context


class TestAInfinityMaps:
    def test_sign_convention_and_relations(self, de_rham_algebra):
        pairing, context = de_rham_algebra
        rng = np.random.default_rng(11)
        samples = []
        for degrees in ((0, 0), (0, 1), (0, 0, 0), (0, 1, 0)):
            sections = [context.random_homology_section(k, rng) for k in degrees]
            samples.append((sections, degrees))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            shift, passed = select_sign_convention(pairing, context, samples)
        assert passed
        maps = AInfinityMaps(pairing, context, shift=shift)
        for sections, degrees in samples:
            assert maps.relation_residual(sections, degrees).is_zero

    def test_mu_one_is_bgg(self, de_rham_algebra):
        pairing, context = de_rham_algebra
        maps = AInfinityMaps(pairing, context)
        section = context.random_homology_section(1, np.random.default_rng(2))
        assert maps.mu([section], [1]) == context.bgg_operator(1).apply(section)
        assert maps.mu([section], [3]) is None
        assert maps.relation_residual([section], [1]).is_zero

    def test_high_arity_warns(self, de_rham_algebra):
        pairing, context = de_rham_algebra
        rng = np.random.default_rng(4)
        sections = [context.random_homology_section(0, rng) for _ in range(2)]
        with patch.object(config, "max_a_infinity_arity", 1):
            with pytest.warns(UserWarning, match="max_a_infinity_arity"):
                a_infinity_relation(2, pairing, context, sections, [0, 0])


@pytest.fixture(scope="module")
def endomorphism_algebra():
    """End(V) of the standard module V with composition"""
    standard = BGGContext.from_names("conformal:3,0", "standard", max_degree=1)
    algebra = end_representation(standard.representation)
    context = BGGContext(ChainComplexData(standard.grading, algebra), max_degree=1)
    return composition_pairing(algebra, algebra), context


class TestEndomorphismCoefficients:
    @pytest.mark.parametrize("degrees", [(0, 0, 1), (0, 1, 0), (1, 0, 1)])
    def test_arity_three_is_the_associator(self, endomorphism_algebra, degrees):
        pairing, context = endomorphism_algebra
        maps = AInfinityMaps(pairing, context)
        cup = CupProduct(pairing, context, context, context)
        contexts = {key: context for key in ("1", "2", "3", "12", "23", "4")}
        triple = TripleProduct(triple_from_pairing(pairing), contexts)
        rng = np.random.default_rng(29)
        sections = [context.random_homology_section(k, rng) for k in degrees]
        k, l, m = degrees
        a, b, c = sections
        assert maps.mu([a, b], [k, l]) == cup(a, k, b, l)
        assert maps.mu([b, c], [l, m]) == cup(b, l, c, m)
        assert maps.mu(sections, degrees) == triple(a, k, b, l, c, m)
        relation = maps.relation_residual(sections, degrees)
        associator = triple.associator_residual(a, k, b, l, c, m)
        assert relation == -associator
        assert relation.is_zero

    def test_arity_two_is_leibniz(self, endomorphism_algebra):
        pairing, context = endomorphism_algebra
        maps = AInfinityMaps(pairing, context)
        cup = CupProduct(pairing, context, context, context)
        rng = np.random.default_rng(31)
        sections = [context.random_homology_section(k, rng) for k in (0, 1)]
        relation = maps.relation_residual(sections, [0, 1])
        assert relation == cup.leibniz_residual(sections[0], 0, sections[1], 1)
        assert relation.is_zero
