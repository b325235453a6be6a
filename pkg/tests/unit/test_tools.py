"""Tests for tools.py"""
from fractions import Fraction

import numpy as np
import pytest
from sympy import QQ

from flatbgg.tools import (
    binomial,
    catalan_number,
    interior_index,
    numerator_denominator,
    rational_to_string,
    replace_index,
    to_rational,
    wedge_indices,
)


class TestRationals:
    """Test the conversions to and from exact rationals"""

    @pytest.mark.parametrize(
        "value, expected",
        [
            (3, QQ(3)),
            ("2/4", QQ(1, 2)),
            (Fraction(-3, 9), QQ(-1, 3)),
            (np.int64(7), QQ(7)),
        ],
    )
    def test_to_rational(self, value, expected):
        assert to_rational(value) == expected

    def test_floats_are_refused(self):
        with pytest.raises(TypeError):
            to_rational(0.5)

    @pytest.mark.parametrize(
        "value, string", [(QQ(1, 2), "1/2"), (QQ(-4, 2), "-2"), (QQ(0), "0")]
    )
    def test_rational_to_string(self, value, string):
        assert rational_to_string(value) == string
        assert to_rational(string) == value

    def test_numerator_denominator(self):
        assert numerator_denominator(QQ(-6, 4)) == (-3, 2)
        assert numerator_denominator(5) == (5, 1)


class TestCounting:
    def test_binomial(self):
        assert binomial(5, 2) == 10
        assert binomial(3, 5) == 0

    @pytest.mark.parametrize("m, expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14)])
    def test_catalan_number(self, m, expected):
        assert catalan_number(m) == expected


class TestMultiIndices:
    """Test the sign conventions of wedge, interior and replacement of indices"""

    def test_wedge_indices(self):
        assert wedge_indices((0,), (1,)) == (1, (0, 1))
        assert wedge_indices((1,), (0,)) == (-1, (0, 1))
        assert wedge_indices((0, 2), (1,)) == (-1, (0, 1, 2))
        assert wedge_indices((0, 1), (1,)) == (0, None)

    def test_interior_index(self):
        assert interior_index(0, (0, 2)) == (1, (2,))
        assert interior_index(2, (0, 2)) == (-1, (0,))
        assert interior_index(1, (0, 2)) == (0, None)

    def test_replace_index(self):
        assert replace_index((0, 1), 0, 2) == (-1, (1, 2))
        assert replace_index((0, 2), 1, 1) == (1, (0, 1))
        assert replace_index((0, 1), 0, 1) == (0, None)
