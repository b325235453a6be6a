"""Regression tests of homology tables and twistor kernels against known values

The dimensions of H_k agree with Kostant's theorem; the twistor kernels of the
standard modules grow to dim W as the degree cutoff grows.
"""

import pytest

from flatbgg.algebras import builtin_parabolic
from flatbgg.bgg.context import BGGContext, twistor_kernel
from flatbgg.exporters import homology_table_frame
from flatbgg.homology import ChainComplexData
from flatbgg.representations import build_representation

DIMENSION_COLUMNS = ["dim_C", "dim_im_d", "dim_harmonic", "dim_im_delta", "dim_H"]


def table(algebra_name, expression):
    algebra, grading = builtin_parabolic(algebra_name)
    representation = build_representation(expression, algebra, grading)
    frame = homology_table_frame(ChainComplexData(grading, representation))
    return frame[DIMENSION_COLUMNS].values.tolist()


class TestHomologyTables:
    @pytest.mark.parametrize(
        "algebra_name, expression, expected",
        [
            (
                "conformal:3,0",
                "standard",
                [[5, 0, 1, 4, 1], [15, 4, 5, 6, 5], [15, 6, 5, 4, 5], [5, 4, 1, 0, 1]],
            ),
            (
                "conformal:3,0",
                "trivial",
                [[1, 0, 1, 0, 1], [3, 0, 3, 0, 3], [3, 0, 3, 0, 3], [1, 0, 1, 0, 1]],
            ),
            (
                "projective:2",
                "standard",
                [[3, 0, 1, 2, 1], [6, 2, 3, 1, 3], [3, 1, 2, 0, 2]],
            ),
        ],
    )
    def test_table(self, algebra_name, expression, expected):
        assert table(algebra_name, expression) == expected

    def test_g2_trivial(self):
        assert [row[-1] for row in table("g2", "trivial")] == [1, 2, 3, 3, 2, 1]


class TestTwistorKernels:
    @pytest.mark.parametrize(
        "algebra_name, dims",
        [("conformal:3,0", [1, 4, 5, 5]), ("projective:2", [1, 3, 3, 3])],
    )
    def test_kernel_dims_by_cutoff(self, algebra_name, dims):
        context = BGGContext.from_names(algebra_name, "standard")
        assert [twistor_kernel(context, D).dim for D in range(4)] == dims
