"""Split g2 with the |3|-grading obtained by crossing the short simple root

The algebra is generated inside gl(7) by Chevalley generators acting on the
7-dimensional module with weights 2a+b, a+b, a, 0, -a, -(a+b), -(2a+b), where a is the
short and b the long simple root. The positive root vectors are built by iterated
brackets of e_a and e_b.
"""

from sympy import QQ

from ..exceptions import AlgebraError
from ..lie_algebra import (
    lie_algebra_from_matrices,
    trace_dual_matrices,
    ParabolicGrading,
    square_matrix,
    diagonal_matrix,
    commutator,
)

SIZE = 7


def _units(*entries):
    """Sum of value * E_ij (1-based, E_ij maps v_j to v_i) for (i, j, value)"""
    return square_matrix(SIZE, {(i - 1, j - 1): value for i, j, value in entries})


def g2_algebra():
    """Return (LieAlgebraData, ParabolicGrading) of split g2 graded by E = 2 h_a + 3 h_b

    The layer dimensions of m are 2, 1, 2 in weights 1, 2, 3.
    """
    e_a = _units((1, 2, 1), (3, 4, 2), (4, 5, 1), (6, 7, 1))
    f_a = _units((2, 1, 1), (4, 3, 1), (5, 4, 2), (7, 6, 1))
    e_b = _units((2, 3, 1), (5, 6, 1))
    f_b = _units((3, 2, 1), (6, 5, 1))
    h_b = diagonal_matrix([0, 1, -1, 0, 1, -1, 0])
    grading_matrix = diagonal_matrix([2, 1, 1, 0, -1, -1, -2])

    x_ab = commutator(e_a, e_b)
    x_2ab = commutator(e_a, x_ab)
    x_3ab = commutator(e_a, x_2ab)
    x_3a2b = commutator(e_b, x_3ab)
    y_ab = commutator(f_a, f_b)
    y_2ab = commutator(f_a, y_ab)
    y_3ab = commutator(f_a, y_2ab)
    y_3a2b = commutator(f_b, y_3ab)

    m_labels = ["Xa", "Xab", "X2ab", "X3ab", "X3a2b"]
    m_matrices = [e_a, x_ab, x_2ab, x_3ab, x_3a2b]
    if any(matrix.is_zero_matrix for matrix in m_matrices):
        raise AlgebraError("the g2 root vectors degenerated")
    m_dual_labels = ["Ya", "Yab", "Y2ab", "Y3ab", "Y3a2b"]
    m_dual_matrices = trace_dual_matrices(
        m_matrices, [f_a, y_ab, y_2ab, y_3ab, y_3a2b]
    )
    g0_labels = ["E", "Hb", "Xb", "Yb"]
    g0_matrices = [grading_matrix, h_b, e_b, f_b]

    algebra = lie_algebra_from_matrices(
        m_labels + g0_labels + m_dual_labels,
        m_matrices + g0_matrices + m_dual_matrices,
        name="g2",
    )
    grading = ParabolicGrading(
        algebra, {"E": QQ(1)}, m_labels=m_labels, m_dual_labels=m_dual_labels
    )
    return algebra, grading
