"""The conformal algebra so(p+1, q+1) with its |1|-grading

The defining module has the basis v0, ..., v_{n+1}, n = p + q, with the form
2 x0 x_{n+1} + x1^2 + ... + xp^2 - x_{p+1}^2 - ... - xn^2. The grading element acts
as diag(1, 0, ..., 0, -1). m is spanned by P1, ..., Pn (weight 1), m* by K1, ..., Kn
(weight -1, dual to the P's under the trace form) and g0 by E and the rotations M_ij.
p = g0 + m* stabilizes the null line spanned by v_{n+1}, which has weight -1.
"""

from sympy import QQ

from ..exceptions import AlgebraError
from ..lie_algebra import (
    lie_algebra_from_matrices,
    trace_dual_matrices,
    ParabolicGrading,
    square_matrix,
    diagonal_matrix,
)


def _rotation_label(i, j, n):
    return f"M{i}{j}" if n < 10 else f"M{i}_{j}"


def conformal_algebra(p, q=0):
    """Return (LieAlgebraData, ParabolicGrading) of conformal geometry of signature
    (p, q)

    Args:
        p (int): The number of positive directions
        q (int): The number of negative directions. p + q must be at least 3.
    """
    p, q = int(p), int(q)
    n = p + q
    if p < 0 or q < 0 or n < 3:
        raise AlgebraError(
            f"conformal:{p},{q} is not supported. Need p, q >= 0 and p + q >= 3"
        )
    size = n + 2
    signs = [1] * p + [-1] * q
    form = {(0, n + 1): 1, (n + 1, 0): 1}
    for i in range(1, n + 1):
        form[(i, i)] = signs[i - 1]
    J = square_matrix(size, form)

    def element(a, b):
        """J (E_ab - E_ba), which preserves the form"""
        return J.matmul(square_matrix(size, {(a, b): 1, (b, a): -1}))

    m_labels = [f"P{i}" for i in range(1, n + 1)]
    m_matrices = [element(i, n + 1) for i in range(1, n + 1)]
    candidates = [element(0, i) for i in range(1, n + 1)]
    m_dual_labels = [f"K{i}" for i in range(1, n + 1)]
    m_dual_matrices = trace_dual_matrices(m_matrices, candidates)

    g0_labels = ["E"]
    g0_matrices = [diagonal_matrix([1] + [0] * n + [-1])]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            g0_labels.append(_rotation_label(i, j, n))
            g0_matrices.append(element(i, j))

    name = f"conformal:{p},{q}"
    algebra = lie_algebra_from_matrices(
        m_labels + g0_labels + m_dual_labels,
        m_matrices + g0_matrices + m_dual_matrices,
        name=name,
    )
    grading = ParabolicGrading(
        algebra, {"E": QQ(1)}, m_labels=m_labels, m_dual_labels=m_dual_labels
    )
    return algebra, grading
