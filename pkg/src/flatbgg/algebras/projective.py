"""The projective algebra sl(n+1) with the parabolic stabilizing a line"""

from sympy import QQ

from ..exceptions import AlgebraError
from ..lie_algebra import (
    lie_algebra_from_matrices,
    trace_dual_matrices,
    ParabolicGrading,
    square_matrix,
    diagonal_matrix,
)


def projective_algebra(n):
    """Return (LieAlgebraData, ParabolicGrading) of projective geometry in dimension n

    The grading element is the traceless diag(n/(n+1), -1/(n+1), ..., -1/(n+1)), so
    the standard module has the non-integral weights n/(n+1) and -1/(n+1).

    Args:
        n (int): The dimension, at least 2
    """
    n = int(n)
    if n < 2:
        raise AlgebraError(f"projective:{n} is not supported. Need n >= 2")
    size = n + 1

    def unit(a, b):
        return square_matrix(size, {(a, b): 1})

    m_labels = [f"P{j}" for j in range(1, size)]
    m_matrices = [unit(0, j) for j in range(1, size)]
    m_dual_labels = [f"K{j}" for j in range(1, size)]
    m_dual_matrices = trace_dual_matrices(
        m_matrices, [unit(j, 0) for j in range(1, size)]
    )

    g0_labels = ["E"]
    g0_matrices = [
        diagonal_matrix([QQ(n, size)] + [QQ(-1, size)] * n),
    ]
    for i in range(1, n):
        g0_labels.append(f"H{i}")
        g0_matrices.append(square_matrix(size, {(i, i): 1, (i + 1, i + 1): -1}))
    for i in range(1, size):
        for j in range(1, size):
            if i != j:
                g0_labels.append(f"A{i}{j}" if n < 10 else f"A{i}_{j}")
                g0_matrices.append(unit(i, j))

    name = f"projective:{n}"
    algebra = lie_algebra_from_matrices(
        m_labels + g0_labels + m_dual_labels,
        m_matrices + g0_matrices + m_dual_matrices,
        name=name,
    )
    grading = ParabolicGrading(
        algebra, {"E": QQ(1)}, m_labels=m_labels, m_dual_labels=m_dual_labels
    )
    return algebra, grading
