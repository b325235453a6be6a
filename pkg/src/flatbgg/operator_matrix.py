"""Exact sparse rational linear maps between based spaces

OperatorMatrix is the universal currency of flatbgg: every fiber map, every
assembled differential operator and every exported artifact is one. The module also
holds the exact linear algebra built on fraction-free elimination: rank
factorization, solving, and inversion on invariant subspaces.
"""

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .config import config
from .exceptions import ContractError, SingularRestrictionError
from .spaces import BasedSpace, SubspaceBasis, sparse_qq, column_matrix
from .tools import to_rational


class OperatorMatrix:
    """A sparse exact-rational linear map from `domain` to `codomain`

    The entries are held by a sparse sympy DomainMatrix over QQ of shape
    (codomain.dim, domain.dim). Arithmetic always goes through the explicit
    DomainMatrix methods (matmul, add, sub) so matrices stay sparse.
    """

    def __init__(self, domain, codomain, matrix=None, name=None):
        """Initiate an OperatorMatrix

        Args:
            domain (BasedSpace): The space mapped from
            codomain (BasedSpace): The space mapped to
            matrix (DomainMatrix): The matrix. Defaults to the zero map.
            name (str): Optional name, written to export headers
        """
        self.domain = domain
        self.codomain = codomain
        self.name = name
        shape = (codomain.dim, domain.dim)
        if matrix is None:
            matrix = DomainMatrix.zeros(shape, QQ)
        matrix = sparse_qq(matrix)
        if matrix.shape != shape:
            raise ContractError(
                f"matrix of shape {matrix.shape} does not map {domain} to {codomain}"
            )
        self.matrix = matrix

    @classmethod
    def from_entries(cls, domain, codomain, entries, name=None):
        """Return an OperatorMatrix from {(row_label, column_label): value}

        Repeated keys are not possible in a dict; zero values are dropped.
        """
        dok = {}
        for (row_label, column_label), value in entries.items():
            value = to_rational(value)
            if value:
                dok[(codomain.index(row_label), domain.index(column_label))] = value
        matrix = DomainMatrix.from_dok(dok, (codomain.dim, domain.dim), QQ)
        return cls(domain, codomain, matrix, name=name)

    @classmethod
    def from_index_entries(cls, domain, codomain, dok, name=None):
        """Return an OperatorMatrix from {(row_index, column_index): value}"""
        dok = {key: to_rational(value) for key, value in dok.items() if value}
        matrix = DomainMatrix.from_dok(dok, (codomain.dim, domain.dim), QQ)
        return cls(domain, codomain, matrix, name=name)

    @classmethod
    def identity(cls, space, name=None):
        return cls(space, space, DomainMatrix.eye(space.dim, QQ), name=name)

    @classmethod
    def zero(cls, domain, codomain, name=None):
        return cls(domain, codomain, name=name)

    def __repr__(self):
        name = f"'{self.name}', " if self.name else ""
        return (
            f"{self.__class__.__name__}({name}{self.codomain.dim}x{self.domain.dim}, "
            f"nnz={self.nnz})"
        )

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def nnz(self):
        return len(self.matrix.to_dok())

    @property
    def is_zero(self):
        return self.matrix.is_zero_matrix

    @property
    def entries(self):
        """The nonzero entries as {(row_label, column_label): value}"""
        rows, columns = self.codomain.labels, self.domain.labels
        return {(rows[i], columns[j]): v for (i, j), v in self.matrix.to_dok().items()}

    def index_entries(self):
        """The nonzero entries as {(row_index, column_index): value}"""
        return self.matrix.to_dok()

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return (
            self.domain.same_labels(other.domain)
            and self.codomain.same_labels(other.codomain)
            and self.matrix == other.matrix
        )

    def _check_same_spaces(self, other, operation):
        if not (
            self.domain.same_labels(other.domain)
            and self.codomain.same_labels(other.codomain)
        ):
            raise ContractError(
                f"cannot {operation} {self} and {other}: they map between different "
                "spaces"
            )

    def __add__(self, other):
        self._check_same_spaces(other, "add")
        return OperatorMatrix(self.domain, self.codomain, self.matrix.add(other.matrix))

    def __sub__(self, other):
        self._check_same_spaces(other, "subtract")
        return OperatorMatrix(self.domain, self.codomain, self.matrix.sub(other.matrix))

    def __neg__(self):
        return OperatorMatrix(self.domain, self.codomain, self.matrix.neg())

    def scale(self, factor):
        """Return factor times this map"""
        factor = to_rational(factor)
        return OperatorMatrix(self.domain, self.codomain, self.matrix.scalarmul(factor))

    def __matmul__(self, other):
        """Composition self o other. The inner spaces must have identical labels."""
        if not self.domain.same_labels(other.codomain):
            raise ContractError(
                f"cannot compose {self} after {other}: the inner spaces differ"
            )
        product = self.matrix.matmul(other.matrix)
        return OperatorMatrix(other.domain, self.codomain, product)

    def transpose(self):
        """The transpose, as a map between the dual spaces"""
        return OperatorMatrix(
            self.codomain.dual(), self.domain.dual(), self.matrix.transpose()
        )

    def apply(self, vector):
        """Apply the map to a sparse vector {index: value}, returning a sparse vector"""
        column = column_matrix([vector], self.domain.dim)
        result = self.matrix.matmul(column)
        return {i: value for (i, _), value in result.to_dok().items()}

    def restricted(self, rows, columns, domain=None, codomain=None):
        """Return the submatrix on the given row and column indices"""
        domain = domain or BasedSpace([self.domain.labels[j] for j in columns])
        codomain = codomain or BasedSpace([self.codomain.labels[i] for i in rows])
        return OperatorMatrix(domain, codomain, self.matrix.extract(rows, columns))


def _rref(matrix):
    """Return (rref, den, pivots) by fraction-free elimination

    Pivots are chosen in column order, which is the label order of the domain, so
    every basis derived from the result is reproducible.
    """
    return matrix.rref_den(method=config.elimination_method)


def _kernel_columns(rref, den, pivots, n_columns):
    """Return the kernel of a matrix in fraction-free rref as sparse vectors

    The rows of rref have the pivot entries equal to den. For each free column j the
    kernel vector has den at j and -rref[row, j] at the pivot of each row.
    """
    rows = rref.to_dod()
    pivot_set = set(pivots)
    pivot_rows = list(enumerate(pivots))
    kernel = []
    for j in range(n_columns):
        if j in pivot_set:
            continue
        vector = {j: den}
        for row, pivot in pivot_rows:
            value = rows.get(row, {}).get(j)
            if value:
                vector[pivot] = -value
        kernel.append(vector)
    return kernel


def rank_factor(operator):
    """Return (kernel, image, rank) of an OperatorMatrix

    Args:
        operator (OperatorMatrix): The map A

    Returns:
        SubspaceBasis: ker A, in the domain
        SubspaceBasis: im A, in the codomain, spanned by the pivot columns of A
        int: rank A
    """
    matrix = operator.matrix
    n_rows, n_columns = matrix.shape
    if not n_rows or not n_columns or matrix.is_zero_matrix:
        kernel = SubspaceBasis(
            operator.domain, DomainMatrix.eye(n_columns, QQ), name="k", check=False
        )
        image = SubspaceBasis(
            operator.codomain, DomainMatrix.zeros((n_rows, 0), QQ), name="i"
        )
        return kernel, image, 0
    rref, den, pivots = _rref(matrix)
    pivots = list(pivots)
    kernel = SubspaceBasis(
        operator.domain,
        column_matrix(_kernel_columns(rref, den, pivots, n_columns), n_columns),
        name="k",
        check=False,
    )
    image = SubspaceBasis(
        operator.codomain,
        matrix.extract(list(range(n_rows)), pivots),
        name="i",
        check=False,
    )
    rank = len(pivots)
    if kernel.dim + rank != n_columns:
        raise ContractError(
            f"rank-nullity failed for {operator}: {kernel.dim} + {rank} != {n_columns}"
        )
    return kernel, image, rank


def solve_linear(operator, vector):
    """Return some x with A x = b, or None if b is not in the image of A

    The solution is the pivot-ordered one: free variables are set to zero.

    Args:
        operator (OperatorMatrix): The map A
        vector (dict or sequence): b, as sparse {index: value} or a full list

    Returns:
        dict or None: x as a sparse {index: value}, or None
    """
    n_rows, n_columns = operator.shape
    if not isinstance(vector, dict):
        vector = list(vector)
        if len(vector) != n_rows:
            raise ContractError(
                f"right hand side of length {len(vector)} for {operator}"
            )
        vector = {i: value for i, value in enumerate(vector) if value}
    elif any(not 0 <= i < n_rows for i in vector):
        raise ContractError(f"right hand side index out of range for {operator}")
    b = column_matrix([vector], n_rows)
    if b.is_zero_matrix:
        return {}
    if not n_columns:
        return None
    augmented = operator.matrix.hstack(b)
    rref, den, pivots = _rref(augmented)
    if n_columns in pivots:
        return None
    rows = rref.to_dod()
    solution = {}
    for row, pivot in enumerate(pivots):
        value = rows.get(row, {}).get(n_columns)
        if value:
            solution[pivot] = value / den
    return solution


def invert_square(matrix):
    """Return the inverse of a square DomainMatrix, or None if it is singular

    Runs the elimination on [M | I], which keeps sparse block structure.
    """
    n = matrix.shape[0]
    if not n:
        return DomainMatrix.zeros((0, 0), QQ)
    augmented = sparse_qq(matrix).hstack(DomainMatrix.eye(n, QQ))
    rref, den, pivots = _rref(augmented)
    if tuple(pivots[:n]) != tuple(range(n)):
        return None
    inverse = rref.extract(list(range(n)), list(range(n, 2 * n)))
    return inverse.scalarmul(QQ(1) / den)


def left_inverse(matrix):
    """Return a left inverse L of a full-column-rank DomainMatrix M (L M = I)

    L is supported on a set of rows of M on which M is invertible, picked by
    elimination on the transpose.
    """
    n_rows, n_columns = matrix.shape
    if not n_columns:
        return DomainMatrix.zeros((0, n_rows), QQ)
    _, _, pivot_rows = _rref(matrix.transpose())
    pivot_rows = list(pivot_rows)
    if len(pivot_rows) != n_columns:
        raise ContractError("left inverse requested for a rank deficient matrix")
    block_inverse = invert_square(matrix.extract(pivot_rows, list(range(n_columns))))
    dok = {}
    for (i, j), value in block_inverse.to_dok().items():
        dok[(i, pivot_rows[j])] = value
    return DomainMatrix.from_dok(dok, (n_columns, n_rows), QQ)


def invert_on_subspace(operator, subspace):
    """Return the inverse of A restricted to span(S), in the coordinates of S

    Args:
        operator (OperatorMatrix): The map A, with A(span S) inside span S
        subspace (SubspaceBasis): S

    Returns:
        OperatorMatrix: B on the coordinate space of S with B A|S = A|S B = identity

    Raises:
        ContractError: if A does not map span(S) into itself
        SingularRestrictionError: if A restricted to span(S) is not injective
    """
    if not operator.domain.same_labels(subspace.ambient):
        raise ContractError(f"{subspace} is not a subspace of the domain of {operator}")
    coordinates = subspace.coordinate_space()
    if not subspace.dim:
        return OperatorMatrix(coordinates, coordinates)
    image = operator.matrix.matmul(subspace.matrix)
    restriction = left_inverse(subspace.matrix).matmul(image)
    if subspace.matrix.matmul(restriction) != image:
        raise ContractError(f"{operator} does not map {subspace} into itself")
    inverse = invert_square(restriction)
    if inverse is None:
        restricted = OperatorMatrix(coordinates, coordinates, restriction)
        kernel, _, _ = rank_factor(restricted)
        first = kernel.matrix.extract(list(range(subspace.dim)), [0])
        killed = {
            operator.domain.labels[i]: str(v)
            for (i, _), v in subspace.matrix.matmul(first).to_dok().items()
        }
        raise SingularRestrictionError(
            f"singular restriction of {operator} to {subspace}: it kills {killed}"
        )
    return OperatorMatrix(coordinates, coordinates, inverse, name="inverse")
