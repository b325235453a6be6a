"""This module defines BasedSpace and SubspaceBasis, the elementary structures of flatbgg

A BasedSpace is a finite-dimensional rational vector space with an ordered basis of
labels, each carrying a rational geometric weight. Every matrix in flatbgg is an
OperatorMatrix between two BasedSpaces, and every subspace (cycles, boundaries,
harmonic chains, kernels) is a SubspaceBasis of one.
"""

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import ContractError
from .tools import to_rational, rational_to_string

DUAL_SUFFIX = "*"


def dual_label(label):
    """Return the label of the dual basis vector. Dual of dual is the original."""
    if label.endswith(DUAL_SUFFIX):
        return label[: -len(DUAL_SUFFIX)]
    return label + DUAL_SUFFIX


class BasedSpace:
    """A rational vector space with an ordered basis of distinct labels and weights"""

    def __init__(self, labels, weights=None, name=None):
        """Initiate a BasedSpace

        Args:
            labels (iterable of str): The basis labels, in order. Must be distinct.
            weights (dict or sequence): The geometric weight of each basis vector,
                either as {label: weight} or in the order of labels. Defaults to 0.
            name (str): Optional name, used in representations and file headers.
        """
        self.labels = tuple(labels)
        self.name = name
        self._index = {label: i for i, label in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            duplicates = sorted(
                {label for label in self.labels if self.labels.count(label) > 1}
            )
            raise ContractError(f"BasedSpace labels must be distinct. Got {duplicates}")
        if weights is None:
            weights = [0] * len(self.labels)
        elif isinstance(weights, dict):
            weights = [weights[label] for label in self.labels]
        if len(weights) != len(self.labels):
            raise ContractError(
                f"got {len(weights)} weights for {len(self.labels)} labels"
            )
        self.weights = tuple(to_rational(w) for w in weights)

    def __repr__(self):
        name = f"'{self.name}', " if self.name else ""
        return f"{self.__class__.__name__}({name}dim={self.dim})"

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, BasedSpace):
            return NotImplemented
        return self.labels == other.labels and self.weights == other.weights

    def __hash__(self):
        return hash(self.labels)

    @property
    def dim(self):
        return len(self.labels)

    def index(self, label):
        """Return the position of `label` in the basis"""
        try:
            return self._index[label]
        except KeyError:
            raise ContractError(f"'{label}' is not a basis label of {self}")

    def weight(self, label):
        """Return the geometric weight of the basis vector `label`"""
        return self.weights[self.index(label)]

    def weight_multiset(self):
        """Return the sorted list of weights as strings, for tables and reports"""
        return [rational_to_string(w) for w in sorted(self.weights)]

    def same_labels(self, other):
        """Whether `other` has the identical label list (needed for composition)"""
        return self.labels == other.labels

    def dual(self, name=None):
        """Return the dual space: dual labels and negated weights"""
        if name is None and self.name:
            name = dual_label(self.name)
        return BasedSpace(
            [dual_label(label) for label in self.labels],
            [-w for w in self.weights],
            name=name,
        )

    @classmethod
    def coordinate_space(cls, dim, prefix="s", weights=None, name=None):
        """Return a space with labels prefix0, prefix1, ..."""
        return cls([f"{prefix}{i}" for i in range(dim)], weights=weights, name=name)


def sparse_qq(matrix):
    """Return `matrix` as a sparse DomainMatrix over QQ"""
    if matrix.domain != QQ:
        matrix = matrix.convert_to(QQ)
    return matrix.to_sparse()


def column_matrix(vectors, dim):
    """Return the DomainMatrix with the sparse vectors ({index: value}) as columns"""
    dok = {}
    for j, vector in enumerate(vectors):
        for i, value in vector.items():
            if value:
                dok[(i, j)] = to_rational(value)
    return DomainMatrix.from_dok(dok, (dim, len(vectors)), QQ)


def columns_of(matrix):
    """Return the columns of a DomainMatrix as a list of sparse {index: value} dicts"""
    n_rows, n_cols = matrix.shape
    columns = [{} for _ in range(n_cols)]
    for (i, j), value in matrix.to_dok().items():
        columns[j][i] = value
    return columns


class SubspaceBasis:
    """A linearly independent list of vectors in a BasedSpace

    The vectors are stored as the columns of a sparse DomainMatrix of shape
    (ambient.dim, number of vectors). Linear independence is verified at
    construction unless the caller already knows it (check=False), as when the
    vectors come straight out of an elimination.
    """

    def __init__(self, ambient, vectors, name=None, check=True):
        """Initiate a SubspaceBasis

        Args:
            ambient (BasedSpace): The space containing the vectors
            vectors (DomainMatrix or list of dict): The vectors, as the columns of a
                matrix or as sparse {index: value} dicts
            name (str): Name of the subspace, used as prefix of its coordinate labels
            check (bool): Whether to verify linear independence
        """
        self.ambient = ambient
        self.name = name or "v"
        if isinstance(vectors, DomainMatrix):
            matrix = sparse_qq(vectors)
        else:
            matrix = column_matrix(list(vectors), ambient.dim)
        if matrix.shape[0] != ambient.dim:
            raise ContractError(
                f"vectors of length {matrix.shape[0]} do not fit in {ambient}"
            )
        self.matrix = matrix
        self._left_inverse = None
        if check and self.dim and matrix.rank() != self.dim:
            raise ContractError(f"the vectors of {self} are not linearly independent")

    def __repr__(self):
        return (
            f"{self.__class__.__name__}('{self.name}', dim={self.dim}, "
            f"ambient_dim={self.ambient.dim})"
        )

    def __len__(self):
        return self.dim

    @property
    def dim(self):
        return self.matrix.shape[1]

    @property
    def vectors(self):
        """The basis vectors as sparse {index: value} dicts"""
        return columns_of(self.matrix)

    def weights(self):
        """The weight of each basis vector, if it is a weight vector, else None"""
        weights = []
        for vector in self.vectors:
            vector_weights = {self.ambient.weights[i] for i in vector}
            weights.append(vector_weights.pop() if len(vector_weights) == 1 else None)
        return weights

    def coordinate_space(self):
        """The BasedSpace of coordinates with respect to this basis"""
        weights = [w if w is not None else 0 for w in self.weights()]
        return BasedSpace.coordinate_space(
            self.dim, prefix=self.name, weights=weights, name=self.name
        )

    def embedding(self):
        """The OperatorMatrix from coordinates on this basis into the ambient space"""
        from .operator_matrix import OperatorMatrix

        return OperatorMatrix(self.coordinate_space(), self.ambient, self.matrix)

    def coordinates(self, vector):
        """Return the coordinates of `vector` (sparse dict) in this basis, or None

        None is returned if the vector is not in the span.
        """
        from .operator_matrix import left_inverse

        if self._left_inverse is None:
            self._left_inverse = left_inverse(self.matrix)
        column = column_matrix([vector], self.ambient.dim)
        coordinates = self._left_inverse.matmul(column)
        if self.matrix.matmul(coordinates) != column:
            return None
        return {i: value for (i, _), value in coordinates.to_dok().items()}

    def contains(self, vector):
        """Whether the sparse vector lies in the span of this basis"""
        return self.coordinates(vector) is not None

    def span_equals(self, other):
        """Whether this basis and `other` span the same subspace"""
        if self.dim != other.dim:
            return False
        if not self.dim:
            return True
        return self.matrix.hstack(other.matrix).rank() == self.dim
