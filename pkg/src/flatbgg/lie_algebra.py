"""This module defines LieAlgebraData and ParabolicGrading

A LieAlgebraData holds the structure constants of a Lie algebra g on a labeled
basis. A ParabolicGrading adds the grading element E, whose adjoint action is
diagonal on the basis, and splits the basis into the layers m (positive weights),
g0 (weight zero) and m* (negative weights).

Convention: the i'th label of `m_dual_labels` is eps^i and the i'th label of
`m_labels` is e_i, and <eps^i, e_j> = delta^i_j is fixed by this choice. The built-in
algebras choose the m* basis dual to the m basis under the trace form, so that the
pairing is invariant.
"""

from itertools import combinations

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import AlgebraError
from .operator_matrix import OperatorMatrix, invert_square
from .spaces import BasedSpace, SubspaceBasis
from .tools import to_rational, rational_to_string


def trace_of(matrix):
    """Return the trace of a square DomainMatrix over QQ"""
    return sum(
        (value for (i, j), value in matrix.to_dok().items() if i == j), QQ(0)
    )


def _add_into(target, vector, factor=1):
    """Add factor * vector into target (both sparse {index: value}), in place"""
    for i, value in vector.items():
        new = target.get(i, 0) + factor * value
        if new:
            target[i] = new
        else:
            target.pop(i, None)
    return target


class LieAlgebraData:
    """A Lie algebra given by exact structure constants on a labeled basis

    Attributes:
        basis (BasedSpace): The basis of g
        constants (dict): {(i, j): {k: c^k_ij}} with nonzero entries only, for all
            ordered pairs (i, j) of basis indices
        name (str): The name of the algebra, like "conformal:3,0"
        defining_matrices (dict): {label: DomainMatrix} if the algebra was built
            from a matrix representation, else None. The standard representation
            is built from these.
    """

    def __init__(self, basis, constants, name=None, defining_matrices=None):
        self.basis = basis
        self.constants = constants
        self.name = name
        self.defining_matrices = defining_matrices
        self._killing_pairing = None
        self._ad = {}

    def __repr__(self):
        return f"{self.__class__.__name__}('{self.name}', dim={self.dim})"

    @property
    def dim(self):
        return self.basis.dim

    @property
    def labels(self):
        return self.basis.labels

    def same_structure(self, other):
        """Whether `other` has the same labels and structure constants"""
        if self is other:
            return True
        return self.basis.same_labels(other.basis) and self.constants == other.constants

    def bracket_indices(self, i, j):
        """The bracket [x_i, x_j] as a sparse vector {k: c^k_ij}"""
        return dict(self.constants.get((i, j), {}))

    def bracket(self, x, y):
        """The bracket of two sparse vectors {index: value}"""
        result = {}
        for i, x_i in x.items():
            for j, y_j in y.items():
                _add_into(result, self.constants.get((i, j), {}), x_i * y_j)
        return result

    def bracket_labels(self, a, b):
        """The bracket [a, b] of two basis labels, as {label: value}"""
        i, j = self.basis.index(a), self.basis.index(b)
        return {self.labels[k]: c for k, c in self.bracket_indices(i, j).items()}

    def ad(self, label):
        """The adjoint action of the basis element `label` as an OperatorMatrix"""
        if label not in self._ad:
            i = self.basis.index(label)
            dok = {}
            for j in range(self.dim):
                for k, c in self.constants.get((i, j), {}).items():
                    dok[(k, j)] = c
            self._ad[label] = OperatorMatrix.from_index_entries(
                self.basis, self.basis, dok, name=f"ad({label})"
            )
        return self._ad[label]

    @property
    def killing_pairing(self):
        """The Killing form B(x, y) = tr(ad x ad y) as a symmetric DomainMatrix"""
        if self._killing_pairing is None:
            ads = [self.ad(label).matrix for label in self.labels]
            dok = {}
            for i, j in combinations(range(self.dim), 2):
                value = trace_of(ads[i].matmul(ads[j]))
                if value:
                    dok[(i, j)] = dok[(j, i)] = value
            for i in range(self.dim):
                value = trace_of(ads[i].matmul(ads[i]))
                if value:
                    dok[(i, i)] = value
            self._killing_pairing = DomainMatrix.from_dok(
                dok, (self.dim, self.dim), QQ
            )
        return self._killing_pairing

    def killing(self, a, b):
        """The Killing form of two basis labels"""
        dok = self.killing_pairing.to_dok()
        return dok.get((self.basis.index(a), self.basis.index(b)), QQ(0))

    def antisymmetry_violations(self):
        """Return the list of (a, b) label pairs with [a, b] != -[b, a]"""
        violations = []
        for i in range(self.dim):
            if self.constants.get((i, i)):
                violations.append((self.labels[i], self.labels[i]))
            for j in range(i + 1, self.dim):
                forward = self.constants.get((i, j), {})
                backward = self.constants.get((j, i), {})
                if _add_into(dict(forward), backward):
                    violations.append((self.labels[i], self.labels[j]))
        return violations

    def jacobi_violations(self):
        """Return the list of (a, b, c) label triples violating the Jacobi identity"""
        violations = []
        for i, j, k in combinations(range(self.dim), 3):
            total = {}
            for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                _add_into(total, self.bracket(self.bracket_indices(x, y), {z: 1}))
            if total:
                violations.append((self.labels[i], self.labels[j], self.labels[k]))
        return violations

    def validate(self):
        """Raise an AlgebraError naming the first antisymmetry or Jacobi violation"""
        violations = self.antisymmetry_violations()
        if violations:
            a, b = violations[0]
            raise AlgebraError(
                f"{self} violates antisymmetry: [{a}, {b}] != -[{b}, {a}]"
            )
        violations = self.jacobi_violations()
        if violations:
            a, b, c = violations[0]
            raise AlgebraError(
                f"{self} violates the Jacobi identity on the triple ({a}, {b}, {c})"
            )

    def with_flipped_constant(self):
        """Return a copy with the sign of one structure constant flipped

        The flipped constant is the first nonzero c^k_ij with i < j, together with
        its antisymmetric partner c^k_ji, so the fault shows up in the Jacobi
        identity. Used for fault injection.
        """
        constants = {key: dict(value) for key, value in self.constants.items()}
        for (i, j) in sorted(constants):
            if i < j and constants[(i, j)]:
                k = min(constants[(i, j)])
                constants[(i, j)][k] = -constants[(i, j)][k]
                constants[(j, i)][k] = -constants[(j, i)][k]
                break
        return LieAlgebraData(
            self.basis, constants, name=self.name, defining_matrices=None
        )

    def structure_constant_records(self):
        """Return the nonzero constants as sorted (i, j, k, value) records"""
        return [
            (i, j, k, c)
            for (i, j), column in sorted(self.constants.items())
            for k, c in sorted(column.items())
        ]


def build_lie_algebra(labels, constants, name=None, check=True):
    """Build and validate a LieAlgebraData from a structure-constant table

    Args:
        labels (list of str): The basis labels
        constants (dict or iterable): Either {(a, b): {c: value}} in labels, or an
            iterable of records (a, b, c, value) with labels or indices. Brackets
            given for only one of (a, b) and (b, a) are completed by antisymmetry.
            If both are given, they are kept as given and must be antisymmetric.
        name (str): The name of the algebra
        check (bool): Whether to validate antisymmetry and the Jacobi identity

    Returns:
        LieAlgebraData: the validated algebra. Its Killing pairing is computed when
            first asked for.
    """
    basis = BasedSpace(labels, name=name)

    def index(x):
        return x if isinstance(x, int) else basis.index(x)

    if isinstance(constants, dict):
        records = [
            (a, b, c, value)
            for (a, b), column in constants.items()
            for c, value in column.items()
        ]
    else:
        records = list(constants)
    given = {}
    for a, b, c, value in records:
        value = to_rational(value)
        if value:
            given.setdefault((index(a), index(b)), {})[index(c)] = value
    table = {key: dict(column) for key, column in given.items()}
    for (i, j), column in given.items():
        if (j, i) not in given and i != j:
            table[(j, i)] = {k: -c for k, c in column.items()}
    algebra = LieAlgebraData(basis, table, name=name)
    if check:
        algebra.validate()
    return algebra


def _flatten(matrix):
    """Return the entries of a square matrix as a sparse vector {r * n + c: value}"""
    n = matrix.shape[1]
    return {r * n + c: value for (r, c), value in matrix.to_dok().items()}


def commutator(a, b):
    """The commutator ab - ba of two sparse DomainMatrices"""
    return a.matmul(b).sub(b.matmul(a))


def trace_dual_matrices(matrices, candidates):
    """Return the combinations of `candidates` dual to `matrices` under tr(XY)

    Args:
        matrices (list of DomainMatrix): The basis e_1, ..., e_n
        candidates (list of DomainMatrix): n matrices spanning a space which pairs
            nondegenerately with the span of `matrices`

    Returns:
        list of DomainMatrix: eps^1, ..., eps^n with tr(eps^i e_j) = delta^i_j
    """
    n = len(matrices)
    dok = {}
    for a, candidate in enumerate(candidates):
        for j, matrix in enumerate(matrices):
            value = trace_of(candidate.matmul(matrix))
            if value:
                dok[(a, j)] = value
    gram = DomainMatrix.from_dok(dok, (n, n), QQ)
    inverse = invert_square(gram)
    if inverse is None:
        raise AlgebraError("the candidate dual basis pairs degenerately with m")
    duals = []
    inverse_dok = inverse.to_dok()
    for i in range(n):
        # eps^i = sum_a X[i][a] c_a with X = gram^-1, so tr(eps^i e_j) = delta_ij
        dual = None
        for a, candidate in enumerate(candidates):
            coefficient = inverse_dok.get((i, a))
            if coefficient:
                term = candidate.scalarmul(coefficient)
                dual = term if dual is None else dual.add(term)
        duals.append(dual)
    return duals


def lie_algebra_from_matrices(labels, matrices, name=None):
    """Build the LieAlgebraData spanned by a list of square matrices

    The structure constants are found by solving for the coordinates of every
    commutator in the given basis, exactly.

    Args:
        labels (list of str): The basis labels
        matrices (list of DomainMatrix): Linearly independent square matrices
            closed under commutators
        name (str): The name of the algebra

    Raises:
        AlgebraError: if the matrices are not closed under commutators
    """
    matrices = [m.convert_to(QQ).to_sparse() for m in matrices]
    size = matrices[0].shape[0]
    entries = BasedSpace([f"{r},{c}" for r in range(size) for c in range(size)])
    span = SubspaceBasis(entries, [_flatten(m) for m in matrices], name="g")
    constants = {}
    for i, j in combinations(range(len(matrices)), 2):
        bracket = commutator(matrices[i], matrices[j])
        if bracket.is_zero_matrix:
            continue
        coordinates = span.coordinates(_flatten(bracket))
        if coordinates is None:
            raise AlgebraError(
                f"the matrices are not closed under commutators: "
                f"[{labels[i]}, {labels[j]}] is outside their span"
            )
        constants[(i, j)] = coordinates
        constants[(j, i)] = {k: -c for k, c in coordinates.items()}
    return LieAlgebraData(
        BasedSpace(labels, name=name),
        constants,
        name=name,
        defining_matrices=dict(zip(labels, matrices)),
    )


class ParabolicGrading:
    """The parabolic grading of a LieAlgebraData by a grading element E

    Attributes:
        algebra (LieAlgebraData): The graded algebra
        grading_element (dict): The coordinates {label: value} of E
        weights (dict): {label: weight} the eigenvalue of ad(E) on each basis label
        layers (dict): {weight: [labels]}, the graded pieces g_w
        m_labels (list of str): The ordered basis e_1, ..., e_n of m
        m_dual_labels (list of str): The ordered basis eps^1, ..., eps^n of m*
        g0_labels (list of str): The basis of g0
        p_labels (list of str): The basis of p = g0 + m*
    """

    def __init__(self, algebra, grading_element, m_labels=None, m_dual_labels=None):
        """Initiate and validate a ParabolicGrading

        Args:
            algebra (LieAlgebraData): The algebra
            grading_element (dict): {label: value}, the coordinates of E
            m_labels (list of str): The order of the basis of m. Defaults to the
                labels of positive weight in basis order.
            m_dual_labels (list of str): The order of the basis of m*, dual to
                m_labels. Defaults to the labels of negative weight in basis order.
        """
        self.algebra = algebra
        self.grading_element = {
            label: to_rational(value) for label, value in grading_element.items()
        }
        self.weights = self._ad_grading_weights()
        self.layers = {}
        for label in algebra.labels:
            self.layers.setdefault(self.weights[label], []).append(label)
        positive = [label for label in algebra.labels if self.weights[label] > 0]
        negative = [label for label in algebra.labels if self.weights[label] < 0]
        self.m_labels = list(m_labels or positive)
        self.m_dual_labels = list(m_dual_labels or negative)
        self.g0_labels = [label for label in algebra.labels if not self.weights[label]]
        self.p_labels = self.g0_labels + self.m_dual_labels
        self._m_dual_actions = {}
        self.validate()

    def __repr__(self):
        dims = ", ".join(
            f"{rational_to_string(w)}: {len(self.layers[w])}"
            for w in sorted(self.layers)
        )
        return f"{self.__class__.__name__}('{self.algebra.name}', layers={{{dims}}})"

    @property
    def n(self):
        """The dimension of m"""
        return len(self.m_labels)

    @property
    def depth(self):
        """The largest weight in m, so that the grading is |depth|-graded"""
        return max(self.weights[label] for label in self.m_labels)

    @property
    def is_abelian(self):
        """Whether m is abelian, the |1|-graded case"""
        return all(
            not self.algebra.bracket_labels(a, b)
            for a, b in combinations(self.m_labels, 2)
        )

    def m_weights(self):
        return [self.weights[label] for label in self.m_labels]

    def m_dual_weights(self):
        return [self.weights[label] for label in self.m_dual_labels]

    def _ad_grading_weights(self):
        algebra = self.algebra
        element = {algebra.basis.index(a): v for a, v in self.grading_element.items()}
        weights = {}
        for j, label in enumerate(algebra.labels):
            image = algebra.bracket(element, {j: 1})
            if set(image) - {j}:
                raise AlgebraError(
                    f"ad(E) is not diagonal on the basis of {algebra}: "
                    f"[E, {label}] has components outside {label}"
                )
            weights[label] = image.get(j, QQ(0))
        return weights

    def validate(self):
        """Check the grading, its layers and the duality of m and m*"""
        algebra = self.algebra
        for label in self.m_labels:
            if self.weights[label] <= 0:
                raise AlgebraError(f"m basis element {label} has nonpositive weight")
        for label in self.m_dual_labels:
            if self.weights[label] >= 0:
                raise AlgebraError(f"m* basis element {label} has nonnegative weight")
        if len(self.m_labels) != len(self.m_dual_labels):
            raise AlgebraError(
                f"dim m = {len(self.m_labels)} but dim m* = {len(self.m_dual_labels)}"
            )
        covered = set(self.m_labels) | set(self.m_dual_labels) | set(self.g0_labels)
        if covered != set(algebra.labels) or len(covered) != algebra.dim:
            raise AlgebraError(f"g is not the sum of m, g0 and m* for {algebra}")
        for a, b in combinations(algebra.labels, 2):
            target = self.weights[a] + self.weights[b]
            for c in algebra.bracket_labels(a, b):
                if self.weights[c] != target:
                    raise AlgebraError(
                        f"[{a}, {b}] has a component {c} of weight "
                        f"{rational_to_string(self.weights[c])}, not "
                        f"{rational_to_string(target)}"
                    )
        for i, eps in enumerate(self.m_dual_labels):
            if self.weights[eps] != -self.weights[self.m_labels[i]]:
                raise AlgebraError(
                    f"{eps} has not the opposite weight of {self.m_labels[i]}"
                )

    def check_invariant_pairing(self):
        """Whether the Killing form pairs eps^i and e_j as c * delta^i_j, c != 0"""
        values = set()
        for i, eps in enumerate(self.m_dual_labels):
            for j, e in enumerate(self.m_labels):
                value = self.algebra.killing(eps, e)
                if i == j:
                    values.add(value)
                elif value:
                    return False
        return len(values) == 1 and 0 not in values

    def m_dual_action(self, label):
        """The m*-component of ad(label) on m*, as a sparse {(l, i): value} matrix

        The entry (l, i) is the coefficient of eps^l in [label, eps^i]. For label in
        p this is the coadjoint action of p on m*; for label in m it is the m*
        part of the bracket, which is all the coboundary needs.
        """
        if label not in self._m_dual_actions:
            algebra = self.algebra
            position = {eps: l for l, eps in enumerate(self.m_dual_labels)}
            action = {}
            for i, eps in enumerate(self.m_dual_labels):
                for c, value in algebra.bracket_labels(label, eps).items():
                    if c in position:
                        action[(position[c], i)] = value
            self._m_dual_actions[label] = action
        return self._m_dual_actions[label]

    def grading_element_vector(self):
        """E as a sparse vector in the basis of g"""
        basis = self.algebra.basis
        return {basis.index(a): v for a, v in self.grading_element.items()}


def square_matrix(size, entries):
    """Return a sparse size x size DomainMatrix over QQ from {(row, col): value}"""
    dok = {key: to_rational(value) for key, value in entries.items() if value}
    return DomainMatrix.from_dok(dok, (size, size), QQ)


def diagonal_matrix(values):
    """Return the sparse diagonal DomainMatrix with the given diagonal"""
    return square_matrix(len(values), {(i, i): v for i, v in enumerate(values)})
