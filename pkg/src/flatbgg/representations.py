"""This module defines RepresentationData and its constructors

Representations are built from a small expression grammar:

    trivial | standard | adjoint | dual(R) | tensor(R1, R2) | ext(R, k) | end(R)

`exterior_power(R, k)` is accepted as a synonym for `ext(R, k)`. The weights of
every constructed module are read off the action of the grading element, so the
weight of each basis vector is exact and the basis is checked to be weight-adapted.

Label conventions: tensor products have labels "a.b", exterior powers "a^b^c", and
duals append "*".
"""

from itertools import combinations

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import RepresentationError, ConfigError
from .operator_matrix import OperatorMatrix
from .spaces import BasedSpace
from .tools import replace_index, rational_to_string, say

TENSOR_SEPARATOR = "."
WEDGE_SEPARATOR = "^"


class RepresentationData:
    """A representation of g (or only of p) on a based module

    Attributes:
        algebra (LieAlgebraData): The algebra acting
        grading (ParabolicGrading): The grading, giving the grading element E
        space (BasedSpace): The module W, with the geometric weight of each basis
            vector
        action (dict): {label: OperatorMatrix} the action of each basis element of g
            in scope
        scope (str): "g" for a g-module or "p" for a p-module only
        name (str): The expression the module was built from
    """

    def __init__(self, algebra, grading, space, action, scope="g", name=None):
        if scope not in ("g", "p"):
            raise RepresentationError(f"scope must be 'g' or 'p', not {scope!r}")
        self.algebra = algebra
        self.grading = grading
        self.space = space
        self.action = action
        self.scope = scope
        self.name = name or space.name
        missing = [label for label in self.scope_labels if label not in action]
        if missing:
            raise RepresentationError(f"{self} lacks the action of {missing}")

    def __repr__(self):
        return (
            f"{self.__class__.__name__}('{self.name}', dim={self.dim}, "
            f"scope='{self.scope}')"
        )

    @property
    def dim(self):
        return self.space.dim

    @property
    def weights(self):
        return self.space.weights

    @property
    def scope_labels(self):
        """The labels of the basis elements whose action is part of this module"""
        if self.scope == "g":
            return list(self.algebra.labels)
        return list(self.grading.p_labels)

    @property
    def is_g_module(self):
        return self.scope == "g"

    def rho(self, label):
        """The action of the basis element `label`"""
        try:
            return self.action[label]
        except KeyError:
            raise RepresentationError(f"{label} does not act on {self}")

    def act(self, element):
        """The action of a combination {label: value} of basis elements"""
        result = OperatorMatrix.zero(self.space, self.space)
        for label, value in element.items():
            result = result + self.rho(label).scale(value)
        return result

    def grading_action(self):
        """The action of the grading element E"""
        return self.act(self.grading.grading_element)

    def dual(self):
        return dual_representation(self)


def representation_from_matrices(algebra, grading, labels, matrices, name, scope="g"):
    """Return a validated RepresentationData from action DomainMatrices

    The weights are the diagonal of the action of E, which must be diagonal.
    """
    dim = len(labels)
    grading_matrix = None
    for label, value in grading.grading_element.items():
        term = matrices[label].scalarmul(value)
        grading_matrix = term if grading_matrix is None else grading_matrix.add(term)
    entries = grading_matrix.to_dok()
    off_diagonal = [(i, j) for (i, j) in entries if i != j]
    if off_diagonal:
        i, j = off_diagonal[0]
        raise RepresentationError(
            f"the grading element is not diagonal on the basis of {name}: it maps "
            f"{labels[j]} to {labels[i]}"
        )
    weights = [entries.get((i, i), QQ(0)) for i in range(dim)]
    space = BasedSpace(labels, weights, name=name)
    action = {
        label: OperatorMatrix(space, space, matrix, name=f"rho({label})")
        for label, matrix in matrices.items()
    }
    representation = RepresentationData(
        algebra, grading, space, action, scope=scope, name=name
    )
    violations = validate_representation(representation)
    if violations:
        raise RepresentationError(
            f"{name} is not a representation: the brackets of {violations[:5]} are "
            "not respected"
        )
    return representation


def trivial_representation(algebra, grading):
    zero = DomainMatrix.zeros((1, 1), QQ).to_sparse()
    return representation_from_matrices(
        algebra, grading, ["1"], {label: zero for label in algebra.labels}, "trivial"
    )


def standard_representation(algebra, grading):
    """The defining module of an algebra built from matrices"""
    if not algebra.defining_matrices:
        raise RepresentationError(f"{algebra} has no defining matrix representation")
    size = next(iter(algebra.defining_matrices.values())).shape[0]
    labels = [f"v{i}" for i in range(size)]
    return representation_from_matrices(
        algebra, grading, labels, dict(algebra.defining_matrices), "standard"
    )


def adjoint_representation(algebra, grading):
    matrices = {label: algebra.ad(label).matrix for label in algebra.labels}
    return representation_from_matrices(
        algebra, grading, list(algebra.labels), matrices, "adjoint"
    )


def dual_representation(representation):
    """The dual module W*, on which x acts by minus the transpose"""
    matrices = {
        label: representation.rho(label).matrix.transpose().neg()
        for label in representation.scope_labels
    }
    return representation_from_matrices(
        representation.algebra,
        representation.grading,
        list(representation.space.dual().labels),
        matrices,
        f"dual({representation.name})",
        scope=representation.scope,
    )


def _kronecker_action(first, second, dim_first, dim_second):
    """The matrix of first (x) 1 + 1 (x) second, from two sparse doks"""
    dok = {}
    for (r, c), value in first.items():
        for j in range(dim_second):
            key = (r * dim_second + j, c * dim_second + j)
            dok[key] = dok.get(key, 0) + value
    for (r, c), value in second.items():
        for i in range(dim_first):
            key = (i * dim_second + r, i * dim_second + c)
            dok[key] = dok.get(key, 0) + value
    size = dim_first * dim_second
    dok = {key: value for key, value in dok.items() if value}
    return DomainMatrix.from_dok(dok, (size, size), QQ)


def share_algebra(first, second):
    """Whether two modules are modules of the same graded algebra

    The algebras may be distinct objects, for instance from separate calls to
    `builtin_parabolic`. Labels, structure constants and grading must agree.
    """
    if not first.algebra.same_structure(second.algebra):
        return False
    if first.grading is second.grading:
        return True
    return (
        first.grading.grading_element == second.grading.grading_element
        and first.grading.m_labels == second.grading.m_labels
        and first.grading.m_dual_labels == second.grading.m_dual_labels
    )


def tensor_representation(first, second):
    """The tensor product W1 (x) W2 with basis w1.w2 in W1-major order"""
    if not share_algebra(first, second):
        raise RepresentationError(
            f"{first} and {second} are modules of different algebras"
        )
    scope = "g" if first.is_g_module and second.is_g_module else "p"
    scope_labels = first.scope_labels if scope == "g" else list(first.grading.p_labels)
    labels = [
        f"{a}{TENSOR_SEPARATOR}{b}"
        for a in first.space.labels
        for b in second.space.labels
    ]
    matrices = {
        label: _kronecker_action(
            first.rho(label).index_entries(),
            second.rho(label).index_entries(),
            first.dim,
            second.dim,
        )
        for label in scope_labels
    }
    return representation_from_matrices(
        first.algebra,
        first.grading,
        labels,
        matrices,
        f"tensor({first.name},{second.name})",
        scope=scope,
    )


def exterior_power(representation, k):
    """The exterior power Lambda^k W with basis w_I for increasing multi-indices I"""
    k = int(k)
    dim = representation.dim
    if not 0 <= k <= dim:
        raise RepresentationError(f"no exterior power {k} of {representation}")
    multi_indices = list(combinations(range(dim), k))
    position = {I: i for i, I in enumerate(multi_indices)}
    source = representation.space.labels
    labels = [WEDGE_SEPARATOR.join(source[i] for i in I) or "1" for I in multi_indices]
    matrices = {}
    for label in representation.scope_labels:
        by_column = {}
        for (r, c), value in representation.rho(label).index_entries().items():
            by_column.setdefault(c, []).append((r, value))
        dok = {}
        for column, I in enumerate(multi_indices):
            for s, i in enumerate(I):
                for r, value in by_column.get(i, []):
                    sign, J = replace_index(I, s, r)
                    if sign:
                        key = (position[J], column)
                        dok[key] = dok.get(key, 0) + sign * value
        dok = {key: value for key, value in dok.items() if value}
        size = len(multi_indices)
        matrices[label] = DomainMatrix.from_dok(dok, (size, size), QQ)
    return representation_from_matrices(
        representation.algebra,
        representation.grading,
        labels,
        matrices,
        f"ext({representation.name},{k})",
        scope=representation.scope,
    )


def end_representation(representation):
    """End(W) = W (x) W*, the module of algebra coefficients with composition"""
    return tensor_representation(representation, dual_representation(representation))


REPRESENTATION_CONSTRUCTORS = {
    "trivial": (0, trivial_representation),
    "standard": (0, standard_representation),
    "adjoint": (0, adjoint_representation),
    "dual": (1, dual_representation),
    "tensor": (2, tensor_representation),
    "ext": (1, exterior_power),
    "exterior_power": (1, exterior_power),
    "end": (1, end_representation),
}
"""{word: (number of module arguments, constructor)}. ext takes an extra integer."""

INTEGER_ARGUMENT_WORDS = ("ext", "exterior_power")


def _is_name_character(character):
    return character.isalnum() or character == "_"


def parse_representation(expression):
    """Parse a representation expression into a nested tuple

    For example "ext(tensor(standard,dual(standard)),2)" gives
    ("ext", ("tensor", ("standard",), ("dual", ("standard",))), 2).

    Raises:
        ConfigError: naming the 0-based position of the first unexpected character
    """
    text = expression
    position = 0

    def skip():
        nonlocal position
        while position < len(text) and text[position].isspace():
            position += 1

    def expect(character):
        nonlocal position
        skip()
        if position >= len(text) or text[position] != character:
            found = text[position] if position < len(text) else "end of expression"
            raise ConfigError(
                f"expected '{character}' in representation '{expression}', found "
                f"'{found}'",
                position,
            )
        position += 1

    def word():
        nonlocal position
        skip()
        start = position
        while position < len(text) and _is_name_character(text[position]):
            position += 1
        if start == position:
            raise ConfigError(
                f"expected a name in representation '{expression}'", position
            )
        return text[start:position], start

    def node():
        name, start = word()
        if name not in REPRESENTATION_CONSTRUCTORS:
            raise ConfigError(
                f"unknown representation constructor '{name}'. Options are "
                f"{list(REPRESENTATION_CONSTRUCTORS)}",
                start,
            )
        n_modules, _ = REPRESENTATION_CONSTRUCTORS[name]
        if not n_modules:
            return (name,)
        expect("(")
        arguments = [node()]
        for _ in range(n_modules - 1):
            expect(",")
            arguments.append(node())
        if name in INTEGER_ARGUMENT_WORDS:
            expect(",")
            number, number_start = word()
            if not number.isdigit():
                raise ConfigError(
                    f"expected an integer in representation '{expression}'",
                    number_start,
                )
            arguments.append(int(number))
        expect(")")
        return (name, *arguments)

    tree = node()
    skip()
    if position != len(text):
        raise ConfigError(
            f"unexpected trailing text in representation '{expression}'", position
        )
    return tree


def build_representation(expression, algebra, grading):
    """Build a validated RepresentationData from an expression or parsed tree

    Args:
        expression (str or tuple): The expression, see parse_representation
        algebra (LieAlgebraData): The algebra
        grading (ParabolicGrading): Its grading

    Returns:
        RepresentationData: validated; its weights are the eigenvalues of E
    """
    tree = expression
    if isinstance(expression, str):
        tree = parse_representation(expression)
    name, *arguments = tree
    _, constructor = REPRESENTATION_CONSTRUCTORS[name]
    if name in ("trivial", "standard", "adjoint"):
        return constructor(algebra, grading)
    modules = [
        argument if isinstance(argument, int) else build_representation(
            argument, algebra, grading
        )
        for argument in arguments
    ]
    say(f"building representation {name} of {algebra.name}")
    return constructor(*modules)


def validate_representation(representation):
    """Return the list of (a, b) label pairs for which rho([a, b]) != [rho(a), rho(b)]

    Only pairs in the scope of the representation are checked. An empty list means
    the representation is valid.
    """
    algebra = representation.algebra
    labels = representation.scope_labels
    in_scope = set(labels)
    violations = []
    for a, b in combinations(labels, 2):
        bracket = algebra.bracket_labels(a, b)
        if set(bracket) - in_scope:
            violations.append((a, b))
            continue
        rho_a, rho_b = representation.rho(a).matrix, representation.rho(b).matrix
        commutator = rho_a.matmul(rho_b).sub(rho_b.matmul(rho_a))
        for c, value in bracket.items():
            commutator = commutator.sub(representation.rho(c).matrix.scalarmul(value))
        if not commutator.is_zero_matrix:
            violations.append((a, b))
    return violations


def weight_decomposition(representation):
    """Return {weight: [labels]}, the partition of the basis by eigenvalue of E

    Raises:
        RepresentationError: if the action of E is not diagonal with the stored
            weights, or an element of m* fails to strictly lower the weight
    """
    grading_action = representation.grading_action()
    expected = {(i, i): w for i, w in enumerate(representation.weights) if w}
    if grading_action.index_entries() != expected:
        raise RepresentationError(
            f"the basis of {representation} is not adapted to the grading element"
        )
    violations = lowering_violations(representation)
    if violations:
        raise RepresentationError(
            f"in {representation}, {violations[0]} does not strictly lower weights"
        )
    decomposition = {}
    for label, weight in zip(representation.space.labels, representation.weights):
        decomposition.setdefault(weight, []).append(label)
    return dict(sorted(decomposition.items(), reverse=True))


def lowering_violations(representation):
    """Return the m* labels whose action does not strictly lower geometric weights"""
    weights = representation.weights
    violations = []
    for label in representation.grading.m_dual_labels:
        entries = representation.rho(label).index_entries()
        if any(weights[r] >= weights[c] for (r, c) in entries):
            violations.append(label)
    return violations


def weight_multiset(representation):
    """The sorted weights as strings, for tables"""
    return [rational_to_string(w) for w in sorted(representation.weights)]
