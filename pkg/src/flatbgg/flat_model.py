"""Polynomial sections and constant-coefficient operators on the flat model

On the flat |1|-graded model the big cell is m with coordinates x1, ..., xn dual to
e_1, ..., e_n. The twistor connection is the coordinate derivative plus the action
of m, so every operator of the BGG machinery has constant coefficients. Such an
operator is stored by its symbol: a sum of fiber matrices times partial
derivatives. A FlatOperator acts on Sections of any degree and assembles to an
OperatorMatrix on the truncated PolySectionSpace of every degree cutoff D, since no
operator raises the polynomial degree.
"""

from itertools import combinations_with_replacement

from sympy import QQ

from .config import config
from .exceptions import ContractError, FlatModelError
from .operator_matrix import OperatorMatrix
from .spaces import BasedSpace
from .tools import binomial, falling_factorial, to_rational


def monomials(n_vars, max_degree):
    """Return the exponent vectors of degree <= max_degree in graded-lex order"""
    result = []
    for degree in range(max_degree + 1):
        for variables in combinations_with_replacement(range(n_vars), degree):
            exponent = [0] * n_vars
            for i in variables:
                exponent[i] += 1
            result.append(tuple(exponent))
    return result


def monomial_label(exponent):
    """Return a label like "x1^2*x3" (variables counted from 1), or "1" """
    factors = [
        f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
        for i, e in enumerate(exponent)
        if e
    ]
    return "*".join(factors) or "1"


def unit_exponent(n_vars, i):
    return tuple(1 if j == i else 0 for j in range(n_vars))


def _add_exponents(a, b):
    return tuple(x + y for x, y in zip(a, b))


class PolySectionSpace(BasedSpace):
    """The polynomial sections of degree <= D of a trivial bundle with fiber F

    The basis is x^a (x) f for the monomials a in graded-lex order (outer loop) and
    the basis of F (inner loop). The weight of x^a (x) f is weight(f) - |a|.

    Attributes:
        fiber (BasedSpace): F
        n_vars (int): n = dim m
        max_degree (int): D
        monomials (list of tuple): the exponent vectors
    """

    def __init__(self, fiber, n_vars, max_degree):
        if max_degree < 0:
            raise ContractError(f"degree cutoff must be >= 0, not {max_degree}")
        self.fiber = fiber
        self.n_vars = n_vars
        self.max_degree = max_degree
        self.monomials = monomials(n_vars, max_degree)
        self._monomial_index = {a: i for i, a in enumerate(self.monomials)}
        labels, weights = [], []
        for a in self.monomials:
            prefix = monomial_label(a)
            for label, weight in zip(fiber.labels, fiber.weights):
                labels.append(f"{prefix}|{label}")
                weights.append(weight - sum(a))
        super().__init__(labels, weights, name=f"{fiber.name or 'F'}[{max_degree}]")
        expected = binomial(n_vars + max_degree, max_degree) * fiber.dim
        if self.dim != expected:
            raise ContractError(f"dim {self} = {self.dim} != {expected}")

    def monomial_index(self, exponent):
        return self._monomial_index[exponent]

    def section_index(self, exponent, fiber_index):
        """The index of x^exponent (x) f_fiber_index"""
        return self._monomial_index[exponent] * self.fiber.dim + fiber_index

    def split_index(self, index):
        """Return (exponent, fiber_index) of the basis vector with the given index"""
        return self.monomials[index // self.fiber.dim], index % self.fiber.dim


def poly_section_space(fiber, n_vars, max_degree):
    return PolySectionSpace(fiber, n_vars, max_degree)


class Section:
    """A polynomial section of a trivial bundle, with exact rational coefficients

    Attributes:
        fiber (BasedSpace): The fiber F
        n_vars (int): The number of variables
        coefficients (dict): {exponent: {fiber_index: value}}, nonzero values only
    """

    def __init__(self, fiber, n_vars, coefficients=None):
        self.fiber = fiber
        self.n_vars = n_vars
        self.coefficients = {}
        for exponent, vector in (coefficients or {}).items():
            vector = {i: to_rational(v) for i, v in vector.items() if v}
            if vector:
                self.coefficients[tuple(exponent)] = vector

    def __repr__(self):
        return (
            f"{self.__class__.__name__}(fiber='{self.fiber.name}', "
            f"terms={self.n_terms}, degree={self.degree})"
        )

    @classmethod
    def zero(cls, fiber, n_vars):
        return cls(fiber, n_vars)

    @classmethod
    def monomial(cls, fiber, exponent, fiber_label, value=1):
        """The section value * x^exponent (x) fiber_label"""
        coefficients = {tuple(exponent): {fiber.index(fiber_label): value}}
        return cls(fiber, len(exponent), coefficients)

    @classmethod
    def from_vector(cls, space, vector):
        """The section with coordinates `vector` ({index: value}) in a
        PolySectionSpace"""
        coefficients = {}
        for index, value in vector.items():
            exponent, f = space.split_index(index)
            coefficients.setdefault(exponent, {})[f] = value
        return cls(space.fiber, space.n_vars, coefficients)

    def to_vector(self, space):
        """The coordinates {index: value} of this section in a PolySectionSpace"""
        if self.degree > space.max_degree:
            raise ContractError(f"{self} does not fit in {space}")
        return {
            space.section_index(exponent, f): value
            for exponent, vector in self.coefficients.items()
            for f, value in vector.items()
        }

    @property
    def n_terms(self):
        return sum(len(vector) for vector in self.coefficients.values())

    @property
    def degree(self):
        """The polynomial degree, -1 for the zero section"""
        return max((sum(a) for a in self.coefficients), default=-1)

    @property
    def is_zero(self):
        return not self.coefficients

    def _check_compatible(self, other):
        if not self.fiber.same_labels(other.fiber):
            raise ContractError(f"{self} and {other} have different fibers")

    def __add__(self, other):
        self._check_compatible(other)
        coefficients = {a: dict(v) for a, v in self.coefficients.items()}
        for exponent, vector in other.coefficients.items():
            target = coefficients.setdefault(exponent, {})
            for f, value in vector.items():
                new = target.get(f, 0) + value
                if new:
                    target[f] = new
                else:
                    target.pop(f, None)
        return Section(self.fiber, self.n_vars, coefficients)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = to_rational(factor)
        return Section(
            self.fiber,
            self.n_vars,
            {
                a: {f: factor * v for f, v in vector.items()}
                for a, vector in self.coefficients.items()
            },
        )

    def __eq__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        return (
            self.fiber.same_labels(other.fiber)
            and self.coefficients == other.coefficients
        )

    def records(self):
        """Sorted (exponent, fiber label, value) records of the nonzero terms"""
        return [
            (exponent, self.fiber.labels[f], value)
            for exponent in sorted(self.coefficients)
            for f, value in sorted(self.coefficients[exponent].items())
        ]

    def evaluate_polynomial(self, fiber_index, exponent):
        """The coefficient of x^exponent (x) f_fiber_index"""
        return self.coefficients.get(tuple(exponent), {}).get(fiber_index, QQ(0))


def random_rational(rng):
    """Draw p/q with |p| <= config.numerator_bound and 1 <= q <= denominator_bound"""
    numerator = int(rng.integers(-config.numerator_bound, config.numerator_bound + 1))
    denominator = int(rng.integers(1, config.denominator_bound + 1))
    return QQ(numerator, denominator)


def random_section(space, rng):
    """Draw a random Section of a PolySectionSpace, every coefficient independently

    Args:
        space (PolySectionSpace): The space, giving the fiber and degree cutoff
        rng (numpy.random.Generator): The seeded generator, from default_rng(seed)
    """
    coefficients = {}
    for exponent in space.monomials:
        vector = {}
        for f in range(space.fiber.dim):
            value = random_rational(rng)
            if value:
                vector[f] = value
        if vector:
            coefficients[exponent] = vector
    return Section(space.fiber, space.n_vars, coefficients)


class FlatOperator:
    """A constant-coefficient differential operator between trivial bundles

    The operator is sum_alpha A_alpha d^alpha with fiber matrices A_alpha, where
    d^alpha is the partial derivative with multi-index alpha. It is held as the
    symbol {alpha: A_alpha} with zero matrices dropped.
    """

    def __init__(self, domain, codomain, n_vars, symbol=None, name=None):
        """Initiate a FlatOperator

        Args:
            domain (BasedSpace): The fiber of the sections acted on
            codomain (BasedSpace): The fiber of the resulting sections
            n_vars (int): The number of variables
            symbol (dict): {alpha: OperatorMatrix from domain to codomain}
            name (str): Optional name
        """
        self.domain = domain
        self.codomain = codomain
        self.n_vars = n_vars
        self.name = name
        self.symbol = {}
        for alpha, matrix in (symbol or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != n_vars:
                raise ContractError(f"multi-index {alpha} has not {n_vars} entries")
            fits = matrix.domain.same_labels(domain)
            if not (fits and matrix.codomain.same_labels(codomain)):
                raise ContractError(f"the symbol matrix {matrix} does not fit {self}")
            if not matrix.is_zero:
                self.symbol[alpha] = matrix
        self._columns = None

    def __repr__(self):
        name = f"'{self.name}', " if self.name else ""
        return (
            f"{self.__class__.__name__}({name}{self.domain.name} -> "
            f"{self.codomain.name}, order={self.order})"
        )

    @classmethod
    def lift(cls, matrix, n_vars, name=None):
        """The fiberwise action of a constant matrix"""
        return cls(
            matrix.domain, matrix.codomain, n_vars, {(0,) * n_vars: matrix}, name=name
        )

    @classmethod
    def identity(cls, space, n_vars):
        return cls.lift(OperatorMatrix.identity(space), n_vars, name="id")

    @classmethod
    def zero(cls, domain, codomain, n_vars):
        return cls(domain, codomain, n_vars)

    @property
    def order(self):
        """The order, the largest |alpha| in the symbol (0 for the zero operator)"""
        return max((sum(alpha) for alpha in self.symbol), default=0)

    @property
    def is_zero(self):
        return not self.symbol

    def symbol_decomposition(self):
        """The summands as a sorted list of (fiber matrix, alpha)"""
        return [
            (self.symbol[alpha], alpha)
            for alpha in sorted(self.symbol, key=lambda a: (sum(a), [-x for x in a]))
        ]

    def homogeneous_part(self, order):
        """The part of the symbol of exactly the given order"""
        return FlatOperator(
            self.domain,
            self.codomain,
            self.n_vars,
            {a: m for a, m in self.symbol.items() if sum(a) == order},
        )

    def truncated(self, max_order):
        """The part of the symbol of order <= max_order"""
        return FlatOperator(
            self.domain,
            self.codomain,
            self.n_vars,
            {a: m for a, m in self.symbol.items() if sum(a) <= max_order},
        )

    def equals(self, other, max_order=None):
        """Whether the symbols agree, up to order max_order if given

        Agreement up to order D is equivalent to equality of the assembled matrices
        on PolySectionSpace of degree D.
        """
        if not (
            self.domain.same_labels(other.domain)
            and self.codomain.same_labels(other.codomain)
        ):
            return False
        difference = self - other
        if max_order is not None:
            difference = difference.truncated(max_order)
        return difference.is_zero

    def __eq__(self, other):
        if not isinstance(other, FlatOperator):
            return NotImplemented
        return self.equals(other)

    def _combine(self, other, sign):
        if not (
            self.domain.same_labels(other.domain)
            and self.codomain.same_labels(other.codomain)
        ):
            raise ContractError(f"cannot add {self} and {other}")
        symbol = dict(self.symbol)
        for alpha, matrix in other.symbol.items():
            term = matrix if sign > 0 else -matrix
            symbol[alpha] = symbol[alpha] + term if alpha in symbol else term
        return FlatOperator(self.domain, self.codomain, self.n_vars, symbol)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        return FlatOperator(
            self.domain,
            self.codomain,
            self.n_vars,
            {alpha: matrix.scale(factor) for alpha, matrix in self.symbol.items()},
        )

    def __matmul__(self, other):
        """Composition self o other; symbols convolve since coefficients are constant"""
        if isinstance(other, OperatorMatrix):
            other = FlatOperator.lift(other, self.n_vars)
        if not self.domain.same_labels(other.codomain):
            raise ContractError(f"cannot compose {self} after {other}")
        symbol = {}
        for alpha, left in self.symbol.items():
            for beta, right in other.symbol.items():
                gamma = _add_exponents(alpha, beta)
                term = left @ right
                symbol[gamma] = symbol[gamma] + term if gamma in symbol else term
        return FlatOperator(other.domain, self.codomain, self.n_vars, symbol)

    def __rmatmul__(self, other):
        if isinstance(other, OperatorMatrix):
            return FlatOperator.lift(other, self.n_vars) @ self
        return NotImplemented

    def adjoint(self):
        """The formal adjoint: (A, d^alpha) -> ((-1)^|alpha| A^T, d^alpha)

        It acts on sections of the dual of the codomain. The adjoint of the adjoint
        is the operator itself.
        """
        symbol = {
            alpha: matrix.transpose().scale((-1) ** sum(alpha))
            for alpha, matrix in self.symbol.items()
        }
        return FlatOperator(
            self.codomain.dual(), self.domain.dual(), self.n_vars, symbol
        )

    def _symbol_columns(self):
        if self._columns is None:
            self._columns = {}
            for alpha, matrix in self.symbol.items():
                columns = {}
                for (r, c), value in matrix.index_entries().items():
                    columns.setdefault(c, []).append((r, value))
                self._columns[alpha] = columns
        return self._columns

    def apply(self, section):
        """Apply the operator to a Section, of any degree"""
        if not section.fiber.same_labels(self.domain):
            raise ContractError(f"{section} is not a section of the domain of {self}")
        result = {}
        for exponent, vector in section.coefficients.items():
            for alpha, columns in self._symbol_columns().items():
                if any(a < b for a, b in zip(exponent, alpha)):
                    continue
                factor = 1
                for a, b in zip(exponent, alpha):
                    factor *= falling_factorial(a, b)
                target_exponent = tuple(a - b for a, b in zip(exponent, alpha))
                target = result.setdefault(target_exponent, {})
                for c, value in vector.items():
                    for r, entry in columns.get(c, ()):
                        target[r] = target.get(r, 0) + factor * entry * value
        return Section(self.codomain, self.n_vars, result)

    def __call__(self, section):
        return self.apply(section)

    def matrix(self, max_degree, name=None):
        """Assemble the OperatorMatrix from PolySectionSpace(domain, D) to
        PolySectionSpace(codomain, D)"""
        source = PolySectionSpace(self.domain, self.n_vars, max_degree)
        target = PolySectionSpace(self.codomain, self.n_vars, max_degree)
        dim_source, dim_target = self.domain.dim, self.codomain.dim
        dok = {}
        for column_block, exponent in enumerate(source.monomials):
            for alpha, matrix in self.symbol.items():
                if any(a < b for a, b in zip(exponent, alpha)):
                    continue
                factor = 1
                for a, b in zip(exponent, alpha):
                    factor *= falling_factorial(a, b)
                row_block = target.monomial_index(
                    tuple(a - b for a, b in zip(exponent, alpha))
                )
                for (r, c), value in matrix.index_entries().items():
                    key = (row_block * dim_target + r, column_block * dim_source + c)
                    dok[key] = dok.get(key, 0) + factor * value
        return OperatorMatrix.from_index_entries(
            source, target, dok, name=name or self.name
        )


def lift_fiberwise(matrix, n_vars):
    """The FlatOperator acting by the constant fiber matrix, block diagonally"""
    return FlatOperator.lift(matrix, n_vars, name=matrix.name)


def _check_flat_calculus(complex_data):
    if not complex_data.is_abelian:
        raise FlatModelError(
            f"flat calculus restricted to |1|-graded, but m of "
            f"{complex_data.algebra.name} is not abelian"
        )


def coordinate_exterior_derivative(complex_data, k):
    """The FlatOperator sum_i (eps^i ^) d_i from C_k- to C_{k+1}-sections"""
    _check_flat_calculus(complex_data)
    n = complex_data.n
    symbol = {unit_exponent(n, i): complex_data.wedge(i, k) for i in range(n)}
    return FlatOperator(
        complex_data.spaces[k], complex_data.spaces[k + 1], n, symbol, name=f"dx_{k}"
    )


def twisted_de_rham(complex_data, k):
    """The FlatOperator d^g = coordinate exterior derivative + lifted d_m on C_k"""
    d_coordinate = coordinate_exterior_derivative(complex_data, k)
    twisted = d_coordinate + lift_fiberwise(complex_data.d(k), complex_data.n)
    twisted.name = f"dg_{k}"
    return twisted


def epsilon_action(complex_data, k):
    """The FlatOperator sum_i (eps^i .) d_i on C_k, which is quabla_eta - quabla"""
    _check_flat_calculus(complex_data)
    n = complex_data.n
    labels = complex_data.grading.m_dual_labels
    symbol = {
        unit_exponent(n, i): complex_data.p_action(labels[i], k) for i in range(n)
    }
    space = complex_data.spaces[k]
    return FlatOperator(space, space, n, symbol, name=f"eps.d_{k}")


def divergence(complex_data, k):
    """The exterior divergence on multivector densities, from dual C_k- to dual
    C_{k-1}-sections: minus the formal adjoint of the coordinate exterior derivative
    """
    result = -coordinate_exterior_derivative(complex_data, k - 1).adjoint()
    result.name = f"div_{k}"
    return result
