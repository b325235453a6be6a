"""The curved BGG machinery specialized to the flat |1|-graded model

A BGGContext holds one coefficient module W. From the twisted de Rham operator d^g
it builds the first-order quabla, inverts it on the sections of the boundaries
B_k = im delta_{k+1} by a Neumann series, and from there the operators

    Q_k = quabla_eta^-1 delta_k : C_k -> C_{k-1}
    Pi_k = id - d^g Q_k - Q_{k+1} d^g
    D_k = proj d^g Pi_k repr : H_k -> H_{k+1}

All of them are FlatOperators, so identities between them are checked exactly on
the symbols, and matrices for a degree cutoff D are assembled on demand.
"""

import warnings

from ..algebras import builtin_parabolic
from ..config import config
from ..exceptions import ContractError, FlatModelError, RepresentationError
from ..flat_model import (
    FlatOperator,
    PolySectionSpace,
    twisted_de_rham,
    epsilon_action,
    random_section,
)
from ..homology import ChainComplexData
from ..operator_matrix import rank_factor
from ..representations import build_representation
from ..tools import say
from .neumann import NeumannInverse


class BGGContext:
    """The flat BGG sequence of one coefficient module

    Attributes:
        complex (ChainComplexData): The fiberwise chain complex C_*(m*, W)
        n (int): dim m, the number of coordinates
        max_degree (int): The default polynomial degree cutoff D for matrices
    """

    def __init__(self, complex_data, max_degree=None):
        """Initiate a BGGContext. Operators are built when first needed.

        Args:
            complex_data (ChainComplexData): The chain complex of W
            max_degree (int): The degree cutoff D. Defaults to
                config.default_max_degree.
        """
        if not complex_data.is_abelian:
            raise FlatModelError(
                f"flat calculus restricted to |1|-graded, but m of "
                f"{complex_data.algebra.name} is not abelian"
            )
        if not complex_data.representation.is_g_module:
            raise RepresentationError(
                f"the BGG sequence of {complex_data.representation} needs a g-module"
            )
        self.complex = complex_data
        self.n = complex_data.n
        if max_degree is None:
            max_degree = config.default_max_degree
        if max_degree < 0:
            raise ContractError(f"degree cutoff must be >= 0, not {max_degree}")
        self.max_degree = max_degree
        self._cache = {}

    def __repr__(self):
        return (
            f"{self.__class__.__name__}('{self.name}', n={self.n}, "
            f"D={self.max_degree})"
        )

    @classmethod
    def from_names(cls, algebra_name, expression, max_degree=None):
        """Build the context of a built-in algebra and a representation expression"""
        algebra, grading = builtin_parabolic(algebra_name)
        representation = build_representation(expression, algebra, grading)
        return cls(ChainComplexData(grading, representation), max_degree=max_degree)

    @property
    def name(self):
        return self.complex.name

    @property
    def representation(self):
        return self.complex.representation

    @property
    def grading(self):
        return self.complex.grading

    @property
    def spaces(self):
        return self.complex.spaces

    def _cached(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def _check_degree(self, k, low=0, high=None):
        high = self.n if high is None else high
        if not low <= k <= high:
            raise ContractError(f"degree {k} is outside {low}..{high} for {self}")

    def lift(self, matrix):
        return FlatOperator.lift(matrix, self.n)

    def identity(self, k):
        return FlatOperator.identity(self.spaces[k], self.n)

    def boundary(self, k):
        """delta_k acting fiberwise on C_k-sections"""
        self._check_degree(k, 1)
        return self._cached(("delta", k), lambda: self.lift(self.complex.delta(k)))

    def twisted_de_rham(self, k):
        """d^g on C_k-sections, to C_{k+1}-sections"""
        self._check_degree(k, 0, self.n - 1)
        return self._cached(("dg", k), lambda: twisted_de_rham(self.complex, k))

    def first_order_quabla(self, k):
        """quabla_eta = delta d^g + d^g delta on C_k-sections"""
        self._check_degree(k)

        def build():
            result = FlatOperator.zero(self.spaces[k], self.spaces[k], self.n)
            if k < self.n:
                result = result + self.boundary(k + 1) @ self.twisted_de_rham(k)
            if k > 0:
                result = result + self.twisted_de_rham(k - 1) @ self.boundary(k)
            result.name = f"quabla_eta_{k}"
            return result

        return self._cached(("quabla", k), build)

    def epsilon_action(self, k):
        """sum_i (eps^i .) d_i, which is quabla_eta - quabla on C_k-sections"""
        return self._cached(("eps", k), lambda: epsilon_action(self.complex, k))

    def neumann(self, k):
        """The NeumannInverse of quabla_eta on sections of B_k = im delta_{k+1}"""
        self._check_degree(k)

        def build():
            say(f"inverting quabla_eta_{k} of {self.name} on B_{k}")
            split = self.complex.hodge_split(k)
            return NeumannInverse(
                self.first_order_quabla(k),
                split.embedding_delta(),
                split.coordinates_delta,
                name=f"quabla_eta_{k}|B",
            )

        return self._cached(("neumann", k), build)

    def quotient_neumann(self, k):
        """The NeumannInverse of quabla_eta induced on C_k/Z_k, identified with
        im d_{k-1}"""
        self._check_degree(k, 1)

        def build():
            split = self.complex.hodge_split(k)
            return NeumannInverse(
                self.first_order_quabla(k),
                split.embedding_d(),
                split.coordinates_d,
                quotient=True,
                name=f"quabla_eta_{k}|C/Z",
            )

        return self._cached(("quotient", k), build)

    def q_operator(self, k):
        """Q_k = quabla_eta^-1 delta_k, from C_k- to C_{k-1}-sections"""
        self._check_degree(k, 1)

        def build():
            q = self.neumann(k - 1).inverse @ self.boundary(k)
            q.name = f"Q_{k}"
            return q

        return self._cached(("Q", k), build)

    def q_operator_quotient(self, k):
        """Q_k built by inverting quabla_eta on C_k/Z_k: delta E (C quabla_eta E)^-1 C"""
        self._check_degree(k, 1)

        def build():
            q = self.boundary(k) @ self.quotient_neumann(k).inverse
            q.name = f"Q~_{k}"
            return q

        return self._cached(("Q~", k), build)

    def pi_operator(self, k):
        """Pi_k = id - d^g Q_k - Q_{k+1} d^g on C_k-sections"""
        self._check_degree(k)

        def build():
            pi = self.identity(k)
            if k > 0:
                pi = pi - self.twisted_de_rham(k - 1) @ self.q_operator(k)
            if k < self.n:
                pi = pi - self.q_operator(k + 1) @ self.twisted_de_rham(k)
            pi.name = f"Pi_{k}"
            return pi

        return self._cached(("Pi", k), build)

    def homology(self, k):
        return self.complex.homology(k)

    def homology_fiber(self, k):
        """The fiber H_k of the homology bundle"""
        return self.homology(k).space

    def harmonic_embedding(self, k):
        """The constant inclusion of H_k-sections as harmonic C_k-sections"""
        return self._cached(("E_H", k), lambda: self.lift(self.homology(k).embedding))

    def harmonic_projection(self, k):
        """The constant projection of C_k-sections to H_k-sections"""
        return self._cached(
            ("proj_H", k), lambda: self.lift(self.homology(k).projection)
        )

    def represent(self, k):
        """Pi_k repr: H_k-sections to canonical C_k-sections"""

        def build():
            operator = self.pi_operator(k) @ self.harmonic_embedding(k)
            operator.name = f"represent_{k}"
            return operator

        return self._cached(("represent", k), build)

    def project(self, k):
        """proj Pi_k: C_k-sections to H_k-sections"""

        def build():
            operator = self.harmonic_projection(k) @ self.pi_operator(k)
            operator.name = f"project_{k}"
            return operator

        return self._cached(("project", k), build)

    def bgg_operator(self, k):
        """D_k = proj d^g Pi_k repr, from H_k- to H_{k+1}-sections"""
        self._check_degree(k, 0, self.n - 1)

        def build():
            say(f"building D_{k} of {self.name}")
            operator = (
                self.harmonic_projection(k + 1)
                @ self.twisted_de_rham(k)
                @ self.represent(k)
            )
            operator.name = f"D_{k}"
            return operator

        return self._cached(("D", k), build)

    def bgg_matrix(self, k, max_degree=None):
        """The matrix of D_k on H_k-sections of degree <= max_degree"""
        if max_degree is None:
            max_degree = self.max_degree
        return self.bgg_operator(k).matrix(max_degree, name=f"D_{k}")

    def homology_section_space(self, k, max_degree=None):
        if max_degree is None:
            max_degree = self.max_degree
        return PolySectionSpace(self.homology_fiber(k), self.n, max_degree)

    def chain_section_space(self, k, max_degree=None):
        if max_degree is None:
            max_degree = self.max_degree
        return PolySectionSpace(self.spaces[k], self.n, max_degree)

    def random_homology_section(self, k, rng, max_degree=None):
        return random_section(self.homology_section_space(k, max_degree), rng)

    def random_chain_section(self, k, rng, max_degree=None):
        return random_section(self.chain_section_space(k, max_degree), rng)

    def nilpotency_indices(self, max_degree=None):
        """{k: (truncated index at D, symbolic index)} of the Neumann series on B_k"""
        if max_degree is None:
            max_degree = self.max_degree
        indices = {}
        for k in range(self.n + 1):
            neumann = self.neumann(k)
            indices[k] = (neumann.truncated_index(max_degree), neumann.symbolic_index)
        return indices


def bgg_context(algebra_name, expression, max_degree=None):
    return BGGContext.from_names(algebra_name, expression, max_degree=max_degree)


def first_order_quabla(k, context):
    return context.first_order_quabla(k)


def neumann_invert(k, context, max_degree=None):
    """Return (inverse of quabla_eta on B_k-sections, truncated nilpotency index)"""
    if max_degree is None:
        max_degree = context.max_degree
    neumann = context.neumann(k)
    return neumann.inverse, neumann.truncated_index(max_degree)


def q_operator(k, context):
    return context.q_operator(k)


def pi_operator(k, context):
    return context.pi_operator(k)


def bgg_transfer_maps(k, context):
    """Return (represent, project) as FlatOperators"""
    return context.represent(k), context.project(k)


def bgg_operator(k, context, max_degree=None):
    """Return the OperatorMatrix of D_k at the degree cutoff"""
    return context.bgg_matrix(k, max_degree)


def twistor_kernel(context, max_degree=None):
    """The kernel of D_0 on H_0-sections of degree <= max_degree"""
    kernel, _, _ = rank_factor(context.bgg_matrix(0, max_degree))
    return kernel


def kernel_stabilization(context, max_degree):
    """The smallest cutoff D <= max_degree with dim ker D_0 = dim W, or None

    The kernel of D_0 is the space of parallel sections of the flat twistor
    connection, so its dimension grows with D until it reaches dim W.
    """
    target = context.representation.dim
    for degree in range(max_degree + 1):
        if twistor_kernel(context, degree).dim == target:
            return degree
    warnings.warn(
        f"dim ker D_0 of {context.name} does not reach dim W = {target} by degree "
        f"{max_degree}; the degree cutoff is too small for kernel stabilization"
    )
    return None
