"""The dual BGG sequence on multivector densities and the cap product

The dual chain spaces are the duals of C_k. On them the algebraic operator is
d_hat = -delta^T, raising the degree, and the differential operator is
delta^g = -(d^g)*, lowering it. The hat-operators are built exactly like their
counterparts in BGGContext, by a Neumann series for the dual first-order quabla on
the sections of im d_hat, and are then compared with the formal adjoints.

The dual harmonic basis is normalized against the harmonic basis of H_k(W), so the
duality pairing of homology sections is the coordinate pairing.
"""

from ..exceptions import ContractError, InvariantError, PairingError
from ..flat_model import FlatOperator, PolySectionSpace, Section, random_section
from ..homology import HodgeSplit
from ..operator_matrix import OperatorMatrix, invert_square
from ..tools import say, wedge_indices
from .neumann import NeumannInverse


class DualBGGContext:
    """The dual BGG sequence of a BGGContext

    Attributes:
        primal (BGGContext): The context of W
        n (int): dim m
        spaces (list of BasedSpace): The dual chain spaces, duals of C_0, ..., C_n
    """

    def __init__(self, primal):
        self.primal = primal
        self.n = primal.n
        self.spaces = [space.dual() for space in primal.spaces]
        self._cache = {}

    def __repr__(self):
        return f"{self.__class__.__name__}('{self.name}')"

    @property
    def name(self):
        return f"dual {self.primal.name}"

    @property
    def representation(self):
        return self.primal.representation

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

    def raising(self, k):
        """d_hat_k = -delta_k^T, from the dual of C_{k-1} to the dual of C_k"""
        self._check_degree(k, 1)
        return self._cached(
            ("d_hat", k), lambda: -self.primal.complex.delta(k).transpose()
        )

    def lowering(self, k):
        """delta_hat_k = -d_{k-1}^T, from the dual of C_k to the dual of C_{k-1}"""
        self._check_degree(k, 1)
        return self._cached(
            ("delta_hat", k), lambda: -self.primal.complex.d(k - 1).transpose()
        )

    def fiber_quabla(self, k):
        self._check_degree(k)
        space = self.spaces[k]
        result = OperatorMatrix.zero(space, space)
        if k > 0:
            result = result + self.raising(k) @ self.lowering(k)
        if k < self.n:
            result = result + self.lowering(k + 1) @ self.raising(k + 1)
        return result

    def hodge_split(self, k):
        """The splitting of the dual C_k into im d_hat, harmonic and im delta_hat"""
        self._check_degree(k)

        def build():
            out_of = []
            if k < self.n:
                out_of.append(self.raising(k + 1))
            if k > 0:
                out_of.append(self.lowering(k))
            return HodgeSplit(
                self.spaces[k],
                into_up=self.raising(k) if k > 0 else None,
                into_down=self.lowering(k + 1) if k < self.n else None,
                out_of=out_of,
                quabla=self.fiber_quabla(k),
            )

        return self._cached(("split", k), build)

    def delta_eta(self, k):
        """delta^g_k = -(d^g_{k-1})*, the differential operator lowering degree"""
        self._check_degree(k, 1)

        def build():
            operator = -self.primal.twisted_de_rham(k - 1).adjoint()
            operator.name = f"delta_g_{k}"
            return operator

        return self._cached(("delta_eta", k), build)

    def first_order_quabla(self, k):
        """d_hat delta^g + delta^g d_hat on dual C_k-sections"""
        self._check_degree(k)

        def build():
            space = self.spaces[k]
            result = FlatOperator.zero(space, space, self.n)
            if k > 0:
                result = result + self.lift(self.raising(k)) @ self.delta_eta(k)
            if k < self.n:
                result = result + self.delta_eta(k + 1) @ self.lift(self.raising(k + 1))
            result.name = f"quabla_hat_{k}"
            return result

        return self._cached(("quabla", k), build)

    def neumann(self, k):
        """The NeumannInverse of the dual first-order quabla on im d_hat_k"""

        def build():
            say(f"inverting the dual quabla_{k} of {self.primal.name}")
            split = self.hodge_split(k)
            return NeumannInverse(
                self.first_order_quabla(k),
                split.embedding_d(),
                split.coordinates_d,
                name=f"quabla_hat_{k}|B",
            )

        return self._cached(("neumann", k), build)

    def q_operator(self, k):
        """Q_hat_k = quabla_hat^-1 d_hat_k, from dual C_{k-1}- to dual C_k-sections"""
        self._check_degree(k, 1)

        def build():
            q = self.neumann(k).inverse @ self.lift(self.raising(k))
            q.name = f"Q_hat_{k}"
            return q

        return self._cached(("Q", k), build)

    def pi_operator(self, k):
        """Pi_hat_k = id - delta^g Q_hat_{k+1} - Q_hat_k delta^g"""
        self._check_degree(k)

        def build():
            pi = FlatOperator.identity(self.spaces[k], self.n)
            if k < self.n:
                pi = pi - self.delta_eta(k + 1) @ self.q_operator(k + 1)
            if k > 0:
                pi = pi - self.q_operator(k) @ self.delta_eta(k)
            pi.name = f"Pi_hat_{k}"
            return pi

        return self._cached(("Pi", k), build)

    def pi_is_adjoint(self, k):
        """Whether Pi_hat_k equals the formal adjoint of Pi_k"""
        return self.pi_operator(k).equals(self.primal.pi_operator(k).adjoint())

    def _normalization(self, k):
        """(embedding, projection) of the dual harmonic fiber, normalized so that
        the pairing with H_k is the coordinate pairing"""

        def build():
            split = self.hodge_split(k)
            module = self.primal.homology(k)
            harmonic = split.harmonic.matrix
            gram = harmonic.transpose().matmul(module.embedding.matrix)
            inverse = invert_square(gram)
            if inverse is None:
                raise InvariantError(
                    f"the dual harmonic chains of degree {k} of {self.primal.name} "
                    "do not pair perfectly with the harmonic chains"
                )
            fiber = module.space.dual()
            embedding = OperatorMatrix(
                fiber,
                self.spaces[k],
                harmonic.matmul(inverse.transpose()),
                name=f"E_H{k}*",
            )
            projection = OperatorMatrix(
                self.spaces[k],
                fiber,
                gram.transpose().matmul(split.projection.matrix),
                name=f"proj_H{k}*",
            )
            return embedding, projection

        return self._cached(("normalization", k), build)

    def homology_fiber(self, k):
        return self._normalization(k)[0].domain

    def represent(self, k):
        """Pi_hat repr: dual H_k-sections to canonical dual C_k-sections"""

        def build():
            return self.pi_operator(k) @ self.lift(self._normalization(k)[0])

        return self._cached(("represent", k), build)

    def project(self, k):
        """proj_hat Pi_hat: dual C_k-sections to dual H_k-sections"""

        def build():
            return self.lift(self._normalization(k)[1]) @ self.pi_operator(k)

        return self._cached(("project", k), build)

    def bgg_operator(self, k):
        """D^k = proj_hat delta^g Pi_hat represent, from dual H_{k+1}- to dual
        H_k-sections"""
        self._check_degree(k, 0, self.n - 1)

        def build():
            operator = (
                self.lift(self._normalization(k)[1])
                @ self.delta_eta(k + 1)
                @ self.represent(k + 1)
            )
            operator.name = f"D^{k}"
            return operator

        return self._cached(("D", k), build)

    def bgg_matrix(self, k, max_degree=None):
        if max_degree is None:
            max_degree = self.primal.max_degree
        return self.bgg_operator(k).matrix(max_degree, name=f"D^{k}")

    def random_homology_section(self, k, rng, max_degree=None):
        if max_degree is None:
            max_degree = self.primal.max_degree
        space = PolySectionSpace(self.homology_fiber(k), self.n, max_degree)
        return random_section(space, rng)


def dual_bgg_operator(k, context, max_degree=None):
    """The matrix of D^k of the dual sequence of a BGGContext"""
    return DualBGGContext(context).bgg_matrix(k, max_degree)


def formal_adjoint(operator):
    return operator.adjoint()


def pair_sections(section, dual_section):
    """The pointwise duality pairing of a section and a dual section, as a
    polynomial {exponent: value}"""
    fiber = section.fiber
    if not fiber.dual().same_labels(dual_section.fiber):
        raise PairingError(f"{dual_section} is not dual to {section}")
    result = {}
    for a, vector in section.coefficients.items():
        for b, dual_vector in dual_section.coefficients.items():
            value = sum(
                (x * dual_vector[i] for i, x in vector.items() if i in dual_vector), 0
            )
            if value:
                exponent = tuple(p + q for p, q in zip(a, b))
                result[exponent] = result.get(exponent, 0) + value
    return {exponent: value for exponent, value in result.items() if value}


def scalar_polynomial(section):
    """The polynomial {exponent: value} of a section of a one-dimensional fiber"""
    if section.fiber.dim != 1:
        raise ContractError(f"{section} is not a section of a line bundle")
    return {
        exponent: vector[0]
        for exponent, vector in section.coefficients.items()
        if vector.get(0)
    }


def _subtract_polynomials(first, second):
    result = dict(first)
    for exponent, value in second.items():
        new = result.get(exponent, 0) - value
        if new:
            result[exponent] = new
        else:
            result.pop(exponent, None)
    return result


def cap_chains(pairing, chain, dual_chain, j, dual_second, dual_target):
    """The contraction of a C_k(W1)-section with a dual C_j(W3)-section into a dual
    C_{j-k}(W2)-section, adjoint to the wedge product:

        <beta, alpha _| b> = <alpha ^ beta, b>

    Args:
        pairing (PairingData): W1 (x) W2 -> W3
        chain (Section): on C_k(W1)
        dual_chain (Section): on the dual of C_j(W3)
        j (int): The degree of dual_chain
        dual_second, dual_target (DualBGGContext): The dual contexts of W2 and W3
    """
    source = chain.fiber
    k = source.k
    if j < k:
        raise ContractError(f"cannot contract a {k}-form into a {j}-vector")
    if not dual_chain.fiber.same_labels(dual_target.spaces[j]):
        raise ContractError(f"{dual_chain} is not a section of {dual_target.spaces[j]}")
    dual_source = dual_target.primal.spaces[j]
    target_chains = dual_second.primal.spaces[j - k]
    contractions = pairing.by_first_and_target()
    result = {}
    for a, vector in chain.coefficients.items():
        terms = [(source.split_index(i), value) for i, value in vector.items()]
        for b, dual_vector in dual_chain.coefficients.items():
            exponent = tuple(p + q for p, q in zip(a, b))
            out = result.setdefault(exponent, {})
            for i_dual, y in dual_vector.items():
                J, w3 = dual_source.split_index(i_dual)
                for (I, w1), x in terms:
                    if not set(I) <= set(J):
                        continue
                    L = tuple(i for i in J if i not in I)
                    sign, _ = wedge_indices(I, L)
                    for w2, value in contractions.get((w1, w3), ()):
                        index = target_chains.chain_index(L, w2)
                        out[index] = out.get(index, 0) + sign * value * x * y
    return Section(dual_second.spaces[j - k], chain.n_vars, result)


class CapProduct:
    """The cap product of H_k(W1)-sections with dual H_j(W3)-sections

    The result is a dual H_{j-k}(W2)-section, for a pairing W1 (x) W2 -> W3.

    Attributes:
        pairing (PairingData): W1 (x) W2 -> W3
        first (BGGContext): The context of W1
        dual_second (DualBGGContext): The dual context of W2
        dual_target (DualBGGContext): The dual context of W3
    """

    def __init__(self, pairing, first, dual_second, dual_target):
        modules = (pairing.first, pairing.second, pairing.target)
        contexts = (first, dual_second, dual_target)
        for context, module in zip(contexts, modules):
            if not context.representation.space.same_labels(module.space):
                raise PairingError(f"{pairing} does not fit the module of {context}")
        self.pairing = pairing
        self.first = first
        self.dual_second = dual_second
        self.dual_target = dual_target

    def __repr__(self):
        return f"{self.__class__.__name__}({self.pairing})"

    def __call__(self, alpha, k, b, j):
        chain = self.first.represent(k).apply(alpha)
        dual_chain = self.dual_target.represent(j).apply(b)
        contracted = cap_chains(
            self.pairing, chain, dual_chain, j, self.dual_second, self.dual_target
        )
        return self.dual_second.project(j - k).apply(contracted)


def cap_product(pairing, k, l, contexts):
    """The bilinear map (alpha, b) -> alpha cap b of an H_k- and a dual
    H_{k+l}-section"""
    cap = CapProduct(pairing, *contexts)
    return lambda alpha, b: cap(alpha, k, b, k + l)


def divergence_adjointness_residual(cap, divergence_context, alpha, k, b):
    """divg(alpha cap b) - (-1)^k (<D_k alpha, b> + <alpha, D^k b>) as a polynomial

    Args:
        cap (CapProduct): for the pairing W (x) R -> W
        divergence_context (DualBGGContext): the dual context of the trivial module
        alpha (Section): an H_k(W)-section
        b (Section): a dual H_{k+1}(W)-section
    """
    capped = cap(alpha, k, b, k + 1)
    left = scalar_polynomial(divergence_context.bgg_operator(0).apply(capped))
    primal, dual = cap.first, cap.dual_target
    right = pair_sections(primal.bgg_operator(k).apply(alpha), b)
    for exponent, value in pair_sections(alpha, dual.bgg_operator(k).apply(b)).items():
        right[exponent] = right.get(exponent, 0) + value
    sign = (-1) ** k
    right = {exponent: sign * value for exponent, value in right.items() if value}
    return _subtract_polynomials(left, right)


def cap_pairing_residual(cap, alpha, b):
    """alpha cap b - <alpha, b> for an H_0(W)-section and a dual H_0(W)-section"""
    capped = scalar_polynomial(cap(alpha, 0, b, 0))
    return _subtract_polynomials(capped, pair_sections(alpha, b))
