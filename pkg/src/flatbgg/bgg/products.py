"""Cup and triple products on the sections of the homology bundles

The wedge product of chain sections contracts the coefficients with a PairingData:

    (eps^I (x) w1) ^ (eps^J (x) w2) = eps^I ^ eps^J (x) P(w1 (x) w2)

with polynomial coefficients multiplied. The cup product compresses it by the BGG
transfer maps, alpha cup beta = project(represent(alpha) ^ represent(beta)), and
the triple product measures its failure to be associative.
"""

from ..exceptions import ContractError, PairingError
from ..flat_model import Section
from ..operator_matrix import solve_linear
from ..tools import wedge_indices


def _sum_sections(sections, fiber, n_vars):
    total = Section.zero(fiber, n_vars)
    for section in sections:
        if section is not None:
            total = total + section
    return total


def wedge_sections(pairing, first, second, target_complex):
    """The wedge product of a C_k(W1)- and a C_l(W2)-section into C_{k+l}(W3)

    Returns None if k + l exceeds dim m, where the product has no space to live in.
    """
    source_first, source_second = first.fiber, second.fiber
    sources = ((source_first, pairing.first), (source_second, pairing.second))
    for source, module in sources:
        if not source.representation.space.same_labels(module.space):
            raise PairingError(f"{pairing} does not pair sections of {source}")
    if not target_complex.representation.space.same_labels(pairing.target.space):
        raise PairingError(f"{pairing} does not land in {target_complex}")
    degree = source_first.k + source_second.k
    if degree > target_complex.n:
        return None
    target = target_complex.spaces[degree]
    second_terms = [
        (
            exponent,
            [(source_second.split_index(i), value) for i, value in vector.items()],
        )
        for exponent, vector in second.coefficients.items()
    ]
    result = {}
    for first_exponent, first_vector in first.coefficients.items():
        first_terms = [
            (source_first.split_index(i), value) for i, value in first_vector.items()
        ]
        for second_exponent, terms in second_terms:
            exponent = tuple(a + b for a, b in zip(first_exponent, second_exponent))
            vector = result.setdefault(exponent, {})
            for (I, w1), a in first_terms:
                for (J, w2), b in terms:
                    sign, K = wedge_indices(I, J)
                    if not sign:
                        continue
                    for w3, value in pairing.table.get((w1, w2), ()):
                        index = target.chain_index(K, w3)
                        vector[index] = vector.get(index, 0) + sign * value * a * b
    return Section(target, first.n_vars, result)


class CupProduct:
    """The cup product H_k(W1) x H_l(W2) -> H_{k+l}(W3) on sections

    Attributes:
        pairing (PairingData): W1 (x) W2 -> W3
        first, second, target (BGGContext): The contexts of W1, W2 and W3
    """

    def __init__(self, pairing, first, second, target):
        contexts = (first, second, target)
        if len({(c.grading.algebra.name, c.n) for c in contexts}) != 1:
            raise ContractError("the contexts of a cup product must share the algebra")
        modules = (pairing.first, pairing.second, pairing.target)
        for context, module in zip(contexts, modules):
            if not context.representation.space.same_labels(module.space):
                raise PairingError(f"{pairing} does not fit the module of {context}")
        self.pairing = pairing
        self.first = first
        self.second = second
        self.target = target
        self.n = target.n

    def __repr__(self):
        return f"{self.__class__.__name__}({self.pairing})"

    def chain_wedge(self, a, b):
        return wedge_sections(self.pairing, a, b, self.target.complex)

    def __call__(self, alpha, k, beta, l):
        """alpha cup beta for an H_k(W1)-section alpha and an H_l(W2)-section beta"""
        if k + l > self.n:
            raise ContractError(f"cup product of degrees {k} + {l} > {self.n}")
        represented = self.chain_wedge(
            self.first.represent(k).apply(alpha), self.second.represent(l).apply(beta)
        )
        return self.target.project(k + l).apply(represented)

    def leibniz_residual(self, alpha, k, beta, l):
        """D(alpha cup beta) - D alpha cup beta - (-1)^k alpha cup D beta

        Returns None when k + l + 1 > dim m, where the identity is vacuous.
        """
        if k + l + 1 > self.n:
            return None
        terms = [
            self.target.bgg_operator(k + l).apply(self(alpha, k, beta, l)),
            -self(self.first.bgg_operator(k).apply(alpha), k + 1, beta, l),
            self(alpha, k, self.second.bgg_operator(l).apply(beta), l + 1).scale(
                -((-1) ** k)
            ),
        ]
        return _sum_sections(terms, self.target.homology_fiber(k + l + 1), self.n)

    def twistor_extension_residuals(self, alpha, beta):
        """For alpha, beta in ker D_0: the differences

        represent(alpha cup beta) - P(represent alpha, represent beta)

        and d^g of the three represented sections, all zero for parallel sections.
        """
        represented_alpha = self.first.represent(0).apply(alpha)
        represented_beta = self.second.represent(0).apply(beta)
        product = self.target.represent(0).apply(self(alpha, 0, beta, 0))
        pointwise = self.chain_wedge(represented_alpha, represented_beta)
        residuals = [product - pointwise]
        pairs = (
            (self.first, represented_alpha),
            (self.second, represented_beta),
            (self.target, product),
        )
        for context, section in pairs:
            residuals.append(context.twisted_de_rham(0).apply(section))
        return residuals


class TripleProduct:
    """The triple product <alpha, beta, gamma> of sections of H_k, H_l, H_m

    <a, b, c> = project((-1)^k Pi a ^ Q(Pi b ^ Pi c) - Q(Pi a ^ Pi b) ^ Pi c)

    Attributes:
        pairings (TriplePairing): The pairings P12, P12_3, P23 and P1_23
        contexts (dict): BGGContexts with the keys "1", "2", "3", "12", "23" and "4"
    """

    def __init__(self, pairings, contexts):
        self.pairings = pairings
        self.contexts = contexts
        self.n = contexts["4"].n
        self.cup_12 = CupProduct(
            pairings.first_pair, contexts["1"], contexts["2"], contexts["12"]
        )
        self.cup_12_3 = CupProduct(
            pairings.pair_first_with_third, contexts["12"], contexts["3"], contexts["4"]
        )
        self.cup_23 = CupProduct(
            pairings.second_pair, contexts["2"], contexts["3"], contexts["23"]
        )
        self.cup_1_23 = CupProduct(
            pairings.pair_first_with_second, contexts["1"], contexts["23"], contexts["4"]
        )

    def __repr__(self):
        return f"{self.__class__.__name__}({self.pairings})"

    def __call__(self, alpha, k, beta, l, gamma, m):
        degree = k + l + m - 1
        if not 0 <= degree <= self.n:
            raise ContractError(f"triple product of degrees {k}, {l}, {m}")
        c = self.contexts
        a = c["1"].represent(k).apply(alpha)
        b = c["2"].represent(l).apply(beta)
        g = c["3"].represent(m).apply(gamma)
        terms = []
        if l + m >= 1 and l + m <= self.n:
            inner = c["23"].q_operator(l + m).apply(self.cup_23.chain_wedge(b, g))
            outer = self.cup_1_23.chain_wedge(a, inner)
            terms.append(outer.scale((-1) ** k))
        if k + l >= 1 and k + l <= self.n:
            inner = c["12"].q_operator(k + l).apply(self.cup_12.chain_wedge(a, b))
            terms.append(-self.cup_12_3.chain_wedge(inner, g))
        chains = _sum_sections(terms, c["4"].spaces[degree], self.n)
        return c["4"].project(degree).apply(chains)

    def associator_residual(self, alpha, k, beta, l, gamma, m):
        """D<a,b,c> - (a cup b) cup c + a cup (b cup c) + <Da,b,c> + (-1)^k <a,Db,c>
        + (-1)^(k+l) <a,b,Dc>, or None when k + l + m > dim m"""
        degree = k + l + m
        if degree > self.n:
            return None
        c = self.contexts
        terms = [
            -self.cup_12_3(self.cup_12(alpha, k, beta, l), k + l, gamma, m),
            self.cup_1_23(alpha, k, self.cup_23(beta, l, gamma, m), l + m),
        ]
        if degree >= 1:
            triple = self(alpha, k, beta, l, gamma, m)
            terms.append(c["4"].bgg_operator(degree - 1).apply(triple))
        if k < self.n:
            d_alpha = c["1"].bgg_operator(k).apply(alpha)
            terms.append(self(d_alpha, k + 1, beta, l, gamma, m))
        if l < self.n:
            d_beta = c["2"].bgg_operator(l).apply(beta)
            terms.append(self(alpha, k, d_beta, l + 1, gamma, m).scale((-1) ** k))
        if m < self.n:
            d_gamma = c["3"].bgg_operator(m).apply(gamma)
            terms.append(self(alpha, k, beta, l, d_gamma, m + 1).scale((-1) ** (k + l)))
        return _sum_sections(terms, c["4"].homology_fiber(degree), self.n)


def solve_preimage(context, k, target):
    """Return an H_k-section A with D_k A = target, or None if there is none

    The search space is the H_k-sections of degree <= deg(target) + order(D_k),
    which holds every preimage since D_k is homogeneous.
    """
    if target.is_zero:
        return Section.zero(context.homology_fiber(k), context.n)
    operator = context.bgg_operator(k)
    degree = target.degree + operator.order
    matrix = operator.matrix(degree)
    solution = solve_linear(matrix, target.to_vector(matrix.codomain))
    if solution is None:
        return None
    return Section.from_vector(matrix.domain, solution)


def massey_representative(triple, alpha, k, beta, l, gamma, m, first=None, second=None):
    """A cup gamma - (-1)^k alpha cup C - <alpha, beta, gamma>

    For D-closed alpha, beta, gamma with alpha cup beta = D A and beta cup gamma =
    D C this section is D-closed. A and C are found by solve_preimage unless given.

    Raises:
        ContractError: if alpha cup beta or beta cup gamma is not exact
    """
    if first is None:
        first = solve_preimage(
            triple.contexts["12"], k + l - 1, triple.cup_12(alpha, k, beta, l)
        )
    if second is None:
        second = solve_preimage(
            triple.contexts["23"], l + m - 1, triple.cup_23(beta, l, gamma, m)
        )
    if first is None or second is None:
        raise ContractError("the Massey representative needs exact cup products")
    terms = [
        triple.cup_12_3(first, k + l - 1, gamma, m),
        triple.cup_1_23(alpha, k, second, l + m - 1).scale(-((-1) ** k)),
        -triple(alpha, k, beta, l, gamma, m),
    ]
    degree = k + l + m - 1
    return _sum_sections(terms, triple.contexts["4"].homology_fiber(degree), triple.n)


def cup_product(pairing, k, l, contexts):
    """The bilinear map (alpha, beta) -> alpha cup beta of degrees (k, l)"""
    cup = CupProduct(pairing, *contexts)
    return lambda alpha, beta: cup(alpha, k, beta, l)


def triple_product(pairings, k, l, m, contexts):
    """The trilinear map (alpha, beta, gamma) -> <alpha, beta, gamma>"""
    triple = TripleProduct(pairings, contexts)
    return lambda alpha, beta, gamma: triple(alpha, k, beta, l, gamma, m)
