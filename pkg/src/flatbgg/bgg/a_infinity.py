"""A-infinity maps on the sections of the homology of algebra-valued coefficients

For an associative equivariant pairing A (x) A -> A the chain-level maps are

    lambda_m(a_1..a_m) = sum_{j+k=m} (-1)^((k-1)(j + |a_1..a_j|))
                         Q lambda_j(a_1..a_j) ^ Q lambda_k(a_j+1..a_m)

with Q lambda_1 = -id, and mu_1 = D, mu_m = project(lambda_m(represent a_i)).
Here |a| is the form degree plus a grading shift, which is 0 unless the relations
fail for it.
"""

import warnings
from functools import lru_cache

from ..config import config
from ..exceptions import ContractError
from ..tools import catalan_number
from .products import CupProduct, _sum_sections

SIGN_SHIFTS = (0, 1)


@lru_cache(maxsize=None)
def _expand(start, stop):
    if stop - start == 1:
        return (f"a{start + 1}",)
    terms = []
    for split in range(start + 1, stop):
        for left in _expand_q(start, split):
            for right in _expand_q(split, stop):
                terms.append(f"{left} ^ {right}")
    return tuple(terms)


def _expand_q(start, stop):
    if stop - start == 1:
        return (f"-a{start + 1}",)
    return tuple(f"Q({term})" for term in _expand(start, stop))


def expand_lambda(m):
    """The terms of lambda_m as strings like "Q(-a1 ^ -a2) ^ -a3", signs omitted"""
    if m < 2:
        raise ContractError(f"lambda_m is defined for m >= 2, not {m}")
    return list(_expand(0, m))


def lambda_term_count(m):
    """The number of terms of lambda_m, the (m-1)'st Catalan number

    Warns when it differs from the count C(2m, m)/(m+1) sometimes stated for it.
    """
    count = len(expand_lambda(m))
    stated = catalan_number(m)
    if count != stated:
        warnings.warn(
            f"lambda_{m} expands to {count} terms, not the Catalan number "
            f"C({2 * m},{m})/{m + 1} = {stated}"
        )
    return count


class AInfinityMaps:
    """The maps mu_m on sections of H_*(A) for an algebra pairing A (x) A -> A

    Attributes:
        context (BGGContext): The context of A
        pairing (PairingData): The associative pairing A (x) A -> A
        shift (int): The grading shift in the signs
    """

    def __init__(self, pairing, context, shift=0):
        self.pairing = pairing
        self.context = context
        self.cup = CupProduct(pairing, context, context, context)
        self.n = context.n
        self.shift = shift

    def __repr__(self):
        return f"{self.__class__.__name__}({self.pairing}, shift={self.shift})"

    def _lambda(self, chains, degrees, start, stop):
        """(lambda of chains[start:stop], its degree); the section is None when the
        degree is out of range"""
        m = stop - start
        degree = sum(degrees[start:stop]) - m + 2
        if not 0 <= degree <= self.n:
            return None, degree
        terms = []
        for j in range(1, m):
            k = m - j
            left = self._q_lambda(chains, degrees, start, start + j)
            right = self._q_lambda(chains, degrees, start + j, stop)
            if left is None or right is None:
                continue
            shifted = sum(degrees[start : start + j]) + j * self.shift
            product = self.cup.chain_wedge(left, right)
            if product is not None:
                terms.append(product.scale((-1) ** ((k - 1) * (j + shifted))))
        return _sum_sections(terms, self.context.spaces[degree], self.n), degree

    def _q_lambda(self, chains, degrees, start, stop):
        if stop - start == 1:
            return -chains[start]
        section, degree = self._lambda(chains, degrees, start, stop)
        if section is None or degree < 1:
            return None
        return self.context.q_operator(degree).apply(section)

    def mu(self, sections, degrees):
        """mu_m of H-sections of the given degrees, or None if the result degree is
        out of range"""
        m = len(sections)
        if m == 1:
            if degrees[0] >= self.n:
                return None
            return self.context.bgg_operator(degrees[0]).apply(sections[0])
        chains = [
            self.context.represent(k).apply(section)
            for section, k in zip(sections, degrees)
        ]
        result, degree = self._lambda(chains, list(degrees), 0, m)
        if result is None:
            return None
        return self.context.project(degree).apply(result)

    def relation_residual(self, sections, degrees):
        """The residual of the m'th A-infinity relation, with m = len(sections)

        sum over inner arity s and position r of
        (-1)^(s + r + s r + s |a_1..a_r|) mu(a_1..a_r, mu_s(a_r+1..a_r+s), ...)

        Returns None when the relation has no space to live in.
        """
        m = len(sections)
        degrees = list(degrees)
        degree = sum(degrees) - m + 3
        if not 0 <= degree <= self.n:
            return None
        terms = []
        for s in range(1, m + 1):
            for r in range(0, m - s + 1):
                inner = self.mu(sections[r : r + s], degrees[r : r + s])
                if inner is None:
                    continue
                inner_degree = sum(degrees[r : r + s]) - s + 2
                outer_sections = sections[:r] + [inner] + sections[r + s :]
                outer_degrees = degrees[:r] + [inner_degree] + degrees[r + s :]
                outer = self.mu(outer_sections, outer_degrees)
                if outer is None:
                    continue
                shifted = sum(degrees[:r]) + r * self.shift
                terms.append(outer.scale((-1) ** (s + r + s * r + s * shifted)))
        return _sum_sections(terms, self.context.homology_fiber(degree), self.n)


def a_infinity_map(m, pairing, context, shift=0):
    """The m-linear map mu_m as a function of (sections, degrees)"""
    maps = AInfinityMaps(pairing, context, shift=shift)
    return lambda sections, degrees: maps.mu(sections[:m], degrees[:m])


def a_infinity_relation(m, pairing, context, sections, degrees, shift=0):
    """The residual Section of the m'th relation on the given sections"""
    if m > config.max_a_infinity_arity:
        warnings.warn(
            f"A-infinity relation of arity {m} above config.max_a_infinity_arity = "
            f"{config.max_a_infinity_arity}; coefficients grow quickly"
        )
    maps = AInfinityMaps(pairing, context, shift=shift)
    return maps.relation_residual(sections[:m], degrees[:m])


def select_sign_convention(pairing, context, samples):
    """Return (shift, passed): the first grading shift for which the relations of
    arity 2 and 3 hold on all samples

    Args:
        samples (list): (sections, degrees) tuples of arity 2 or 3

    The shift 0 (form degree) is tried first. Falling back to the shift 1 warns;
    if neither works, (0, False) is returned.
    """
    for shift in SIGN_SHIFTS:
        maps = AInfinityMaps(pairing, context, shift=shift)
        passed = True
        for sections, degrees in samples:
            residual = maps.relation_residual(list(sections), list(degrees))
            if residual is not None and not residual.is_zero:
                passed = False
                break
        if passed:
            if shift:
                warnings.warn(
                    f"A-infinity signs of {context.name} need the grading shifted by "
                    f"{shift}"
                )
            return shift, True
    warnings.warn(
        f"no grading shift makes the A-infinity relations of {context.name} hold"
    )
    return 0, False
