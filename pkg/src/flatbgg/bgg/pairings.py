"""Equivariant pairings of coefficient modules, which the products are built from

Import the pairing builders and build the PAIRING_BUILDERS dictionary

Constants:
    PAIRING_BUILDERS (dict): Dictionary of {name: builder} where builder takes the
        two source RepresentationData and returns a validated PairingData.
"""

from math import isqrt

from ..exceptions import PairingError
from ..operator_matrix import OperatorMatrix
from ..representations import (
    TENSOR_SEPARATOR,
    share_algebra,
    tensor_representation,
    trivial_representation,
)
from ..spaces import BasedSpace


def tensor_space(first, second):
    """The BasedSpace of W1 (x) W2 with labels "a.b" in W1-major order"""
    return BasedSpace(
        [f"{a}{TENSOR_SEPARATOR}{b}" for a in first.labels for b in second.labels],
        [v + w for v in first.weights for w in second.weights],
        name=f"{first.name}{TENSOR_SEPARATOR}{second.name}",
    )


class PairingData:
    """A linear map P: W1 (x) W2 -> W3, checked to be g-equivariant

    Attributes:
        first (RepresentationData): W1
        second (RepresentationData): W2
        target (RepresentationData): W3
        matrix (OperatorMatrix): P, from tensor_space(W1, W2) to W3
        table (dict): {(i1, i2): [(i3, value)]}, the nonzero values of P
    """

    def __init__(self, first, second, target, entries, name=None, check=True):
        """Initiate a PairingData

        Args:
            first, second, target (RepresentationData): W1, W2 and W3
            entries (dict): {(i1, i2, i3): value}, P(w_i1 (x) w_i2) has the
                coefficient value on w_i3
            name (str): The name, like "tensor" or "bracket"
            check (bool): Whether to check equivariance, raising PairingError
        """
        self.first = first
        self.second = second
        self.target = target
        self.name = name
        self.table = {}
        dok = {}
        for (i1, i2, i3), value in entries.items():
            if value:
                self.table.setdefault((i1, i2), []).append((i3, value))
                dok[(i3, i1 * second.dim + i2)] = value
        for terms in self.table.values():
            terms.sort()
        self.matrix = OperatorMatrix.from_index_entries(
            tensor_space(first.space, second.space), target.space, dok, name=name
        )
        self._by_first_and_target = None
        if check:
            self.validate()

    def __repr__(self):
        return (
            f"{self.__class__.__name__}('{self.name}', {self.first.name} x "
            f"{self.second.name} -> {self.target.name})"
        )

    def pair(self, u, v):
        """P(u (x) v) for sparse vectors {index: value}"""
        result = {}
        for i1, a in u.items():
            for i2, b in v.items():
                for i3, value in self.table.get((i1, i2), ()):
                    result[i3] = result.get(i3, 0) + value * a * b
        return {i: value for i, value in result.items() if value}

    def by_first_and_target(self):
        """{(i1, i3): [(i2, value)]}, the table sorted for contractions"""
        if self._by_first_and_target is None:
            table = {}
            for (i1, i2), terms in self.table.items():
                for i3, value in terms:
                    table.setdefault((i1, i3), []).append((i2, value))
            self._by_first_and_target = table
        return self._by_first_and_target

    def scope_labels(self):
        modules = (self.first, self.second, self.target)
        if all(module.is_g_module for module in modules):
            return list(self.first.algebra.labels)
        return list(self.first.grading.p_labels)

    def equivariance_violations(self):
        """The labels x for which P(x.u (x) v + u (x) x.v) != x.P(u (x) v)"""
        violations = []
        for label in self.scope_labels():
            columns = [_columns(m.rho(label)) for m in (self.first, self.second)]
            rho_target = _columns(self.target.rho(label))
            for i1 in range(self.first.dim):
                for i2 in range(self.second.dim):
                    left = self.pair(columns[0].get(i1, {}), {i2: 1})
                    _add_into(left, self.pair({i1: 1}, columns[1].get(i2, {})))
                    right = {}
                    for i3, value in self.table.get((i1, i2), ()):
                        _add_into(right, rho_target.get(i3, {}), value)
                    if left != right:
                        violations.append(label)
                        break
                else:
                    continue
                break
        return violations

    def validate(self):
        if not all(
            share_algebra(self.first, module) for module in (self.second, self.target)
        ):
            raise PairingError(f"{self} pairs modules of different algebras")
        violations = self.equivariance_violations()
        if violations:
            raise PairingError(
                f"{self} is not equivariant: it does not commute with {violations}"
            )


def _columns(operator):
    columns = {}
    for (r, c), value in operator.index_entries().items():
        columns.setdefault(c, {})[r] = value
    return columns


def _add_into(target, vector, factor=1):
    for i, value in vector.items():
        new = target.get(i, 0) + factor * value
        if new:
            target[i] = new
        else:
            target.pop(i, None)


def tensor_pairing(first, second):
    """W1 (x) W2 -> tensor(W1, W2), the identity on the tensor product"""
    target = tensor_representation(first, second)
    entries = {
        (i1, i2, i1 * second.dim + i2): 1
        for i1 in range(first.dim)
        for i2 in range(second.dim)
    }
    return PairingData(first, second, target, entries, name="tensor")


def _is_trivial(representation):
    return representation.dim == 1 and all(
        representation.rho(label).is_zero for label in representation.scope_labels
    )


def unit_pairing(first, second):
    """W (x) R -> W or R (x) W -> W, multiplication by the trivial factor"""
    if _is_trivial(second):
        entries = {(i, 0, i): 1 for i in range(first.dim)}
        return PairingData(first, second, first, entries, name="unit")
    if _is_trivial(first):
        entries = {(0, i, i): 1 for i in range(second.dim)}
        return PairingData(first, second, second, entries, name="unit")
    raise PairingError(f"neither {first} nor {second} is the trivial module")


def bracket_pairing(first, second):
    """g (x) g -> g, the Lie bracket on the adjoint module"""
    algebra = first.algebra
    for module in (first, second):
        if not module.space.same_labels(algebra.basis):
            raise PairingError(f"{module} is not the adjoint module of {algebra}")
    entries = {}
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            for k, value in algebra.bracket_indices(i, j).items():
                entries[(i, j, k)] = value
    return PairingData(first, second, first, entries, name="bracket")


def composition_pairing(first, second):
    """End(V) (x) End(V) -> End(V), composition of endomorphisms

    End(V) = V (x) V* has the basis E_ab = v_a.v_b*, and E_ab E_cd = delta_bc E_ad.
    """
    size = isqrt(first.dim)
    if size * size != first.dim or not first.space.same_labels(second.space):
        raise PairingError(f"{first} and {second} are not both End(V)")
    entries = {}
    for a in range(size):
        for b in range(size):
            for d in range(size):
                entries[(a * size + b, b * size + d, a * size + d)] = 1
    return PairingData(first, second, first, entries, name="composition")


def evaluation_pairing(first, second):
    """W (x) W* -> R, the duality pairing"""
    if first.dim != second.dim:
        raise PairingError(f"{second} is not the dual of {first}")
    target = trivial_representation(first.algebra, first.grading)
    entries = {(i, i, 0): 1 for i in range(first.dim)}
    return PairingData(first, second, target, entries, name="evaluation")


PAIRING_BUILDERS = {
    "tensor": tensor_pairing,
    "unit": unit_pairing,
    "bracket": bracket_pairing,
    "composition": composition_pairing,
    "evaluation": evaluation_pairing,
}


def build_pairing(name, first, second):
    """Return the validated pairing `name` of first and second"""
    if name not in PAIRING_BUILDERS:
        raise PairingError(
            f"unknown pairing '{name}'. Options are {list(PAIRING_BUILDERS)}"
        )
    return PAIRING_BUILDERS[name](first, second)


class TriplePairing:
    """The four pairings a triple product needs

    (W1 (x) W2) (x) W3 -> W12 (x) W3 -> W4 by first_pair then pair_first_with_third,
    W1 (x) (W2 (x) W3) -> W1 (x) W23 -> W4 by second_pair then
    pair_first_with_second.

    Attributes:
        first_pair (PairingData): P12, W1 (x) W2 -> W12
        pair_first_with_third (PairingData): P12_3, W12 (x) W3 -> W4
        second_pair (PairingData): P23, W2 (x) W3 -> W23
        pair_first_with_second (PairingData): P1_23, W1 (x) W23 -> W4
    """

    def __init__(self, p12, p12_3, p23, p1_23, check=True):
        self.first_pair = p12
        self.pair_first_with_third = p12_3
        self.second_pair = p23
        self.pair_first_with_second = p1_23
        matching = [
            (p12.target, p12_3.first),
            (p23.target, p1_23.second),
            (p12.first, p1_23.first),
            (p12.second, p23.first),
            (p23.second, p12_3.second),
            (p12_3.target, p1_23.target),
        ]
        for a, b in matching:
            if not a.space.same_labels(b.space):
                raise PairingError(f"{a} and {b} must be the same module in {self}")
        if check:
            violations = self.associativity_violations()
            if violations:
                raise PairingError(
                    f"{self} is not associative on the basis triples {violations[:3]}"
                )

    def __repr__(self):
        return (
            f"{self.__class__.__name__}({self.first_pair.first.name}, "
            f"{self.first_pair.second.name}, {self.second_pair.second.name})"
        )

    def associativity_violations(self):
        """Basis triples (i1, i2, i3) on which the two ways of pairing differ"""
        violations = []
        dims = (
            self.first_pair.first.dim,
            self.first_pair.second.dim,
            self.second_pair.second.dim,
        )
        for i1 in range(dims[0]):
            for i2 in range(dims[1]):
                left_pair = self.first_pair.pair({i1: 1}, {i2: 1})
                for i3 in range(dims[2]):
                    left = self.pair_first_with_third.pair(left_pair, {i3: 1})
                    right_pair = self.second_pair.pair({i2: 1}, {i3: 1})
                    right = self.pair_first_with_second.pair({i1: 1}, right_pair)
                    if left != right:
                        violations.append((i1, i2, i3))
        return violations


def triple_through_unit(representation):
    """The triple pairing of (W, R, W) into W (x) W, with unit and tensor pairings"""
    trivial = trivial_representation(representation.algebra, representation.grading)
    left_unit = unit_pairing(representation, trivial)
    right_unit = unit_pairing(trivial, representation)
    tensor = tensor_pairing(representation, representation)
    return TriplePairing(left_unit, tensor, right_unit, tensor)


def triple_tensor(first, second, third):
    """The triple pairing of (W1, W2, W3) into W1 (x) W2 (x) W3"""
    p12 = tensor_pairing(first, second)
    p23 = tensor_pairing(second, third)
    p12_3 = tensor_pairing(p12.target, third)
    p1_23 = tensor_pairing(first, p23.target)
    return TriplePairing(p12, p12_3, p23, p1_23)


def triple_from_pairing(pairing):
    """The triple pairing (P, P, P, P) of an algebra pairing A (x) A -> A"""
    return TriplePairing(pairing, pairing, pairing, pairing)
