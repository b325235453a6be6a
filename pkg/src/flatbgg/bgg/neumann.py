"""Inversion of a first-order quabla on an invariant subbundle by a Neumann series

Write L = L0 + P where L0 is the order-zero part of the symbol. In the coordinates of
a subbundle S, M = L0|S is invertible and N = -M^-1 P lowers the geometric weight,
so N is nilpotent and (M + P)^-1 = sum_j N^j M^-1 is a finite sum. The sum is
formed symbolically, so the nilpotency index found is independent of any degree
cutoff.
"""

from sympy import QQ

from ..exceptions import ContractError, InvariantError
from ..flat_model import FlatOperator
from ..operator_matrix import OperatorMatrix, invert_square
from ..tools import say


class NeumannInverse:
    """The inverse of a FlatOperator restricted to, or induced on, a subbundle

    With quotient=False, the subbundle S must be invariant (L maps S-sections to
    S-sections) and the inverse is that of the restriction. With quotient=True, the
    kernel of the coordinate map must be invariant and the inverse is that of the
    induced operator on the quotient, identified with S.

    Attributes:
        operator (FlatOperator): L, on sections of the ambient fiber
        embedding (OperatorMatrix): E, from coordinates on S into the fiber
        coordinates (OperatorMatrix): C, from the fiber to coordinates on S, C E = 1
        coordinate_inverse (FlatOperator): (C L E)^-1 on S-coordinate sections
        inverse (FlatOperator): E (C L E)^-1 C on sections of the ambient fiber
        symbolic_index (int): smallest j with N^j = 0, 0 if S = 0
    """

    def __init__(self, operator, embedding, coordinates, quotient=False, name=None):
        self.operator = operator
        self.embedding = embedding
        self.coordinates = coordinates
        self.quotient = quotient
        self.name = name or operator.name
        self.n_vars = operator.n_vars
        self.dim = embedding.domain.dim
        self.symbolic_index = None
        self._lift_embedding = FlatOperator.lift(embedding, self.n_vars)
        self._lift_coordinates = FlatOperator.lift(coordinates, self.n_vars)
        self._check_invariance()
        self.coordinate_inverse, self.symbolic_index = self._invert()
        self.inverse = (
            self._lift_embedding @ self.coordinate_inverse @ self._lift_coordinates
        )
        self.inverse.name = f"inverse({self.name})"
        self._check_two_sided()

    def __repr__(self):
        return (
            f"{self.__class__.__name__}('{self.name}', dim={self.dim}, "
            f"index={self.symbolic_index})"
        )

    def _check_invariance(self):
        space = self.operator.domain
        identity = FlatOperator.identity(space, self.n_vars)
        complement = identity - self._lift_embedding @ self._lift_coordinates
        if self.quotient:
            leak = self._lift_coordinates @ self.operator @ complement
        else:
            leak = complement @ self.operator @ self._lift_embedding
        if not leak.is_zero:
            kind = "the kernel of the coordinates" if self.quotient else "the subbundle"
            raise ContractError(f"{self.operator} does not preserve {kind} of {self}")

    def weight_spread(self):
        """max - min of the geometric weights of S, 0 if S = 0"""
        weights = self.embedding.domain.weights
        return max(weights) - min(weights) if weights else QQ(0)

    def _invert(self):
        space = self.embedding.domain
        if not self.dim:
            return FlatOperator.zero(space, space, self.n_vars), 0
        zero = (0,) * self.n_vars
        order_zero = self.operator.symbol.get(zero)
        if order_zero is None:
            order_zero = OperatorMatrix.zero(
                self.operator.domain, self.operator.codomain
            )
        constant = self.coordinates @ order_zero @ self.embedding
        inverse_matrix = invert_square(constant.matrix)
        if inverse_matrix is None:
            raise InvariantError(
                f"the order zero part of {self.operator} is singular on {self}"
            )
        constant_inverse = FlatOperator.lift(
            OperatorMatrix(space, space, inverse_matrix), self.n_vars
        )
        higher = self.operator - self.operator.homogeneous_part(0)
        perturbation = self._lift_coordinates @ higher @ self._lift_embedding
        step = -(constant_inverse @ perturbation)
        spread = self.weight_spread()
        cap = int(QQ.numer(spread) // QQ.denom(spread)) + 1
        total = constant_inverse
        power = step
        index = 1
        while not power.is_zero:
            if index >= cap:
                raise InvariantError(
                    f"N is not nilpotent within {cap} steps for {self}, although it "
                    "lowers the geometric weight"
                )
            total = total + power @ constant_inverse
            power = power @ step
            index += 1
        say(f"Neumann series of {self.name} terminated at index {index}")
        return total, index

    def _check_two_sided(self):
        space = self.embedding.domain
        identity = FlatOperator.identity(space, self.n_vars)
        restricted = self._lift_coordinates @ self.operator @ self._lift_embedding
        if not (
            (restricted @ self.coordinate_inverse).equals(identity)
            and (self.coordinate_inverse @ restricted).equals(identity)
        ):
            raise InvariantError(
                f"the Neumann series of {self} is not a two-sided inverse"
            )

    def truncated_index(self, max_degree):
        """The nilpotency index of N on sections of degree <= max_degree

        N lowers the polynomial degree by one, so the index never exceeds
        max_degree + 1.
        """
        if not self.dim:
            return 0
        return min(self.symbolic_index, max_degree + 1)

    def inverse_on_sections(self):
        """Whether L R E = E and R L E = E hold symbolically (invariant case)"""
        if self.quotient:
            return None
        left = self.operator @ self.inverse @ self._lift_embedding
        right = self.inverse @ self.operator @ self._lift_embedding
        return left.equals(self._lift_embedding) and right.equals(self._lift_embedding)

