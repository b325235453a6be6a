"""Lie algebra homology of m* with values in a representation

This module assembles the chain spaces C_k = Lambda^k m* (x) W, the action of p on
them, the codifferential delta, the coboundary d, Kostant's quabla and the Hodge
splitting of every C_k into im d, ker quabla and im delta.

Basis convention: C_k has the basis eps^I (x) w for strictly increasing
multi-indices I in lexicographic order (the outer loop) and the basis of W (the
inner loop). All signs of wedge and interior products derive from this order:
e_i _| eps^I = (-1)^p eps^(I without i) where p is the position of i in I, and
eps^i ^ eps^I = (-1)^q eps^J where q is the number of entries of I below i.
"""

from itertools import combinations

from sympy import QQ

from .exceptions import ContractError, RepresentationError, InvariantError
from .operator_matrix import OperatorMatrix, rank_factor, invert_square
from .representations import representation_from_matrices
from .spaces import BasedSpace, SubspaceBasis, column_matrix
from .tools import (
    binomial,
    interior_index,
    wedge_indices,
    replace_index,
    rational_to_string,
    say,
)

HALF = QQ(1, 2)
CHAIN_SEPARATOR = "|"


class ChainSpace(BasedSpace):
    """The space C_k(m*, W) of k-chains

    Attributes:
        k (int): The degree
        grading (ParabolicGrading): The grading giving m* and its basis eps^i
        representation (RepresentationData): The coefficient module W
        multi_indices (list of tuple): The increasing multi-indices I, in order
    """

    def __init__(self, grading, representation, k):
        n = grading.n
        if not 0 <= k <= n:
            raise ContractError(f"chain degree {k} is outside 0..{n}")
        self.k = k
        self.grading = grading
        self.representation = representation
        self.multi_indices = list(combinations(range(n), k))
        self._position = {I: p for p, I in enumerate(self.multi_indices)}
        eps_labels = grading.m_dual_labels
        eps_weights = grading.m_dual_weights()
        W = representation.space
        labels, weights = [], []
        for I in self.multi_indices:
            form_label = "^".join(eps_labels[i] for i in I) or "1"
            form_weight = sum((eps_weights[i] for i in I), QQ(0))
            for w_label, w_weight in zip(W.labels, W.weights):
                labels.append(f"{form_label}{CHAIN_SEPARATOR}{w_label}")
                weights.append(form_weight + w_weight)
        super().__init__(labels, weights, name=f"C{k}({representation.name})")

    @property
    def fiber_dim(self):
        return self.representation.dim

    def chain_index(self, multi_index, w):
        """The index of eps^multi_index (x) w_w"""
        return self._position[multi_index] * self.fiber_dim + w

    def split_index(self, index):
        """Return (multi_index, w) of the basis vector with the given index"""
        return self.multi_indices[index // self.fiber_dim], index % self.fiber_dim


def chain_space(grading, representation, k):
    """Return the ChainSpace C_k(m*, W)"""
    return ChainSpace(grading, representation, k)


def _by_column(dok):
    """Group the entries {(r, c): v} of a sparse matrix by column: {c: [(r, v)]}"""
    columns = {}
    for (r, c), value in dok.items():
        columns.setdefault(c, []).append((r, value))
    return columns


def derivation_on_forms(action_columns, multi_index):
    """Apply the derivation extension of a map m* -> m* to eps^multi_index

    Args:
        action_columns (dict): {i: [(l, value)]}, the map sends eps^i to
            sum value * eps^l
        multi_index (tuple): I

    Returns:
        dict: {J: coefficient}, the image as a combination of eps^J
    """
    result = {}
    for s, i in enumerate(multi_index):
        for l, value in action_columns.get(i, ()):
            sign, J = replace_index(multi_index, s, l)
            if sign:
                new = result.get(J, 0) + sign * value
                if new:
                    result[J] = new
                else:
                    result.pop(J)
    return result


class _Assembler:
    """Collects entries of a sparse matrix between two ChainSpaces"""

    def __init__(self, domain, codomain):
        self.domain = domain
        self.codomain = codomain
        self.dok = {}

    def add(self, row, column, value):
        if not value:
            return
        key = (row, column)
        new = self.dok.get(key, 0) + value
        if new:
            self.dok[key] = new
        else:
            del self.dok[key]

    def result(self, name=None):
        return OperatorMatrix.from_index_entries(
            self.domain, self.codomain, self.dok, name=name
        )


class HodgeSplit:
    """The splitting of a space into image of d, harmonic part and image of delta

    The coordinate maps are the rows of the inverse of the matrix whose columns are
    the three bases, so `coordinates_d` kills the harmonic part and the image of
    delta, and so on.

    Attributes:
        image_d (SubspaceBasis): The image of the raising operator into the space
        harmonic (SubspaceBasis): The kernel of the quabla
        image_delta (SubspaceBasis): The image of the lowering operator
        coordinates_d (OperatorMatrix): space -> coordinates on image_d
        projection (OperatorMatrix): space -> coordinates on harmonic
        coordinates_delta (OperatorMatrix): space -> coordinates on image_delta
    """

    def __init__(self, space, into_up=None, into_down=None, out_of=(), quabla=None):
        """Compute and check the splitting

        Args:
            space (BasedSpace): The space split
            into_up (OperatorMatrix): The raising operator into space (like d_{k-1})
            into_down (OperatorMatrix): The lowering operator into space (like
                delta_{k+1})
            out_of (list of OperatorMatrix): The operators out of space (like d_k
                and delta_k), whose common kernel must be the harmonic part
            quabla (OperatorMatrix): The quabla on space

        Raises:
            InvariantError: if the summands are not independent, do not fill the
                space, or ker quabla differs from the common kernel of out_of
        """
        self.space = space
        self.image_d = self._image(into_up, "D")
        self.image_delta = self._image(into_down, "B")
        kernel, _, _ = rank_factor(quabla)
        self.harmonic = SubspaceBasis(space, kernel.matrix, name="H", check=False)
        dims = (self.image_d.dim, self.harmonic.dim, self.image_delta.dim)
        if sum(dims) != space.dim:
            raise InvariantError(
                f"the Hodge summands of {space} have dimensions {dims}, which do not "
                f"add up to {space.dim}"
            )
        columns = self.image_d.vectors + self.harmonic.vectors + self.image_delta.vectors
        inverse = invert_square(column_matrix(columns, space.dim))
        if inverse is None:
            raise InvariantError(f"the Hodge summands of {space} are not independent")
        a, h = dims[0], dims[1]
        rows = inverse.to_dok()
        self.coordinates_d = self._rows(rows, 0, a, self.image_d)
        self.projection = self._rows(rows, a, a + h, self.harmonic)
        self.coordinates_delta = self._rows(rows, a + h, space.dim, self.image_delta)
        self._check_common_kernel(out_of)

    def _image(self, operator, name):
        if operator is None:
            return SubspaceBasis(self.space, [], name=name)
        _, image, _ = rank_factor(operator)
        return SubspaceBasis(self.space, image.matrix, name=name, check=False)

    def _rows(self, rows, start, stop, subspace):
        dok = {(i - start, j): v for (i, j), v in rows.items() if start <= i < stop}
        return OperatorMatrix.from_index_entries(
            self.space, subspace.coordinate_space(), dok
        )

    def _check_common_kernel(self, out_of):
        dok, offset = {}, 0
        for operator in out_of:
            for (i, j), value in operator.index_entries().items():
                dok[(offset + i, j)] = value
            offset += operator.codomain.dim
        stacked = OperatorMatrix.from_index_entries(
            self.space, BasedSpace.coordinate_space(offset), dok
        )
        kernel, _, _ = rank_factor(stacked)
        if not kernel.span_equals(self.harmonic):
            raise InvariantError(
                f"on {self.space} the common kernel of d and delta is not the kernel "
                "of the quabla"
            )

    @property
    def dims(self):
        """(dim im d, dim harmonic, dim im delta)"""
        return self.image_d.dim, self.harmonic.dim, self.image_delta.dim

    def embedding_d(self):
        return self.image_d.embedding()

    def embedding_harmonic(self):
        return self.harmonic.embedding()

    def embedding_delta(self):
        return self.image_delta.embedding()


class HomologyModule:
    """The homology H_k(m*, W), realized by the harmonic chains

    Attributes:
        k (int): The degree
        harmonic_basis (SubspaceBasis): The harmonic chains, ker quabla in C_k
        space (BasedSpace): The homology fiber, with labels H{k}_0, H{k}_1, ...
        embedding (OperatorMatrix): space -> C_k, onto the harmonic chains
        projection (OperatorMatrix): C_k -> space, killing im d and im delta
        g0_action (dict): {label: OperatorMatrix} the action of g0 on harmonic
            coordinates
        project_matrix (OperatorMatrix): ker delta coordinates -> harmonic
            coordinates, whose kernel is im delta
        dims (tuple): (dim im d, dim harmonic, dim im delta)
    """

    def __init__(self, complex_data, k):
        self.k = k
        self.complex = complex_data
        split = complex_data.hodge_split(k)
        self.split = split
        self.harmonic_basis = split.harmonic
        self.dims = split.dims
        chains = complex_data.spaces[k]
        weights = [w if w is not None else 0 for w in split.harmonic.weights()]
        self.space = BasedSpace.coordinate_space(
            self.dim, prefix=f"H{k}_", weights=weights, name=f"H{k}"
        )
        self.embedding = OperatorMatrix(
            self.space, chains, split.harmonic.matrix, name=f"E_H{k}"
        )
        self.projection = OperatorMatrix(
            chains, self.space, split.projection.matrix, name=f"proj_H{k}"
        )
        self.g0_action = {
            label: self.projection @ complex_data.p_action(label, k) @ self.embedding
            for label in complex_data.grading.g0_labels
        }
        cycles = complex_data.cycles(k)
        self.project_matrix = self.projection @ cycles.embedding()

    def __repr__(self):
        return f"{self.__class__.__name__}(k={self.k}, dim={self.dim})"

    @property
    def dim(self):
        return self.harmonic_basis.dim

    def weights(self):
        """The weight multiset of the harmonic basis, as sorted strings"""
        return [rational_to_string(w) for w in sorted(self.space.weights)]


class ChainComplexData:
    """The chain complex C_*(m*, W) with delta, d, quabla and the p-action

    Operators are assembled when first needed and cached.

    Attributes:
        grading (ParabolicGrading): The graded algebra
        representation (RepresentationData): W
        n (int): dim m
        spaces (list of ChainSpace): C_0, ..., C_n
    """

    def __init__(self, grading, representation):
        self.grading = grading
        self.algebra = grading.algebra
        self.representation = representation
        self.n = grading.n
        self.spaces = [ChainSpace(grading, representation, k) for k in range(self.n + 1)]
        for k, space in enumerate(self.spaces):
            expected = binomial(self.n, k) * representation.dim
            if space.dim != expected:
                raise InvariantError(f"dim {space} = {space.dim} != {expected}")
        self._delta = {}
        self._d = {}
        self._quabla = {}
        self._p_action = {}
        self._wedge = {}
        self._hodge = {}
        self._homology = {}
        self._cycles = {}
        self._eps_actions = {}
        self._rho_columns = {}

    def __repr__(self):
        return (
            f"{self.__class__.__name__}('{self.algebra.name}', "
            f"W='{self.representation.name}')"
        )

    @property
    def name(self):
        return f"{self.algebra.name}/{self.representation.name}"

    @property
    def is_abelian(self):
        return self.grading.is_abelian

    def _check_degree(self, k):
        if not 0 <= k <= self.n:
            raise ContractError(f"degree {k} is outside 0..{self.n} for {self}")

    def _action_columns(self, label):
        """The m*-part of ad(label) on m*, grouped by column"""
        if label not in self._eps_actions:
            self._eps_actions[label] = _by_column(self.grading.m_dual_action(label))
        return self._eps_actions[label]

    def _rho(self, label):
        """The action of label on W, grouped by column"""
        if label not in self._rho_columns:
            self._rho_columns[label] = _by_column(
                self.representation.rho(label).index_entries()
            )
        return self._rho_columns[label]

    def delta(self, k):
        """The codifferential delta_k: C_k -> C_{k-1}, for 0 <= k <= n

        delta_0 is the zero map into the zero space C_-1.

        delta(beta (x) w) = sum_i 1/2 eps^i.(e_i _| beta) (x) w
                            + (e_i _| beta) (x) eps^i.w
        """
        self._check_degree(k)
        if k == 0 and 0 not in self._delta:
            self._delta[0] = OperatorMatrix.zero(
                self.spaces[0], BasedSpace([], name="C_-1"), name="delta_0"
            )
        if k not in self._delta:
            source, target = self.spaces[k], self.spaces[k - 1]
            assembler = _Assembler(source, target)
            eps_labels = self.grading.m_dual_labels
            for column in range(source.dim):
                I, w = source.split_index(column)
                for s, i in enumerate(I):
                    sign = (-1) ** s
                    rest = I[:s] + I[s + 1 :]
                    action = self._action_columns(eps_labels[i])
                    for J, value in derivation_on_forms(action, rest).items():
                        row = target.chain_index(J, w)
                        assembler.add(row, column, HALF * sign * value)
                    for r, value in self._rho(eps_labels[i]).get(w, ()):
                        assembler.add(target.chain_index(rest, r), column, sign * value)
            self._delta[k] = assembler.result(name=f"delta_{k}")
        return self._delta[k]

    def d(self, k):
        """The coboundary d_k: C_k -> C_{k+1}, for 0 <= k <= n

        d_n is the zero map into the zero space C_{n+1}.

        d(beta (x) w) = sum_i 1/2 eps^i ^ (e_i.beta) (x) w + eps^i ^ beta (x) e_i.w

        Raises:
            RepresentationError: if W is only a p-module
        """
        self._check_degree(k)
        if not self.representation.is_g_module:
            raise RepresentationError(
                f"coboundary needs g-module, but {self.representation} is a p-module"
            )
        if k == self.n and k not in self._d:
            self._d[k] = OperatorMatrix.zero(
                self.spaces[k], BasedSpace([], name=f"C_{k + 1}"), name=f"d_{k}"
            )
        if k not in self._d:
            source, target = self.spaces[k], self.spaces[k + 1]
            assembler = _Assembler(source, target)
            for column in range(source.dim):
                I, w = source.split_index(column)
                for i, e_label in enumerate(self.grading.m_labels):
                    action = self._action_columns(e_label)
                    for J, value in derivation_on_forms(action, I).items():
                        sign, K = wedge_indices((i,), J)
                        if sign:
                            row = target.chain_index(K, w)
                            assembler.add(row, column, HALF * sign * value)
                    sign, K = wedge_indices((i,), I)
                    if sign:
                        for r, value in self._rho(e_label).get(w, ()):
                            assembler.add(target.chain_index(K, r), column, sign * value)
            self._d[k] = assembler.result(name=f"d_{k}")
        return self._d[k]

    def has_d(self, k):
        return 0 <= k < self.n

    def has_delta(self, k):
        return 1 <= k <= self.n

    def quabla(self, k):
        """Kostant's quabla delta d + d delta on C_k"""
        self._check_degree(k)
        if k not in self._quabla:
            space = self.spaces[k]
            result = OperatorMatrix.zero(space, space)
            if self.has_d(k):
                result = result + self.delta(k + 1) @ self.d(k)
            if self.has_delta(k):
                result = result + self.d(k - 1) @ self.delta(k)
            result.name = f"quabla_{k}"
            self._quabla[k] = result
        return self._quabla[k]

    def p_action(self, label, k):
        """The action of the basis element `label` of p on C_k

        xi.(beta (x) w) = (sum_i [xi, eps^i]_m* ^ (e_i _| beta)) (x) w + beta (x) xi.w
        """
        self._check_degree(k)
        if label not in self.grading.p_labels:
            raise ContractError(f"{label} is not in p, so it does not act on chains")
        key = (label, k)
        if key not in self._p_action:
            space = self.spaces[k]
            assembler = _Assembler(space, space)
            action = self._action_columns(label)
            rho = self._rho(label)
            for column in range(space.dim):
                I, w = space.split_index(column)
                for J, value in derivation_on_forms(action, I).items():
                    assembler.add(space.chain_index(J, w), column, value)
                for r, value in rho.get(w, ()):
                    assembler.add(space.chain_index(I, r), column, value)
            self._p_action[key] = assembler.result(name=f"{label}.C_{k}")
        return self._p_action[key]

    def wedge(self, i, k):
        """The map eps^i ^ : C_k -> C_{k+1}"""
        key = (i, k)
        if key not in self._wedge:
            source, target = self.spaces[k], self.spaces[k + 1]
            assembler = _Assembler(source, target)
            for column in range(source.dim):
                I, w = source.split_index(column)
                sign, J = wedge_indices((i,), I)
                if sign:
                    assembler.add(target.chain_index(J, w), column, sign)
            self._wedge[key] = assembler.result(name=f"eps{i}^")
        return self._wedge[key]

    def interior(self, i, k):
        """The map e_i _| : C_k -> C_{k-1}"""
        source, target = self.spaces[k], self.spaces[k - 1]
        assembler = _Assembler(source, target)
        for column in range(source.dim):
            I, w = source.split_index(column)
            sign, rest = interior_index(i, I)
            if sign:
                assembler.add(target.chain_index(rest, w), column, sign)
        return assembler.result(name=f"e{i}_|")

    def hodge_split(self, k):
        """The HodgeSplit of C_k into im d_{k-1}, ker quabla_k and im delta_{k+1}"""
        self._check_degree(k)
        if k not in self._hodge:
            say(f"Hodge splitting C_{k} of {self.name}")
            out_of = []
            if self.has_d(k):
                out_of.append(self.d(k))
            if self.has_delta(k):
                out_of.append(self.delta(k))
            self._hodge[k] = HodgeSplit(
                self.spaces[k],
                into_up=self.d(k - 1) if self.has_delta(k) else None,
                into_down=self.delta(k + 1) if self.has_d(k) else None,
                out_of=out_of,
                quabla=self.quabla(k),
            )
        return self._hodge[k]

    def cycles(self, k):
        """Z_k = ker delta_k as a SubspaceBasis (all of C_0 for k = 0)"""
        if k not in self._cycles:
            if self.has_delta(k):
                kernel, _, _ = rank_factor(self.delta(k))
                self._cycles[k] = SubspaceBasis(
                    self.spaces[k], kernel.matrix, name="Z", check=False
                )
            else:
                self._cycles[k] = SubspaceBasis(
                    self.spaces[k], [{i: 1} for i in range(self.spaces[k].dim)], name="Z"
                )
        return self._cycles[k]

    def homology(self, k):
        """The HomologyModule H_k(m*, W)"""
        if k not in self._homology:
            self._homology[k] = HomologyModule(self, k)
        return self._homology[k]

    def homology_dims(self):
        return [self.homology(k).dim for k in range(self.n + 1)]

    def euler_characteristic(self):
        return sum((-1) ** k * dim for k, dim in enumerate(self.homology_dims()))

    def homology_table(self):
        """Rows of the homology table, one dict per degree"""
        rows = []
        for k in range(self.n + 1):
            module = self.homology(k)
            a, h, b = module.dims
            rows.append(
                {
                    "k": k,
                    "dim_C": self.spaces[k].dim,
                    "dim_im_d": a,
                    "dim_harmonic": h,
                    "dim_im_delta": b,
                    "dim_H": module.dim,
                    "harmonic_weights": ";".join(module.weights()),
                }
            )
        return rows


def chain_representation(complex_data, k):
    """C_k with the p-action, as a p-module-only RepresentationData"""
    space = complex_data.spaces[k]
    matrices = {
        label: complex_data.p_action(label, k).matrix
        for label in complex_data.grading.p_labels
    }
    return representation_from_matrices(
        complex_data.algebra,
        complex_data.grading,
        list(space.labels),
        matrices,
        space.name,
        scope="p",
    )


def homology_module(complex_data, k):
    return complex_data.homology(k)


def hodge_split(complex_data, k):
    split = complex_data.hodge_split(k)
    return split.image_d, split.harmonic, split.image_delta


def boundary_delta(complex_data, k):
    return complex_data.delta(k)


def coboundary_d(complex_data, k):
    return complex_data.d(k)


def p_action_matrix(label, complex_data, k):
    return complex_data.p_action(label, k)
