"""The verification suite: every identity of the construction as an exact check

A check runs one identity on the configured instance and produces a CheckRecord
with status "pass", "fail" or "not applicable". Nothing is skipped silently: when a
check cannot run (the algebra failed validation, the flat calculus does not apply,
the degree cutoff is too small) it is recorded as not applicable with the reason.

Checks are grouped. The scopes of verify_suite select groups:

    homology: lie, homology
    flat, bgg, cup, ainf, dual, deform: lie and the group of the same name
    all: every group

The lie group runs first. When one of its checks fails, every later check is
recorded as not applicable.

Constants:
    CHECK_GROUPS (dict): {group: [(name, anchor, method name)]}
    SCOPES (dict): {scope: tuple of groups}
"""

import warnings

import numpy as np

from .config import config
from .exceptions import (
    AlgebraError,
    ContractError,
    DeformationError,
    FlatModelError,
    InvariantError,
    PairingError,
    RepresentationError,
)
from .flat_model import FlatOperator, Section, coordinate_exterior_derivative
from .homology import ChainComplexData
from .lie_algebra import ParabolicGrading
from .operator_matrix import OperatorMatrix
from .representations import (
    build_representation,
    dual_representation,
    end_representation,
    lowering_violations,
    validate_representation,
)
from .tools import Timer, catalan_number, say
from .bgg.a_infinity import (
    AInfinityMaps,
    lambda_term_count,
    select_sign_convention,
)
from .bgg.context import BGGContext, kernel_stabilization, twistor_kernel
from .bgg.deformation import deformation_obstruction
from .bgg.duality import (
    CapProduct,
    DualBGGContext,
    cap_pairing_residual,
    divergence_adjointness_residual,
)
from .bgg.pairings import (
    composition_pairing,
    tensor_pairing,
    triple_from_pairing,
    unit_pairing,
)
from .bgg.products import CupProduct, TripleProduct

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not applicable"

CHECK_ERRORS = (
    AlgebraError,
    ContractError,
    DeformationError,
    FlatModelError,
    InvariantError,
    PairingError,
    RepresentationError,
)

CHECK_GROUPS = {
    "lie": [
        ("antisymmetry", "[a, b] = -[b, a]", "check_antisymmetry"),
        ("Jacobi identity", "[a, [b, c]] + cyclic = 0", "check_jacobi"),
        ("grading layers", "[g_a, g_b] in g_{a+b}", "check_grading"),
        ("Killing pairing on m x m*", "B(eps^i, e_j) = c delta^i_j", "check_killing"),
        (
            "representation bracket compatibility",
            "rho([a, b]) = [rho(a), rho(b)]",
            "check_representation",
        ),
        ("m* strictly lowers weights", "rho(eps) W_w in W_{<w}", "check_lowering"),
    ],
    "homology": [
        ("delta^2 = 0", "delta_{k-1} delta_k = 0", "check_delta_squared"),
        ("d^2 = 0", "d_{k+1} d_k = 0", "check_d_squared"),
        (
            "Cartan identity",
            "delta(eps ^ c) + eps ^ delta(c) = eps.c",
            "check_cartan",
        ),
        ("p-equivariance of delta", "delta(xi.c) = xi.delta(c)", "check_equivariance"),
        ("Hodge split dimensions", "im d + ker quabla + im delta = C_k", "check_hodge"),
        (
            "ker d cap ker delta = ker quabla",
            "ker d cap ker delta = ker quabla",
            "check_harmonic",
        ),
        ("m* acts trivially on homology", "proj eps.h = 0", "check_m_dual_action"),
        ("Euler characteristic 0", "sum (-1)^k dim H_k = 0", "check_euler"),
        (
            "dim H_k(W) = dim H_{n-k}(W*)",
            "dim H_k(W) = dim H_{n-k}(W*)",
            "check_poincare",
        ),
    ],
    "flat": [
        ("(d^g)^2 = 0", "d^g_{k+1} d^g_k = 0", "check_twisted_squared"),
        (
            "lifted Cartan identity",
            "delta dx + dx delta = sum eps^i.d_i",
            "check_lifted_cartan",
        ),
        ("degree filtration", "order(dx) = 1, order(lift) = 0", "check_filtration"),
        (
            "quabla_eta - quabla = eps action",
            "quabla_eta - quabla = sum eps^i.d_i",
            "check_epsilon_action",
        ),
        (
            "quabla_eta commutes with delta",
            "delta quabla_eta = quabla_eta delta",
            "check_commutation",
        ),
    ],
    "bgg": [
        ("Neumann nilpotency", "N^j = 0, j <= D + 1", "check_nilpotency"),
        (
            "quabla_eta inverse on B_k",
            "quabla_eta R E = E, R quabla_eta E = E",
            "check_inverse",
        ),
        (
            "Q via B_k equals Q via C_k/Z_k",
            "R_{k-1} delta_k = delta_k R~_k",
            "check_two_q",
        ),
        ("Pi delta = 0", "Pi_{k-1} delta_k = 0", "check_pi_delta"),
        ("delta Pi = 0", "delta_k Pi_k = 0", "check_delta_pi"),
        (
            "project Pi = project on ker delta",
            "proj Pi z = proj z",
            "check_pi_on_cycles",
        ),
        ("Pi^2 = Pi", "Pi Pi = Pi", "check_pi_idempotent"),
        ("d^g Pi = Pi d^g", "d^g Pi_k = Pi_{k+1} d^g", "check_pi_commutes"),
        ("Pi quabla_eta = 0", "Pi quabla_eta = 0", "check_pi_quabla"),
        ("quabla_eta Pi = 0", "quabla_eta Pi = 0", "check_quabla_pi"),
        ("project represent = id", "proj Pi repr = id", "check_project_represent"),
        ("D_{k+1} D_k = 0", "D_{k+1} D_k = 0", "check_bgg_complex"),
        ("dim ker D_0 = dim W", "dim ker D_0 = dim W", "check_twistor_kernel"),
    ],
    "cup": [
        (
            "Leibniz rule",
            "D(a cup b) = Da cup b + (-1)^k a cup Db",
            "check_leibniz",
        ),
        (
            "twistor extension",
            "Pi repr(a cup b) = P(Pi repr a, Pi repr b)",
            "check_twistor_extension",
        ),
        (
            "associator identity",
            "D<a,b,c> = (a cup b) cup c - a cup (b cup c) - <Da,b,c> - ...",
            "check_associator",
        ),
    ],
    "ainf": [
        ("lambda term counts", "#lambda_m = Catalan(m - 1)", "check_term_counts"),
        (
            "A-infinity relations",
            "sum (-1)^(s+r+sr+s|a_1..a_r|) mu(.., mu_s(..), ..) = 0",
            "check_a_infinity",
        ),
    ],
    "dual": [
        ("Pi_hat = (Pi)*", "Pi_hat = (Pi)*", "check_pi_hat"),
        (
            "divergence adjointness",
            "divg(a cap b) = (-1)^k (<D_k a, b> + <a, D^k b>)",
            "check_divergence",
        ),
        ("cap at l = 0 is the duality pairing", "a cap b = <a, b>", "check_cap_pairing"),
    ],
    "deform": [
        (
            "deformation obstruction closed",
            "D_1 D_0 f = 0, D_2(A cup A) = 0",
            "check_deformation",
        ),
    ],
}

SCOPES = {
    "homology": ("lie", "homology"),
    "flat": ("lie", "flat"),
    "bgg": ("lie", "bgg"),
    "cup": ("lie", "cup"),
    "ainf": ("lie", "ainf"),
    "dual": ("lie", "dual"),
    "deform": ("lie", "deform"),
    "all": tuple(CHECK_GROUPS),
}

FLAT_GROUPS = ("flat", "bgg", "cup", "ainf", "dual", "deform")


class CheckRecord:
    """The result of one check

    Attributes:
        name (str): The identity, as named in CHECK_GROUPS
        anchor (str): The identity as a formula
        group (str): The check group
        status (str): "pass", "fail" or "not applicable"
        residual (int): The number of nonzero entries or violations, 0 on pass
        max_degree (int): The degree cutoff D of the instance
        seed (int): The seed of the random sections
        details (str): Violations, counts, or the reason for not applicable
        seconds (float): The wall time of the check
    """

    def __init__(
        self,
        name,
        anchor,
        group,
        status,
        residual=0,
        max_degree=None,
        seed=None,
        details="",
        seconds=None,
    ):
        self.name = name
        self.anchor = anchor
        self.group = group
        self.status = status
        self.residual = residual
        self.max_degree = max_degree
        self.seed = seed
        self.details = details
        self.seconds = seconds

    def __repr__(self):
        return f"{self.__class__.__name__}('{self.name}', {self.status})"

    def to_dict(self, with_time=False):
        as_dict = {
            "name": self.name,
            "anchor": self.anchor,
            "group": self.group,
            "status": self.status,
            "residual": self.residual,
            "max_degree": self.max_degree,
            "seed": self.seed,
            "details": self.details,
        }
        if with_time:
            as_dict["seconds"] = self.seconds
        return as_dict


class VerificationReport:
    """The records of a verify_suite run

    Attributes:
        records (list of CheckRecord): In the order the checks ran
        scope (str): The scope verified
    """

    def __init__(self, records, scope):
        self.records = records
        self.scope = scope

    def __repr__(self):
        counts = self.counts()
        return f"{self.__class__.__name__}(scope='{self.scope}', {counts})"

    def __getitem__(self, name):
        for record in self.records:
            if record.name == name:
                return record
        raise KeyError(f"no check named '{name}' in {self}")

    def counts(self):
        counts = {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0}
        for record in self.records:
            counts[record.status] += 1
        return counts

    @property
    def algebra_failed(self):
        """Whether a check of the lie group failed, which blocks all later checks"""
        return any(r.group == "lie" and r.status == FAIL for r in self.records)

    @property
    def failed(self):
        return [record for record in self.records if record.status == FAIL]

    @property
    def passed(self):
        return not self.failed

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def to_dicts(self, with_time=None):
        if with_time is None:
            with_time = config.record_timings
        return [record.to_dict(with_time=with_time) for record in self.records]

    def timings(self):
        """[{name, group, seconds}] of every check that ran"""
        return [
            {"name": r.name, "group": r.group, "seconds": r.seconds}
            for r in self.records
            if r.seconds is not None
        ]


def _flat_size(operator):
    """The number of nonzero symbol entries of a FlatOperator"""
    return sum(matrix.nnz for matrix in operator.symbol.values())


def _terms(section):
    return 0 if section is None else section.n_terms


def _report_violations(violations, limit=3):
    if not violations:
        return ""
    shown = "; ".join(str(v) for v in violations[:limit])
    more = f" and {len(violations) - limit} more" if len(violations) > limit else ""
    return f"{shown}{more}"


class VerificationSuite:
    """The checks of one instance (algebra, grading, W, D, seed)

    Contexts are built when the first check needing them runs. A check returns
    (residual, details), or (None, reason) when it does not apply.
    """

    def __init__(self, algebra, grading, expression, max_degree=None, seed=None):
        """Initiate a VerificationSuite

        Args:
            algebra (LieAlgebraData): The algebra the Lie checks run on. A faulty
                copy of grading.algebra when a fault is injected.
            grading (ParabolicGrading): The grading, of the valid algebra
            expression (str): The representation expression of W
            max_degree (int): The degree cutoff D
            seed (int): The seed of the random sections
        """
        self.algebra = algebra
        self.grading = grading
        self.expression = expression
        self.max_degree = (
            config.default_max_degree if max_degree is None else max_degree
        )
        self.seed = config.default_seed if seed is None else seed
        self.records = []
        self._blocked = None
        self._cache = {}

    def __repr__(self):
        return (
            f"{self.__class__.__name__}('{self.algebra.name}', '{self.expression}', "
            f"D={self.max_degree}, seed={self.seed})"
        )

    def _cached(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def rng(self):
        return np.random.default_rng(self.seed)

    @property
    def representation(self):
        return self._cached(
            "W",
            lambda: build_representation(
                self.expression, self.grading.algebra, self.grading
            ),
        )

    @property
    def complex(self):
        return self._cached(
            "complex", lambda: ChainComplexData(self.grading, self.representation)
        )

    @property
    def n(self):
        return self.grading.n

    def context_of(self, representation):
        key = ("context", representation.space.labels, representation.name)
        return self._cached(
            key,
            lambda: BGGContext(
                ChainComplexData(self.grading, representation), self.max_degree
            ),
        )

    @property
    def context(self):
        return self.context_of(self.representation)

    @property
    def trivial(self):
        return self.context_of(
            build_representation("trivial", self.grading.algebra, self.grading)
        )

    # ---- running ---- #

    def run(self, scope="all"):
        """Run the check groups of a scope and return a VerificationReport"""
        if scope not in SCOPES:
            raise ContractError(f"unknown scope '{scope}'. Options are {list(SCOPES)}")
        for group in SCOPES[scope]:
            for name, anchor, method in CHECK_GROUPS[group]:
                self.check(name, anchor, group, getattr(self, method))
            if group == "lie" and any(r.status == FAIL for r in self.records):
                self._blocked = "the algebra or its module failed validation"
        return VerificationReport(self.records, scope)

    def _reason_not_to_run(self, group):
        if self._blocked:
            return self._blocked
        if group in FLAT_GROUPS and not self.grading.is_abelian:
            return (
                f"flat calculus restricted to |1|-graded, but m of "
                f"{self.algebra.name} is not abelian"
            )
        return None

    def check(self, name, anchor, group, function):
        """Run one check function and append its CheckRecord"""
        record = CheckRecord(
            name, anchor, group, NOT_APPLICABLE, 0, self.max_degree, self.seed
        )
        reason = self._reason_not_to_run(group)
        if reason:
            record.details = reason
            self.records.append(record)
            return record
        say(f"checking {name}")
        with Timer() as timer:
            try:
                residual, details = function()
            except CHECK_ERRORS as error:
                residual, details = 1, f"{error.__class__.__name__}: {error}"
        record.seconds = timer.seconds
        record.details = details
        if residual is None:
            record.status = NOT_APPLICABLE
        else:
            record.residual = residual
            record.status = PASS if residual == 0 else FAIL
        self.records.append(record)
        return record

    # ---- lie ---- #

    def check_antisymmetry(self):
        violations = self.algebra.antisymmetry_violations()
        return len(violations), _report_violations(violations)

    def check_jacobi(self):
        violations = self.algebra.jacobi_violations()
        if violations:
            a, b, c = violations[0]
            details = f"violated on the triple ({a}, {b}, {c})"
            if len(violations) > 1:
                details += f" and {len(violations) - 1} more"
            return len(violations), details
        return 0, ""

    def check_grading(self):
        grading = self.grading
        ParabolicGrading(
            self.algebra,
            grading.grading_element,
            m_labels=grading.m_labels,
            m_dual_labels=grading.m_dual_labels,
        )
        layers = {
            str(w): len(labels) for w, labels in sorted(grading.layers.items())
        }
        return 0, f"layer dimensions {layers}"

    def check_killing(self):
        return (0 if self.grading.check_invariant_pairing() else 1), ""

    def check_representation(self):
        violations = validate_representation(self.representation)
        return len(violations), _report_violations(violations)

    def check_lowering(self):
        violations = lowering_violations(self.representation)
        return len(violations), _report_violations(violations)

    # ---- homology ---- #

    def check_delta_squared(self):
        X = self.complex
        residual = sum(
            (X.delta(k - 1) @ X.delta(k)).nnz for k in range(2, self.n + 1)
        )
        return residual, ""

    def check_d_squared(self):
        X = self.complex
        if not self.representation.is_g_module:
            return None, "d needs a g-module"
        residual = sum((X.d(k + 1) @ X.d(k)).nnz for k in range(self.n - 1))
        return residual, ""

    def check_cartan(self):
        X = self.complex
        residual, violations = 0, []
        for i, label in enumerate(self.grading.m_dual_labels):
            for k in range(self.n + 1):
                space = X.spaces[k]
                left = OperatorMatrix.zero(space, space)
                if k < self.n:
                    left = left + X.delta(k + 1) @ X.wedge(i, k)
                if k > 0:
                    left = left + X.wedge(i, k - 1) @ X.delta(k)
                difference = (left - X.p_action(label, k)).nnz
                if difference:
                    residual += difference
                    violations.append((label, k))
        return residual, _report_violations(violations)

    def check_equivariance(self):
        X = self.complex
        residual, violations = 0, []
        for label in self.grading.p_labels:
            for k in range(1, self.n + 1):
                left = X.delta(k) @ X.p_action(label, k)
                right = X.p_action(label, k - 1) @ X.delta(k)
                difference = (left - right).nnz
                if difference:
                    residual += difference
                    violations.append((label, k))
        return residual, _report_violations(violations)

    def check_hodge(self):
        dims = []
        for k in range(self.n + 1):
            a, h, b = self.complex.hodge_split(k).dims
            if a + h + b != self.complex.spaces[k].dim:
                return 1, f"the summands of C_{k} do not add up"
            dims.append((a, h, b))
        return 0, f"(im d, harmonic, im delta) per degree: {dims}"

    def check_harmonic(self):
        # the split checks the common kernel when it is built
        for k in range(self.n + 1):
            self.complex.hodge_split(k)
        return 0, ""

    def check_m_dual_action(self):
        X = self.complex
        residual = 0
        for k in range(self.n + 1):
            module = X.homology(k)
            for label in self.grading.m_dual_labels:
                action = module.projection @ X.p_action(label, k) @ module.embedding
                residual += action.nnz
        return residual, ""

    def check_euler(self):
        dims = self.complex.homology_dims()
        return abs(self.complex.euler_characteristic()), f"dim H_k = {dims}"

    def check_poincare(self):
        dual = ChainComplexData(self.grading, dual_representation(self.representation))
        dims, dual_dims = self.complex.homology_dims(), dual.homology_dims()
        residual = sum(dims[k] != dual_dims[self.n - k] for k in range(self.n + 1))
        return residual, f"dim H_k(W) = {dims}, dim H_k(W*) = {dual_dims}"

    # ---- flat ---- #

    def check_twisted_squared(self):
        c = self.context
        residual = sum(
            _flat_size(c.twisted_de_rham(k + 1) @ c.twisted_de_rham(k))
            for k in range(self.n - 1)
        )
        return residual, ""

    def check_lifted_cartan(self):
        c = self.context
        residual = 0
        for k in range(self.n + 1):
            space = c.spaces[k]
            total = FlatOperator.zero(space, space, self.n)
            if k < self.n:
                total = total + c.boundary(k + 1) @ coordinate_exterior_derivative(
                    c.complex, k
                )
            if k > 0:
                total = total + coordinate_exterior_derivative(
                    c.complex, k - 1
                ) @ c.boundary(k)
            residual += _flat_size(total - c.epsilon_action(k))
        return residual, ""

    def check_filtration(self):
        c = self.context
        violations = []
        for k in range(self.n):
            d_coordinate = coordinate_exterior_derivative(c.complex, k)
            if any(sum(alpha) != 1 for alpha in d_coordinate.symbol):
                violations.append(f"dx_{k}")
            if not c.twisted_de_rham(k).truncated(0).equals(c.lift(c.complex.d(k))):
                violations.append(f"dg_{k}")
        for k in range(1, self.n + 1):
            if c.boundary(k).order:
                violations.append(f"delta_{k}")
        return len(violations), _report_violations(violations)

    def check_epsilon_action(self):
        c = self.context
        residual = 0
        for k in range(self.n + 1):
            difference = c.first_order_quabla(k) - c.lift(c.complex.quabla(k))
            residual += _flat_size(difference - c.epsilon_action(k))
        return residual, ""

    def check_commutation(self):
        c = self.context
        residual = 0
        for k in range(1, self.n + 1):
            left = c.boundary(k) @ c.first_order_quabla(k)
            right = c.first_order_quabla(k - 1) @ c.boundary(k)
            residual += _flat_size(left - right)
        return residual, ""

    # ---- bgg ---- #

    def check_nilpotency(self):
        indices = self.context.nilpotency_indices(self.max_degree)
        residual = sum(
            truncated > self.max_degree + 1 for truncated, _ in indices.values()
        )
        details = ", ".join(
            f"k={k}: {truncated} (symbolic {symbolic})"
            for k, (truncated, symbolic) in indices.items()
        )
        return residual, f"nilpotency indices {details}"

    def check_inverse(self):
        failing = [
            k
            for k in range(self.n + 1)
            if not self.context.neumann(k).inverse_on_sections()
        ]
        return len(failing), _report_violations([f"k={k}" for k in failing])

    def check_two_q(self):
        c = self.context
        residual = sum(
            _flat_size(c.q_operator(k) - c.q_operator_quotient(k))
            for k in range(1, self.n + 1)
        )
        return residual, ""

    def check_pi_delta(self):
        c = self.context
        residual = sum(
            _flat_size(c.pi_operator(k - 1) @ c.boundary(k))
            for k in range(1, self.n + 1)
        )
        return residual, ""

    def check_delta_pi(self):
        c = self.context
        residual = sum(
            _flat_size(c.boundary(k) @ c.pi_operator(k)) for k in range(1, self.n + 1)
        )
        return residual, ""

    def check_pi_on_cycles(self):
        c = self.context
        residual = 0
        for k in range(self.n + 1):
            cycles = c.lift(c.complex.cycles(k).embedding())
            projection = c.harmonic_projection(k)
            difference = projection @ c.pi_operator(k) @ cycles - projection @ cycles
            residual += _flat_size(difference)
        return residual, ""

    def check_pi_idempotent(self):
        c = self.context
        residual = sum(
            _flat_size(c.pi_operator(k) @ c.pi_operator(k) - c.pi_operator(k))
            for k in range(self.n + 1)
        )
        return residual, ""

    def check_pi_commutes(self):
        c = self.context
        residual = 0
        for k in range(self.n):
            left = c.twisted_de_rham(k) @ c.pi_operator(k)
            right = c.pi_operator(k + 1) @ c.twisted_de_rham(k)
            residual += _flat_size(left - right)
        return residual, ""

    def check_pi_quabla(self):
        c = self.context
        residual = sum(
            _flat_size(c.pi_operator(k) @ c.first_order_quabla(k))
            for k in range(self.n + 1)
        )
        return residual, ""

    def check_quabla_pi(self):
        c = self.context
        residual = sum(
            _flat_size(c.first_order_quabla(k) @ c.pi_operator(k))
            for k in range(self.n + 1)
        )
        return residual, ""

    def check_project_represent(self):
        c = self.context
        residual = 0
        for k in range(self.n + 1):
            identity = FlatOperator.identity(c.homology_fiber(k), self.n)
            residual += _flat_size(c.project(k) @ c.represent(k) - identity)
        return residual, ""

    def check_bgg_complex(self):
        c = self.context
        residual = sum(
            _flat_size(c.bgg_operator(k + 1) @ c.bgg_operator(k))
            for k in range(self.n - 1)
        )
        orders = [c.bgg_operator(k).order for k in range(self.n)]
        return residual, f"orders of D_k: {orders}"

    def check_twistor_kernel(self):
        c = self.context
        weights = self.representation.weights
        spread = max(weights) - min(weights)
        if self.max_degree < spread:
            return None, (
                f"the degree cutoff {self.max_degree} is below the weight spread "
                f"{spread} of W, where the kernel of D_0 is not complete yet"
            )
        kernel = twistor_kernel(c, self.max_degree)
        target = self.representation.dim
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            stable = kernel_stabilization(c, self.max_degree)
        details = (
            f"dim ker D_0 = {kernel.dim}, dim W = {target}, stable from D = {stable}, "
            f"order of D_0 = {c.bgg_operator(0).order}"
        )
        return abs(kernel.dim - target), details

    # ---- cup ---- #

    def _tensor_cup(self):
        def build():
            W = self.representation
            pairing = tensor_pairing(W, W)
            return CupProduct(
                pairing, self.context, self.context, self.context_of(pairing.target)
            )

        return self._cached("tensor cup", build)

    def check_leibniz(self):
        cup = self._tensor_cup()
        rng = self.rng()
        residual, counted = 0, []
        for k, l in ((0, 0), (0, 1), (1, 1)):
            if k + l + 1 > self.n:
                continue
            for _ in range(config.n_random_samples):
                alpha = self.context.random_homology_section(k, rng)
                beta = self.context.random_homology_section(l, rng)
                residual += _terms(cup.leibniz_residual(alpha, k, beta, l))
            counted.append((k, l))
        if not counted:
            return None, "no degrees (k, l) with k + l + 1 <= dim m"
        return residual, f"{config.n_random_samples} samples for (k, l) in {counted}"

    def check_twistor_extension(self):
        cup = self._tensor_cup()
        kernel = twistor_kernel(self.context, self.max_degree)
        sections = [Section.from_vector(kernel.ambient, v) for v in kernel.vectors[:3]]
        residual = 0
        for alpha in sections:
            for beta in sections:
                residual += sum(
                    _terms(r) for r in cup.twistor_extension_residuals(alpha, beta)
                )
        return residual, f"{len(sections)} parallel sections"

    def _algebra_context(self):
        def build():
            A = end_representation(self.representation)
            return composition_pairing(A, A), self.context_of(A)

        return self._cached("End(W)", build)

    def check_associator(self):
        pairing, context = self._algebra_context()
        contexts = {key: context for key in ("1", "2", "3", "12", "23", "4")}
        triple = TripleProduct(triple_from_pairing(pairing), contexts)
        rng = self.rng()
        residual, counted = 0, []
        for k, l, m in ((0, 0, 0), (0, 1, 0), (1, 0, 1)):
            if k + l + m > self.n:
                continue
            for _ in range(config.n_random_samples):
                sections = [
                    context.random_homology_section(degree, rng) for degree in (k, l, m)
                ]
                found = triple.associator_residual(
                    sections[0], k, sections[1], l, sections[2], m
                )
                residual += _terms(found)
            counted.append((k, l, m))
        return residual, f"End(W) with composition, degrees {counted}"

    # ---- ainf ---- #

    def check_term_counts(self):
        counts = {}
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            for m in (2, 3, 4):
                counts[m] = lambda_term_count(m)
        stated = {m: catalan_number(m) for m in counts}
        residual = sum(counts[m] != catalan_number(m - 1) for m in counts)
        return residual, f"term counts {counts}; the count C(2m,m)/(m+1) gives {stated}"

    def check_a_infinity(self):
        pairing, context = self._algebra_context()
        rng = self.rng()
        samples = []
        for degrees in ((0, 0), (0, 1), (0, 0, 0), (0, 1, 0)):
            if sum(degrees) - len(degrees) + 3 > self.n:
                continue
            for _ in range(config.n_random_samples):
                sections = [context.random_homology_section(k, rng) for k in degrees]
                samples.append((sections, degrees))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            shift, passed = select_sign_convention(pairing, context, samples)
        maps = AInfinityMaps(pairing, context, shift=shift)
        residual = 0
        for degree in range(self.n - 1):
            for _ in range(config.n_random_samples):
                section = context.random_homology_section(degree, rng)
                residual += _terms(maps.relation_residual([section], [degree]))
        if not passed:
            residual += 1
        return residual, f"grading shift {shift}, arities 1, 2 and 3"

    # ---- dual ---- #

    def _dual_contexts(self):
        def build():
            W = self.representation
            trivial_rep = self.trivial.representation
            dual = DualBGGContext(self.context)
            dual_trivial = DualBGGContext(self.trivial)
            pairing = unit_pairing(W, trivial_rep)
            cap = CapProduct(pairing, self.context, dual_trivial, dual)
            return dual, dual_trivial, cap

        return self._cached("dual", build)

    def check_pi_hat(self):
        dual, _, _ = self._dual_contexts()
        failing = [k for k in range(self.n + 1) if not dual.pi_is_adjoint(k)]
        return len(failing), _report_violations([f"k={k}" for k in failing])

    def check_divergence(self):
        dual, dual_trivial, cap = self._dual_contexts()
        rng = self.rng()
        residual = 0
        for k in range(self.n):
            for _ in range(config.n_random_samples):
                alpha = self.context.random_homology_section(k, rng)
                b = dual.random_homology_section(k + 1, rng)
                found = divergence_adjointness_residual(cap, dual_trivial, alpha, k, b)
                residual += len(found)
        return residual, f"{config.n_random_samples} samples per k < {self.n}"

    def check_cap_pairing(self):
        dual, _, cap = self._dual_contexts()
        rng = self.rng()
        residual = 0
        for _ in range(config.n_random_samples):
            alpha = self.context.random_homology_section(0, rng)
            b = dual.random_homology_section(0, rng)
            residual += len(cap_pairing_residual(cap, alpha, b))
        return residual, ""

    # ---- deform ---- #

    def check_deformation(self):
        if self.n < 2:
            return None, "no quadratic obstruction for dim m < 2"
        adjoint = build_representation("adjoint", self.grading.algebra, self.grading)
        context = self.context_of(adjoint)
        rng = self.rng()
        residual, exact = 0, []
        for _ in range(config.n_random_samples):
            gauge = context.random_homology_section(0, rng)
            report = deformation_obstruction(context, gauge=gauge)
            if report.obstruction_closed is False or not report.closed:
                residual += 1
            exact.append(report.exact)
        return residual, f"obstruction exact for {sum(exact)} of {len(exact)} gauges"


def verify_suite(scope, algebra, grading, expression, max_degree=None, seed=None):
    """Run the checks of a scope on one instance and return the VerificationReport"""
    suite = VerificationSuite(algebra, grading, expression, max_degree, seed)
    return suite.run(scope)
