"""The quadratic obstruction to deforming a flat Cartan connection

A first-order deformation is an H_1(g)-section A with D_1 A = 0, where g is the
adjoint module. The second-order obstruction is A cup A for the bracket pairing
g (x) g -> g. It is D_2-closed, and the deformation extends to second order iff it
lies in the image of D_1. Pure gauge deformations A = D_0 f are always closed.
"""

from ..exceptions import ContractError, DeformationError
from .pairings import bracket_pairing
from .products import CupProduct, solve_preimage


class DeformationReport:
    """The outcome of deformation_obstruction

    Attributes:
        deformation (Section): The H_1-section A
        gauge (Section): f with A = D_0 f, or None
        obstruction (Section): A cup A, an H_2-section
        closed (bool): Whether D_1 A = 0
        obstruction_closed (bool): Whether D_2(A cup A) = 0, None when 3 > dim m
        exact (bool): Whether A cup A lies in the image of D_1
        preimage (Section): B with D_1 B = A cup A, or None
    """

    def __init__(
        self,
        deformation,
        obstruction,
        obstruction_closed,
        preimage,
        gauge=None,
        closed=True,
    ):
        self.deformation = deformation
        self.closed = closed
        self.gauge = gauge
        self.obstruction = obstruction
        self.obstruction_closed = obstruction_closed
        self.preimage = preimage

    def __repr__(self):
        return (
            f"{self.__class__.__name__}(obstruction_zero={self.obstruction.is_zero}, "
            f"closed={self.closed}, obstruction_closed={self.obstruction_closed}, "
            f"exact={self.exact})"
        )

    @property
    def exact(self):
        return self.preimage is not None

    def to_dict(self):
        return {
            "deformation_terms": self.deformation.n_terms,
            "pure_gauge": self.gauge is not None,
            "closed": self.closed,
            "obstruction_zero": self.obstruction.is_zero,
            "obstruction_terms": self.obstruction.n_terms,
            "obstruction_closed": self.obstruction_closed,
            "exact": self.exact,
        }


def deformation_obstruction(context, deformation=None, gauge=None, strict=True):
    """Compute the obstruction A cup A of a first-order deformation

    Args:
        context (BGGContext): The context of the adjoint module
        deformation (Section): A, an H_1-section. Give this or gauge.
        gauge (Section): f, an H_0-section, for the pure gauge A = D_0 f
        strict (bool): Whether to raise when D_1 A != 0. If False, the report
            records closed=False and the obstruction is computed anyway.

    Returns:
        DeformationReport

    Raises:
        DeformationError: if strict and D_1 A != 0, with the residual
        ContractError: if neither or both of deformation and gauge are given
    """
    if (deformation is None) == (gauge is None):
        raise ContractError("give exactly one of a deformation and a gauge section")
    pairing = bracket_pairing(context.representation, context.representation)
    if gauge is not None:
        deformation = context.bgg_operator(0).apply(gauge)
    if context.n < 2:
        raise ContractError(f"no quadratic obstruction lives on {context.name}")
    residual = context.bgg_operator(1).apply(deformation)
    if strict and not residual.is_zero:
        raise DeformationError(
            f"D_1 A != 0 for the deformation of {context.name}: the residual has "
            f"{residual.n_terms} terms",
            residual=residual,
        )
    cup = CupProduct(pairing, context, context, context)
    obstruction = cup(deformation, 1, deformation, 1)
    obstruction_closed = None
    if context.n >= 3:
        obstruction_closed = context.bgg_operator(2).apply(obstruction).is_zero
    preimage = solve_preimage(context, 1, obstruction)
    return DeformationReport(
        deformation,
        obstruction,
        obstruction_closed,
        preimage,
        gauge=gauge,
        closed=residual.is_zero,
    )
