"""The BGG machinery on the flat model: Neumann inversion, Q, Pi and D, products,
A-infinity maps, the dual sequence and the deformation obstruction"""

from .neumann import NeumannInverse
from .context import (
    BGGContext,
    bgg_context,
    first_order_quabla,
    neumann_invert,
    q_operator,
    pi_operator,
    bgg_transfer_maps,
    bgg_operator,
    twistor_kernel,
    kernel_stabilization,
)
from .pairings import (
    PairingData,
    TriplePairing,
    PAIRING_BUILDERS,
    build_pairing,
    triple_through_unit,
    triple_from_pairing,
)
from .products import (
    CupProduct,
    TripleProduct,
    cup_product,
    triple_product,
    solve_preimage,
    massey_representative,
)
from .a_infinity import AInfinityMaps, a_infinity_map, a_infinity_relation
from .duality import DualBGGContext, CapProduct, cap_product, dual_bgg_operator
from .duality import formal_adjoint
from .deformation import DeformationReport, deformation_obstruction
