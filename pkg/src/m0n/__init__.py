"""Exact combinatorics of the moduli space of stable n-pointed rational curves.

Boundary divisor names, Kapranov models and vital subspaces, standard
Cremona transport, forgetful-map projections and fibers, the Losev-Manin
fan with its classification of toric maps to the line, and desk-scale
verification that relabelling markings accounts for every symmetry.
Everything is exact integer and set arithmetic; no coordinates, no
floating point.
"""

from .boundaries import (
    BoundaryIndex,
    boundary_count,
    canonical_boundary,
    complement,
    enumerate_boundaries,
    full_marking_set,
)
from .cremona import (
    ConeShape,
    CremonaCertificate,
    LinearShape,
    LinearSystemDescriptor,
    PhiType,
    QuadricPencilDescriptor,
    classify_phi_type,
    cremona_vital,
    cremona_vital_closed_form,
    cremona_vital_via_boundary,
    linear_system,
    phi1_normal_form,
    phi1_transform,
    transform_degree,
)
from .errors import (
    ArityError,
    InconsistencyError,
    LabelError,
    M0nError,
    ShapeViolationError,
    SizeError,
)
from .forgetful import (
    ConeFiber,
    FiberDescriptor,
    ForgetfulMap,
    LinearFiber,
    compose_forgetful,
    factor_through,
    fiber_descriptor,
    forgetful_map,
    projection_system,
    section_divisor,
)
from .kapranov import (
    KapranovModel,
    VitalSpace,
    boundary_image,
    restrict_model,
    vital_span,
    vital_to_boundary,
)
from .aut import (
    BoundaryGraph,
    RigiditySolution,
    TranspositionAction,
    boundary_graph,
    graph_automorphism_order,
    kernel_rigidity,
    permutation_action,
    permute_boundary,
    permute_vital,
    petersen_isomorphic,
    transposition,
    transposition_model_map,
)
from .graphsearch import automorphism_group_order
from .toric import (
    Fan,
    FanFunctional,
    barycentric_subdivision,
    cone_condition,
    cone_halfline_functionals,
    fan_to_dot,
    fan_to_text,
    functional_to_forgetful,
    losev_manin_fan,
    nested_sum_condition,
    projective_fan,
)

__version__ = "1.0.0"

__all__ = [
    "ArityError",
    "BoundaryGraph",
    "BoundaryIndex",
    "ConeFiber",
    "ConeShape",
    "CremonaCertificate",
    "Fan",
    "FanFunctional",
    "FiberDescriptor",
    "ForgetfulMap",
    "InconsistencyError",
    "KapranovModel",
    "LabelError",
    "LinearFiber",
    "LinearShape",
    "LinearSystemDescriptor",
    "M0nError",
    "PhiType",
    "QuadricPencilDescriptor",
    "RigiditySolution",
    "ShapeViolationError",
    "SizeError",
    "TranspositionAction",
    "VitalSpace",
    "automorphism_group_order",
    "barycentric_subdivision",
    "boundary_count",
    "boundary_graph",
    "boundary_image",
    "canonical_boundary",
    "classify_phi_type",
    "complement",
    "compose_forgetful",
    "cone_condition",
    "cone_halfline_functionals",
    "cremona_vital",
    "cremona_vital_closed_form",
    "cremona_vital_via_boundary",
    "enumerate_boundaries",
    "factor_through",
    "fan_to_dot",
    "fan_to_text",
    "fiber_descriptor",
    "forgetful_map",
    "full_marking_set",
    "functional_to_forgetful",
    "graph_automorphism_order",
    "kernel_rigidity",
    "linear_system",
    "losev_manin_fan",
    "nested_sum_condition",
    "permutation_action",
    "permute_boundary",
    "permute_vital",
    "petersen_isomorphic",
    "phi1_normal_form",
    "phi1_transform",
    "projection_system",
    "projective_fan",
    "restrict_model",
    "section_divisor",
    "transform_degree",
    "transposition",
    "transposition_model_map",
    "vital_span",
    "vital_to_boundary",
]
