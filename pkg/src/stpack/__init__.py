"""Exact equivariant packing densities for Delzant and semitoric polygons."""

from .errors import (
    DelzantError,
    FamilyDomainError,
    InfeasibleError,
    PackingError,
    ParseError,
    PolygonError,
    RepresentativeError,
    UnboundedError,
)
from .geometry import (
    IntMat2,
    Vec2,
    as_rational,
    det,
    gcd_length,
    primitive_direction,
    shear_power,
    sl2z_length,
    sl2z_normalizer,
    vec,
)
from .polygon import EdgeData, Polygon, area, check_delzant, edge_lengths, make_delzant_family, normalize
from .polytope import (
    Halfspace,
    HalfspaceSystem,
    PolytopeVertexSet,
    cyclic_system,
    enumerate_vertices,
    max_squared_norm,
)
from .semitoric import (
    CornerClassification,
    SemitoricEdge,
    SemitoricRepresentative,
    alpha_bounds,
    apply_global_T,
    apply_vertical_translation,
    flip_cut,
    flip_cuts,
    make_semitoric_family,
    semitoric_edges,
    validate_representative,
)
from .stpacking import (
    SemitoricPacking,
    SemitoricPackingProblem,
    build_semitoric_problem,
    is_perfect,
    realize_semitoric_packing,
    semitoric_capacity,
    semitoric_density,
)
from .toric import (
    Capacity,
    DensityResult,
    Packing,
    ToricPackingProblem,
    alternating_edge_density,
    build_toric_problem,
    realize_packing,
    toric_capacity,
    toric_density,
)

__version__ = "0.1.0"
