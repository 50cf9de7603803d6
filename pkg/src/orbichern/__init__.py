"""Exact orbifold Chern numbers and degeneracy criteria for orbifold surfaces."""

from .chern import (
    NodalSurface,
    PlaneNodeCuspCurve,
    Stratum,
    cusp_order,
    gauss_bonnet,
    log_chern_from_ambient,
    nodal_surface_chern,
    node_order,
    normalization_genus,
    plane_nc_curve_chern,
    stack_c1_sq,
    stack_c2,
    stack_chern,
    surface_from_ambient,
)
from .core import (
    INFINITY,
    AmbientSurfaceData,
    ChernNumbers,
    CriterionVerdict,
    CurveComponent,
    IntersectionMatrix,
    Multiplicity,
    SmoothOrbifoldSurface,
    TheoremTag,
    parse_rational,
    reciprocal_mult,
    render_rational,
    validate_surface,
)
from .criteria import (
    NevanlinnaConfig,
    PlanePairConfig,
    bogomolov_stack,
    jet_h0_coefficient,
    nevanlinna_excess,
    nodal_surface_lhs,
    nodes_cusps_lhs,
    plane_pair_lhs,
    remark_form_lhs,
    sym_chi_leading,
    theorem_a_lhs,
)

__version__ = "0.1.0"
