"""Exact equivariant ball packings of symplectic-toric manifolds via their Delzant polytopes."""

from .delzant import (
    ClassificationResult,
    DelzantReport,
    ProductCP1xCP1,
    ProjectiveSpace,
    agl_equivalent,
    ball_momentum_image,
    blow_up,
    check_delzant,
    classify,
    is_integral_simplex,
    symplectic_volume,
    vertex_frame,
)
from .lattice import hnf, is_unimodular_frame, lattice_length, primitive
from .packing import (
    CoherentFamily,
    OmegaConfig,
    OpenSimplex,
    PackingReport,
    check_two_simplex_gluing,
    decide_perfect_packing,
    family_density,
    max_radius,
    omega,
    open_disjoint,
    validate_family,
)
from .polytope import HalfSpace, Polytope, contains, faces, from_halfspaces, from_vertices, intersect, volume

__version__ = "0.1.0"
