"""Double equations, the quadric pencil and Fermat's ascent."""

from .ascent import AscentResult, CubicModel, fermat_ascend, omega_j, project_to_cubic
from .cubic import PlaneCubic
from .equations import (
    Certificate,
    DoubleEquation,
    OmegaPoint,
    PencilRelation,
    conic_pencil_cubic,
    involutions,
    pencil_coincidence,
    pencil_relation,
    primitive,
    quadric_pencil_poly,
    search_solutions,
)

__all__ = [
    "AscentResult",
    "Certificate",
    "CubicModel",
    "DoubleEquation",
    "OmegaPoint",
    "PencilRelation",
    "PlaneCubic",
    "conic_pencil_cubic",
    "fermat_ascend",
    "involutions",
    "omega_j",
    "pencil_coincidence",
    "pencil_relation",
    "primitive",
    "project_to_cubic",
    "quadric_pencil_poly",
    "search_solutions",
]
