"""Exact rational polyhedral kernel."""
from .linalg import Vector, dist_sq, dot, format_scalar, norm_sq, scalar, vector
from .lp import LPResult, linprog
from .polyhedra import (
    HalfSpace,
    HRep,
    IncrementalPolyhedron,
    VRep,
    Witness,
    convex_hull,
    dual_description,
    feasible_interior,
    implies,
    interior_contains,
    is_bounded,
    is_empty,
    is_subset,
    lineality_space,
    polar_polytope,
    recession_cone,
    remove_redundant,
    same_set,
)
from .witnesses import caratheodory_witness, steinitz_witness

__all__ = [
    "Vector", "dist_sq", "dot", "format_scalar", "norm_sq", "scalar", "vector",
    "LPResult", "linprog",
    "HalfSpace", "HRep", "IncrementalPolyhedron", "VRep", "Witness",
    "convex_hull", "dual_description", "feasible_interior", "implies",
    "interior_contains", "is_bounded", "is_empty", "is_subset",
    "lineality_space", "polar_polytope", "recession_cone", "remove_redundant",
    "same_set", "caratheodory_witness", "steinitz_witness",
]
