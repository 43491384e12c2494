"""Exact Voronoi cells of finite and infinite discrete point sets."""
from .cones import FgCone, cone_contains, cone_equal, cone_is_fullspace, polar_cone
from .engine import (
    CellResult,
    Classification,
    bisector_halfspace,
    box_hrep,
    classify_point,
    cone_stabilized,
    direction_cone_scan,
    relevant_points,
    voronoi_cell,
    voronoi_cell_boundary,
    voronoi_cell_inner,
    voronoi_cell_truncated,
)
from .errors import (
    CandidateLimitError,
    DomainError,
    GeometryError,
    GrowthBoundError,
    HintError,
    LazyvorError,
    NotAMemberError,
    RenderError,
    SpecError,
)
from .render import RenderScene, render_svg
from .sources import PointSource, load_preset, parse_source_spec

__version__ = "0.1.0"

__all__ = [
    "FgCone", "cone_contains", "cone_equal", "cone_is_fullspace", "polar_cone",
    "CellResult", "Classification", "bisector_halfspace", "box_hrep", "classify_point",
    "cone_stabilized", "direction_cone_scan", "relevant_points", "voronoi_cell",
    "voronoi_cell_boundary", "voronoi_cell_inner", "voronoi_cell_truncated",
    "CandidateLimitError", "DomainError", "GeometryError", "GrowthBoundError", "HintError",
    "LazyvorError", "NotAMemberError", "RenderError", "SpecError",
    "RenderScene", "render_svg", "PointSource", "load_preset", "parse_source_spec",
]
