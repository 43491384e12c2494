"""Point sets as ball-query oracles, their JSON specs and built-in presets."""
from .expr import BinOp, Neg, Num, Var, evaluate, parse_expr, to_text
from .presets import load_preset, preset_names, preset_text
from .source import (
    ConeHint,
    FamilyPart,
    FinitePart,
    LatticePart,
    PointSource,
    contains_point,
    dump_source_spec,
    parse_source_spec,
    points_in_ball,
    source_from_json,
)

__all__ = [
    "BinOp", "Neg", "Num", "Var", "evaluate", "parse_expr", "to_text",
    "load_preset", "preset_names", "preset_text",
    "ConeHint", "FamilyPart", "FinitePart", "LatticePart", "PointSource",
    "contains_point", "dump_source_spec", "parse_source_spec", "points_in_ball",
    "source_from_json",
]
