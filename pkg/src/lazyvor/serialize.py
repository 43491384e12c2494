"""JSON encoding with every scalar in exact ``"p/q"`` text form."""
import json
from fractions import Fraction

from .cones import FgCone
from .kernel.polyhedra import HalfSpace, HRep, VRep, Witness


def jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, HalfSpace):
        return {"normal": jsonable(obj.normal), "offset": jsonable(obj.offset)}
    if isinstance(obj, HRep):
        return [jsonable(h) for h in obj.halfspaces]
    if isinstance(obj, VRep):
        return {"vertices": jsonable(obj.vertices), "rays": jsonable(obj.rays),
                "lines": jsonable(obj.lines)}
    if isinstance(obj, FgCone):
        return jsonable(obj.generators)
    if isinstance(obj, Witness):
        out = {"indices": list(obj.indices), "points": jsonable(obj.points)}
        if obj.coefficients is not None:
            out["coefficients"] = jsonable(obj.coefficients)
        return out
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj):
    return json.dumps(jsonable(obj), indent=2) + "\n"
