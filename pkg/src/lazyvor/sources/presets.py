"""Built-in point sets."""
import json

from ..errors import SpecError
from .source import source_from_json

# The vertical integer line plus a = (1, 0).  The direction cone at a is the
# open half-plane x1 < 0 together with 0, so it is not closed.
P1 = {
    "dimension": 2,
    "parts": [
        {"kind": "family", "index": "z", "range": "integers",
         "coords": ["0", "z"], "growth": {"c": "1", "d": "0"}},
        {"kind": "finite", "points": [["1", "0"]]},
    ],
    "hints": [
        {"at": ["1", "0"], "kind": "not_closed",
         "limit_direction": ["0", "1"], "witness_part": 0},
        {"at": ["0", "0"], "kind": "finitely_generated",
         "witness_points": [["0", "1"], ["0", "-1"], ["1", "0"]]},
    ],
}

# Two point-symmetric branches (n, 1 - 1/n) and (-n, -1 + 1/n), n >= 1,
# reindexed from 0 so that the family is total on "nonneg".
P2 = {
    "dimension": 2,
    "parts": [
        {"kind": "family", "index": "n", "range": "nonneg",
         "coords": ["n + 1", "1 - 1 / (n + 1)"], "growth": {"c": "1", "d": "0"}},
        {"kind": "family", "index": "n", "range": "nonneg",
         "coords": ["-(n + 1)", "-1 + 1 / (n + 1)"], "growth": {"c": "1", "d": "0"}},
    ],
}

LATTICE_Z2 = {
    "dimension": 2,
    "parts": [
        {"kind": "lattice", "basis": [["1", "0"], ["0", "1"]], "origin": ["0", "0"]},
    ],
}

PRESETS = {"p1": P1, "p2": P2, "lattice-z2": LATTICE_Z2}


def preset_names():
    return sorted(PRESETS)


def preset_document(name):
    try:
        return PRESETS[name.lower()]
    except KeyError:
        raise SpecError(f"unknown preset {name!r} (choose from {', '.join(preset_names())})") from None


def preset_text(name):
    return json.dumps(preset_document(name), indent=2) + "\n"


def load_preset(name):
    return source_from_json(preset_document(name))
