"""Discrete point sets given as ball-query oracles."""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil, floor, isqrt

from ..errors import GeometryError, GrowthBoundError, SpecError
from ..kernel import linalg as la
from .expr import evaluate, parse_expr, to_text

# Growth bounds are spot-checked on |k| <= this at load time.
GROWTH_CHECK_RANGE = 1000


def ceil_sqrt(x):
    """Smallest integer r with r*r >= x, for a nonnegative rational x."""
    n = ceil(Fraction(x))
    r = isqrt(n)
    return r if r * r >= n else r + 1


@dataclass(frozen=True)
class FinitePart:
    points: tuple

    def in_ball(self, center, radius_sq):
        return [p for p in self.points if la.dist_sq(p, center) <= radius_sq]

    def to_json(self):
        return {"kind": "finite", "points": [[la.format_scalar(x) for x in p] for p in self.points]}


@dataclass(frozen=True)
class FamilyPart:
    """Points ``point(k)`` for integer k in the declared range.

    The growth bound promises ``max|point(k)_i| >= c*|k| - d``, which turns
    every ball query into a finite index scan.
    """

    index: str
    range: str  # "integers" or "nonneg"
    coords: tuple
    c: Fraction
    d: Fraction
    # evaluated points by index; growth is checked once per index
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def point(self, k):
        p = self._cache.get(k)
        if p is None:
            p = tuple(evaluate(e, k) for e in self.coords)
            self.check_growth(k, p)
            self._cache[k] = p
        return p

    def indices(self, bound):
        lo = 0 if self.range == "nonneg" else -bound
        return range(lo, bound + 1)

    def check_growth(self, k, p):
        if la.max_norm(p) < self.c * abs(k) - self.d:
            raise GrowthBoundError(
                f"family point at {self.index}={k} violates the declared growth bound")

    def in_ball(self, center, radius_sq):
        r = ceil_sqrt(radius_sq)
        bound = floor((r + la.max_norm(center) + self.d) / self.c)
        if bound < 0:
            return []
        out = []
        for k in self.indices(bound):
            p = self.point(k)
            if la.dist_sq(p, center) <= radius_sq:
                out.append(p)
        return out

    def to_json(self):
        return {"kind": "family", "index": self.index, "range": self.range,
                "coords": [to_text(e) for e in self.coords],
                "growth": {"c": la.format_scalar(self.c), "d": la.format_scalar(self.d)}}


@dataclass(frozen=True)
class LatticePart:
    """``origin + sum k_i b_i`` over integer vectors k, for independent rows b_i."""

    basis: tuple
    origin: tuple

    def in_ball(self, center, radius_sq):
        # coefficients k = G^-1 B (x - origin) with G = B B^T
        B = [list(b) for b in self.basis]
        m = len(B)
        G = [[la.dot(B[i], B[j]) for j in range(m)] for i in range(m)]
        Ginv = _invert(G)
        L = [[sum(Ginv[i][t] * B[t][j] for t in range(m)) for j in range(len(self.origin))]
             for i in range(m)]
        reach = ceil_sqrt(radius_sq) + la.max_norm(la.sub(center, self.origin))
        bounds = [floor(sum(abs(v) for v in row) * reach) for row in L]
        out = []
        for ks in product(*(range(-b, b + 1) for b in bounds)):
            p = self.origin
            for k, b in zip(ks, self.basis):
                if k:
                    p = la.add(p, la.scale(Fraction(k), b))
            if la.dist_sq(p, center) <= radius_sq:
                out.append(p)
        return out

    def to_json(self):
        return {"kind": "lattice",
                "basis": [[la.format_scalar(x) for x in b] for b in self.basis],
                "origin": [la.format_scalar(x) for x in self.origin]}


def _invert(M):
    n = len(M)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    reduced, pivots = la.rref(aug, 2 * n)
    return [row[n:] for row in reduced]


@dataclass(frozen=True)
class ConeHint:
    """Declared knowledge about the direction cone at one member point.

    ``finitely_generated``: the cone is generated by ``witness - at``.
    ``not_closed``: the cone is not closed; `limit_direction` lies in its
    closure but not in the cone, approached by points of `witness_part`.
    """

    kind: str
    at: tuple
    witness_points: tuple = ()
    limit_direction: tuple = None
    witness_part: int = None

    def to_json(self):
        fmt = lambda v: [la.format_scalar(x) for x in v]  # noqa: E731
        out = {"at": fmt(self.at), "kind": self.kind}
        if self.kind == "finitely_generated":
            out["witness_points"] = [fmt(p) for p in self.witness_points]
        else:
            out["limit_direction"] = fmt(self.limit_direction)
            out["witness_part"] = self.witness_part
        return out


@dataclass(frozen=True)
class PointSource:
    dim: int
    parts: tuple
    hints: tuple = field(default=())

    def points_in_ball(self, center, radius_sq):
        """Members within the closed ball, sorted and duplicate-free."""
        return points_in_ball(self, center, radius_sq)

    def contains(self, x):
        return contains_point(self, x)

    def hint_at(self, p):
        p = la.vector(p)
        return next((h for h in self.hints if h.at == p), None)

    @property
    def is_finite(self):
        return all(isinstance(part, FinitePart) for part in self.parts)

    def all_points(self):
        if not self.is_finite:
            raise GeometryError("source is infinite")
        return sorted({p for part in self.parts for p in part.points})

    def to_json(self):
        doc = {"dimension": self.dim, "parts": [p.to_json() for p in self.parts]}
        if self.hints:
            doc["hints"] = [h.to_json() for h in self.hints]
        return doc

    @classmethod
    def finite(cls, points, hints=()):
        pts = [la.vector(p) for p in points]
        if not pts:
            raise GeometryError("a finite source needs at least one point")
        return cls(len(pts[0]), (FinitePart(tuple(sorted(set(pts)))),), tuple(hints))


def points_in_ball(src, center, radius_sq):
    center = la.vector(center)
    radius_sq = la.scalar(radius_sq)
    if radius_sq < 0:
        raise GeometryError("radius_sq must be nonnegative")
    if len(center) != src.dim:
        raise GeometryError("center dimension mismatch")
    found = set()
    for part in src.parts:
        found.update(part.in_ball(center, radius_sq))
    return sorted(found)


def contains_point(src, x):
    x = la.vector(x)
    return bool(points_in_ball(src, x, 0))


# ---------------------------------------------------------------------------
# spec documents


def _scalar(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SpecError(f"{where}: expected a rational string like \"p/q\", got {value!r}")
    try:
        return la.scalar(value)
    except (ValueError, ZeroDivisionError):
        raise SpecError(f"{where}: not a rational number: {value!r}") from None


def _point(value, dim, where):
    if not isinstance(value, list):
        raise SpecError(f"{where}: expected a list of {dim} scalars")
    if len(value) != dim:
        raise SpecError(f"{where}: dimension mismatch (expected {dim}, got {len(value)})")
    return tuple(_scalar(v, where) for v in value)


def _parse_family(obj, dim, where):
    index = obj.get("index", "n")
    if not isinstance(index, str) or not index.isidentifier():
        raise SpecError(f"{where}: bad index variable {index!r}")
    rng = obj.get("range")
    if rng not in ("integers", "nonneg"):
        raise SpecError(f"{where}: range must be \"integers\" or \"nonneg\"")
    coords = obj.get("coords")
    if not isinstance(coords, list) or len(coords) != dim:
        raise SpecError(f"{where}: coords must list {dim} expressions (dimension mismatch)")
    exprs = []
    for i, text in enumerate(coords):
        if not isinstance(text, str):
            raise SpecError(f"{where}.coords[{i}]: expected an expression string")
        try:
            exprs.append(parse_expr(text, index))
        except SpecError as err:
            raise SpecError(f"{where}.coords[{i}]: {err}", err.line, err.column) from None
    growth = obj.get("growth")
    if not isinstance(growth, dict):
        raise SpecError(f"{where}: missing growth bound {{\"c\", \"d\"}}")
    c = _scalar(growth.get("c"), f"{where}.growth.c")
    d = _scalar(growth.get("d", "0"), f"{where}.growth.d")
    if c <= 0:
        raise SpecError(f"{where}: growth bound c must be positive")
    if d < 0:
        raise SpecError(f"{where}: growth bound d must be nonnegative")
    part = FamilyPart(index, rng, tuple(exprs), c, d)
    for k in part.indices(GROWTH_CHECK_RANGE):
        try:
            part.point(k)
        except ZeroDivisionError:
            raise SpecError(f"{where}: division by zero at {index}={k}") from None
        except GrowthBoundError as err:
            raise GrowthBoundError(f"{where}: {err}") from None
    return part


def _parse_lattice(obj, dim, where):
    basis = obj.get("basis")
    if not isinstance(basis, list) or not basis:
        raise SpecError(f"{where}: lattice needs a nonempty basis")
    rows = [_point(b, dim, f"{where}.basis[{i}]") for i, b in enumerate(basis)]
    if la.rank(rows, dim) != len(rows):
        raise SpecError(f"{where}: lattice basis is linearly dependent")
    origin = _point(obj.get("origin", ["0"] * dim), dim, f"{where}.origin")
    return LatticePart(tuple(rows), origin)


def _parse_hint(obj, src, where):
    if not isinstance(obj, dict):
        raise SpecError(f"{where}: expected an object")
    at = _point(obj.get("at"), src.dim, f"{where}.at")
    if not contains_point(src, at):
        raise SpecError(f"{where}: hint point {list(map(str, at))} is not a member")
    kind = obj.get("kind")
    if kind == "finitely_generated":
        raw = obj.get("witness_points")
        if not isinstance(raw, list):
            raise SpecError(f"{where}: witness_points must be a list")
        pts = tuple(_point(p, src.dim, f"{where}.witness_points[{i}]") for i, p in enumerate(raw))
        for p in pts:
            if p == at:
                raise SpecError(f"{where}: witness point equals the hinted point")
            if not contains_point(src, p):
                raise SpecError(f"{where}: witness point {list(map(str, p))} is not a member")
        return ConeHint(kind, at, witness_points=pts)
    if kind == "not_closed":
        d = _point(obj.get("limit_direction"), src.dim, f"{where}.limit_direction")
        if la.is_zero(d):
            raise SpecError(f"{where}: limit_direction must be nonzero")
        part = obj.get("witness_part")
        if (isinstance(part, bool) or not isinstance(part, int)
                or not 0 <= part < len(src.parts)
                or not isinstance(src.parts[part], FamilyPart)):
            raise SpecError(f"{where}: witness_part must index a family part")
        return ConeHint(kind, at, limit_direction=d, witness_part=part)
    raise SpecError(f"{where}: unknown hint kind {kind!r}")


def source_from_json(doc):
    """Validate an already-decoded spec document."""
    if not isinstance(doc, dict):
        raise SpecError("source spec must be a JSON object")
    dim = doc.get("dimension")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise SpecError("dimension must be a positive integer")
    raw_parts = doc.get("parts")
    if not isinstance(raw_parts, list) or not raw_parts:
        raise SpecError("parts must be a nonempty list")
    parts = []
    for i, obj in enumerate(raw_parts):
        where = f"parts[{i}]"
        if not isinstance(obj, dict):
            raise SpecError(f"{where}: expected an object")
        kind = obj.get("kind")
        if kind == "finite":
            pts = obj.get("points")
            if not isinstance(pts, list):
                raise SpecError(f"{where}: points must be a list")
            parsed = {_point(p, dim, f"{where}.points[{j}]") for j, p in enumerate(pts)}
            parts.append(FinitePart(tuple(sorted(parsed))))
        elif kind == "family":
            parts.append(_parse_family(obj, dim, where))
        elif kind == "lattice":
            parts.append(_parse_lattice(obj, dim, where))
        else:
            raise SpecError(f"{where}: unknown part kind {kind!r}")
    src = PointSource(dim, tuple(parts))
    raw_hints = doc.get("hints", [])
    if not isinstance(raw_hints, list):
        raise SpecError("hints must be a list")
    hints = tuple(_parse_hint(h, src, f"hints[{i}]") for i, h in enumerate(raw_hints))
    if len({h.at for h in hints}) != len(hints):
        raise SpecError("at most one hint per point")
    return PointSource(dim, tuple(parts), hints)


def parse_source_spec(text):
    """Parse and validate a JSON source spec (see the README for the schema)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SpecError(f"invalid JSON: {err.msg}", err.lineno, err.colno) from None
    return source_from_json(doc)


def dump_source_spec(src):
    return json.dumps(src.to_json(), indent=2) + "\n"
