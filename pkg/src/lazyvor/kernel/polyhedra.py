"""Polyhedra in inequality (H) and generator (V) form, with exact conversions."""
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import GeometryError
from . import linalg as la
from .dd import HomogeneousCone
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, linprog


@dataclass(frozen=True, eq=False)
class HalfSpace:
    """The closed half-space ``{x : <normal, x> <= offset}``.

    Equality and hashing are up to positive rescaling of (normal, offset).
    """

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", la.vector(self.normal))
        object.__setattr__(self, "offset", la.scalar(self.offset))
        if la.is_zero(self.normal):
            raise GeometryError("half-space normal must be nonzero")

    @property
    def dim(self):
        return len(self.normal)

    def canonical(self):
        """Representative whose normal is a primitive integer vector."""
        ints = la.integer_direction(self.normal)
        # ints = k * normal for one positive rational k
        i = next(i for i, v in enumerate(ints) if v)
        k = Fraction(ints[i]) / self.normal[i]
        return ints, k * self.offset

    def __eq__(self, other):
        if not isinstance(other, HalfSpace):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def value(self, x):
        return la.dot(self.normal, x)

    def contains(self, x):
        return la.dot(self.normal, x) <= self.offset

    def strictly_contains(self, x):
        return la.dot(self.normal, x) < self.offset

    def homogenized(self):
        return HalfSpace(self.normal, 0)

    def translated(self, t):
        return HalfSpace(self.normal, self.offset + la.dot(self.normal, t))

    def __repr__(self):
        coeffs = ", ".join(map(str, self.normal))
        return f"HalfSpace(({coeffs}) . x <= {self.offset})"


@dataclass(frozen=True)
class HRep:
    """Intersection of half-spaces; no half-spaces at all means all of E^n."""

    dim: int
    halfspaces: tuple = ()

    def __post_init__(self):
        hs = tuple(self.halfspaces)
        object.__setattr__(self, "halfspaces", hs)
        if self.dim < 1:
            raise GeometryError("dimension must be positive")
        for h in hs:
            if h.dim != self.dim:
                raise GeometryError("half-space dimension mismatch")

    def __len__(self):
        return len(self.halfspaces)

    def __iter__(self):
        return iter(self.halfspaces)

    def contains(self, x):
        return all(h.contains(x) for h in self.halfspaces)

    def strictly_contains(self, x):
        return all(h.strictly_contains(x) for h in self.halfspaces)

    def matrix(self):
        return [h.normal for h in self.halfspaces], [h.offset for h in self.halfspaces]

    def __and__(self, other):
        return HRep(self.dim, self.halfspaces + tuple(other.halfspaces))

    def translated(self, t):
        return HRep(self.dim, tuple(h.translated(t) for h in self.halfspaces))


@dataclass(frozen=True)
class VRep:
    """``conv(vertices) + cone(rays) + span(lines)``; no vertices means empty."""

    dim: int
    vertices: tuple = ()
    rays: tuple = ()
    lines: tuple = ()

    def __post_init__(self):
        for name in ("vertices", "rays", "lines"):
            object.__setattr__(self, name, tuple(la.vector(v) for v in getattr(self, name)))
        if any(la.is_zero(r) for r in self.rays + self.lines):
            raise GeometryError("rays and lines must be nonzero")

    @property
    def is_empty(self):
        return not self.vertices

    @property
    def is_bounded(self):
        return not self.rays and not self.lines


@dataclass(frozen=True)
class Witness:
    """Points selected from a list, with convex coefficients when applicable."""

    indices: tuple
    coefficients: tuple = None
    points: tuple = field(default=(), compare=False)


# ---------------------------------------------------------------------------
# representation conversion


class IncrementalPolyhedron:
    """Polyhedron built one half-space at a time, in generator form.

    `add` reports whether the new half-space cut the current set, which is
    what makes it useful as a cheap redundancy pre-filter.
    """

    def __init__(self, dim):
        self.dim = dim
        self._cone = HomogeneousCone(dim + 1)
        self._cone.add((0,) * dim + (-1,))

    def add(self, h):
        coeffs = la.integer_direction(tuple(h.normal) + (-h.offset,))
        return self._cone.add(coeffs)

    def vrep(self):
        n = self.dim
        vertices, rays = [], []
        for r, _ in self._cone.rays:
            t = r[n]
            if t > 0:
                vertices.append(tuple(Fraction(x, t) for x in r[:n]))
            else:
                rays.append(tuple(Fraction(x) for x in r[:n]))
        if not vertices:
            return VRep(n)
        lines = [tuple(Fraction(x) for x in _oriented(l[:n])) for l in self._cone.lines]
        return VRep(n, tuple(sorted(set(vertices))), tuple(sorted(set(rays))),
                    tuple(sorted(lines)))

    def facets(self, halfspaces):
        """The members of `halfspaces` that define distinct facets, or None.

        Every half-space must be valid for the current set.  When the set is
        full-dimensional, a valid inequality is a facet exactly when the
        generators on its boundary span a hyperplane of the homogenised
        space, so no LP is needed.  Returns None for lower-dimensional sets.
        """
        n = self.dim
        gens = [r for r, _ in self._cone.rays]
        lines = list(self._cone.lines)
        if la.rank(gens + lines, n + 1) != n + 1:
            return None
        out, seen = [], set()
        for h in halfspaces:
            if h in seen or la.is_zero(h.normal):
                continue
            seen.add(h)
            a = la.integer_direction(tuple(h.normal) + (-h.offset,))
            tight = [r for r in gens if sum(x * y for x, y in zip(a, r)) == 0]
            if len(tight) + len(lines) >= n and la.rank(tight + lines, n + 1) == n:
                out.append(h)
        return out


def _oriented(v):
    first = next(x for x in v if x)
    return v if first > 0 else tuple(-x for x in v)


def h_to_v(rep):
    poly = IncrementalPolyhedron(rep.dim)
    for h in rep.halfspaces:
        poly.add(h)
    return poly.vrep()


def _empty_hrep(n):
    e = la.unit(n, 0)
    return HRep(n, (HalfSpace(e, 0), HalfSpace(la.neg(e), -1)))


def v_to_h(rep):
    """Valid inequalities generated by the cone of all valid inequalities."""
    n = rep.dim
    if rep.is_empty:
        return _empty_hrep(n)
    cone = HomogeneousCone(n + 1)
    for v in rep.vertices:
        cone.add(la.integer_direction(tuple(v) + (Fraction(-1),)))
    for r in rep.rays:
        cone.add(la.integer_direction(tuple(r) + (Fraction(0),)))
    for l in rep.lines:
        cone.add(la.integer_direction(tuple(l) + (Fraction(0),)))
        cone.add(la.integer_direction(tuple(-x for x in l) + (Fraction(0),)))
    out = []
    for r, _ in cone.rays:
        if any(r[:n]):
            out.append(HalfSpace(r[:n], r[n]))
    for l in cone.lines:
        if any(l[:n]):
            h = HalfSpace(l[:n], l[n])
            out.append(h)
            out.append(HalfSpace(la.neg(h.normal), -h.offset))
    return HRep(n, tuple(out))


def dual_description(rep, direction=None):
    """Convert between H- and V-representation.

    `direction` is ``"to-V"`` or ``"to-H"``; by default the other form of
    `rep` is produced.  Conversion is exact (no perturbation); a line-free
    input yields exactly its extreme points and extreme rays.
    """
    if direction is None:
        direction = "to-V" if isinstance(rep, HRep) else "to-H"
    if direction == "to-V":
        if not isinstance(rep, HRep):
            raise TypeError("to-V expects an HRep")
        return h_to_v(rep)
    if direction == "to-H":
        if not isinstance(rep, VRep):
            raise TypeError("to-H expects a VRep")
        return v_to_h(rep)
    raise ValueError(f"unknown direction {direction!r}")


# ---------------------------------------------------------------------------
# LP-backed queries


def maximize(rep, c):
    """LP ``max <c, x>`` over `rep`; returns an `LPResult`."""
    A, b = rep.matrix()
    return linprog(c, A, b, free=True)


def is_empty(rep):
    if not rep.halfspaces:
        return False
    return maximize(rep, la.zeros(rep.dim)).status == INFEASIBLE


def implies(rep, h):
    """True when every point of `rep` satisfies `h` (vacuous if `rep` is empty)."""
    res = maximize(rep, h.normal)
    if res.status == INFEASIBLE:
        return True
    if res.status == UNBOUNDED:
        return False
    return res.value <= h.offset


def is_subset(a, b):
    """Set inclusion ``a ⊆ b`` for two HReps."""
    return all(implies(a, h) for h in b.halfspaces)


def same_set(a, b):
    return is_subset(a, b) and is_subset(b, a)


def remove_redundant(rep):
    """Drop half-spaces one at a time while the set stays the same.

    Each test is an exact LP: half-space ``i`` is redundant when maximising
    its normal over the remaining ones stays within its offset.  Duplicates
    (up to positive scaling) are dropped first.
    """
    seen = set()
    kept = []
    for h in rep.halfspaces:
        if h not in seen:
            seen.add(h)
            kept.append(h)
    i = 0
    while i < len(kept):
        others = HRep(rep.dim, kept[:i] + kept[i + 1:])
        if others.halfspaces and implies(others, kept[i]):
            del kept[i]
        else:
            i += 1
    return HRep(rep.dim, tuple(kept))


def feasible_interior(rep):
    """A point strictly satisfying every inequality, or None.

    Solves ``max t`` subject to ``<a, x> + t <= b`` and ``t <= 1``.
    """
    n = rep.dim
    if not rep.halfspaces:
        return la.zeros(n)
    A = [tuple(h.normal) + (Fraction(1),) for h in rep.halfspaces]
    b = [h.offset for h in rep.halfspaces]
    A.append(la.zeros(n) + (Fraction(1),))
    b.append(Fraction(1))
    res = linprog(la.zeros(n) + (Fraction(1),), A, b, free=True)
    if res.status != OPTIMAL or res.value <= 0:
        return None
    return res.x[:n]


def convex_hull(points):
    """Both representations of ``conv(points)``.

    The H-form is irredundant; for a lower-dimensional hull it contains
    opposite pairs of inequalities pinning down the affine hull.  The V-form
    lists the extreme points in lexicographic order.
    """
    points = [la.vector(p) for p in points]
    if not points:
        raise GeometryError("convex hull of an empty list")
    n = len(points[0])
    h = remove_redundant(v_to_h(VRep(n, tuple(points))))
    v = h_to_v(h)
    return h, VRep(n, tuple(sorted(v.vertices)))


def interior_contains(points, x):
    """True when `x` lies in the interior of ``conv(points)``."""
    if not points:
        return False
    h = v_to_h(VRep(len(x), tuple(points)))
    return h.strictly_contains(x)


def polar_polytope(rep):
    """Polar set ``{x : <x, y> <= 1 for every extreme point y}`` of a polytope.

    Raises `GeometryError` unless `rep` is bounded with the origin in its
    interior.
    """
    if not rep.is_bounded:
        raise GeometryError("polar_polytope expects a polytope (no rays or lines)")
    if not interior_contains(rep.vertices, la.zeros(rep.dim)):
        raise GeometryError("the origin is not an interior point")
    # only the extreme points matter; this also drops a listed origin
    extreme = h_to_v(v_to_h(rep)).vertices
    one = Fraction(1)
    return HRep(rep.dim, tuple(HalfSpace(y, one) for y in extreme))


def recession_cone(rep):
    """Homogenised system ``{x : <a, x> <= 0}``; the input must be nonempty."""
    if is_empty(rep):
        raise GeometryError("recession cone of the empty set is undefined")
    return HRep(rep.dim, tuple(h.homogenized() for h in rep.halfspaces))


def lineality_space(rep):
    """Basis of the largest linear subspace in the recession cone."""
    A = [h.normal for h in rep.halfspaces]
    return la.nullspace(A, rep.dim)


def is_bounded(rep):
    return h_to_v(rep).is_bounded
