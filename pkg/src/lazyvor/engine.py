"""Voronoi cells of single sites of a (possibly infinite) discrete point set.

Cells are never built by scanning the whole set.  Each construction first
derives a squared radius beyond which no site can contribute a facet, asks
the source for the sites inside that ball, and reduces their bisector
half-spaces to an irredundant system:

* inner sites (``p`` interior to the hull of the set): a small interior
  witness bounds the cell by a scaled polar polytope, which yields the radius;
* boundary sites with a finitely generated direction cone: the radius comes
  from the vertices of the generators' bisector polyhedron and of its
  intersection with the translated cone;
* boundary sites whose direction cone is declared not closed get a
  non-polyhedrality certificate instead of a cell;
* truncation by a box is always possible and needs no classification.
"""
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .cones import (
    FgCone,
    cone_contains,
    cone_equal,
    cone_generators,
    cone_is_fullspace,
    polar_cone,
    support_direction,
)
from .errors import CandidateLimitError, GeometryError, HintError, NotAMemberError, SpecError
from .kernel import linalg as la
from .kernel.polyhedra import (
    HalfSpace,
    HRep,
    IncrementalPolyhedron,
    VRep,
    Witness,
    h_to_v,
    interior_contains,
    polar_polytope,
    recession_cone,
    remove_redundant,
    same_set,
    v_to_h,
)
from .kernel.witnesses import steinitz_witness
from .serialize import jsonable

POLYTOPE = "polytope"
POLYHEDRON = "polyhedron"
NON_POLYHEDRAL = "non_polyhedral"
TRUNCATED = "truncated"
UNDETERMINED = "undetermined"

INNER = "inner"
BOUNDARY = "boundary"

DEFAULT_MAX_CANDIDATES = 100000
# Number of radii sampled as evidence for a not-closed direction cone.
EVIDENCE_SAMPLES = 4


@dataclass(frozen=True)
class CellResult:
    kind: str
    point: tuple
    hrep: HRep = None
    vrep: VRep = None
    relevant_points: tuple = ()
    recession: FgCone = None
    certificate: dict = field(default_factory=dict, compare=False)

    def to_json(self):
        return {
            "kind": self.kind,
            "point": jsonable(self.point),
            "hrep": jsonable(self.hrep) if self.hrep is not None else None,
            "vrep": jsonable(self.vrep) if self.vrep is not None else None,
            "relevant_points": jsonable(self.relevant_points),
            "recession_generators": jsonable(self.recession) if self.recession is not None else None,
            "certificate": jsonable(self.certificate),
        }


@dataclass(frozen=True)
class Classification:
    kind: str
    point: tuple
    witness: Witness = None
    support: tuple = None
    radius_sq: Fraction = None

    def to_json(self):
        out = {"kind": self.kind, "point": jsonable(self.point)}
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.support is not None:
            out["support"] = jsonable(self.support)
        if self.radius_sq is not None:
            key = "radius_sq_exhausted" if self.kind == UNDETERMINED else "radius_sq"
            out[key] = jsonable(self.radius_sq)
        return out


def max_candidates():
    raw = os.environ.get("LAZYVOR_MAX_CANDIDATES", str(DEFAULT_MAX_CANDIDATES))
    try:
        value = int(raw)
    except ValueError:
        raise SpecError(f"LAZYVOR_MAX_CANDIDATES must be an integer, got {raw!r}") from None
    if value < 1:
        raise SpecError("LAZYVOR_MAX_CANDIDATES must be positive")
    return value


def bisector_halfspace(p, q):
    """Points at least as close to `p` as to `q`.

    ``<q - p, x> <= |q - p|^2 / 2 + <p, q - p>``; the boundary is the
    perpendicular bisector of the segment ``[p, q]``.
    """
    p, q = la.vector(p), la.vector(q)
    if p == q:
        raise GeometryError("bisector of a point with itself")
    d = la.sub(q, p)
    return HalfSpace(d, la.norm_sq(d) / 2 + la.dot(p, d))


def _require_member(src, p):
    p = la.vector(p)
    if len(p) != src.dim:
        raise GeometryError(f"point has dimension {len(p)}, source has {src.dim}")
    if not src.contains(p):
        raise NotAMemberError(f"{list(map(str, p))} is not a point of the source")
    return p


def _candidates(src, p, radius_sq):
    pts = [q for q in src.points_in_ball(p, radius_sq) if q != p]
    limit = max_candidates()
    if len(pts) > limit:
        raise CandidateLimitError(
            f"{len(pts)} candidate sites within squared radius {radius_sq} "
            f"exceed LAZYVOR_MAX_CANDIDATES={limit}")
    return pts


def _reach_sq(poly, p):
    """``4 * max |v - p|^2`` over the vertices of a bounded `poly`, else None."""
    v = poly.vrep()
    if not v.vertices or not v.is_bounded:
        return None
    return 4 * max(la.dist_sq(x, p) for x in v.vertices)


def _minimal_cell(p, seeds, sites):
    """Irredundant intersection of `seeds` and the bisectors of `sites`.

    `seeds` are ``(site_or_None, halfspace)`` pairs that are always kept
    through the pre-filter.  Sites are inserted nearest first into an
    incremental double description; those that do not cut the current set
    are redundant for the final one too, and once the set is bounded every
    site beyond twice its farthest vertex is skipped.  The survivors are then reduced by
    a facet test on the final generators (exact LP when the set is not
    full-dimensional).  Returns the HRep and the site of each of its half-spaces.
    """
    n = len(p)
    poly = IncrementalPolyhedron(n)
    kept = []
    for site, h in seeds:
        poly.add(h)
        kept.append((site, h))
    seeded = {s for s, _ in seeds}
    reach_sq = _reach_sq(poly, p)
    for d, q in sorted((la.dist_sq(q, p), q) for q in sites if q not in seeded):
        # once the set is bounded, farther bisectors contain all of it
        if reach_sq is not None and d > reach_sq:
            break
        h = bisector_halfspace(p, q)
        if poly.add(h):
            kept.append((q, h))
            reach_sq = _reach_sq(poly, p)
    facets = poly.facets([h for _, h in kept])
    if facets is None:
        reduced = remove_redundant(HRep(n, tuple(h for _, h in kept)))
    else:
        reduced = HRep(n, tuple(facets))
    owner = {}
    for site, h in kept:
        owner.setdefault(h, site)
    pairs = [(owner[h], h) for h in reduced.halfspaces]
    # box facets (site None) first, then sites in lexicographic order
    pairs.sort(key=lambda sh: (sh[0] is not None, sh[0] or ()))
    return HRep(n, tuple(h for _, h in pairs)), [s for s, _ in pairs]


# ---------------------------------------------------------------------------
# classification and direction cones


def direction_cone_scan(src, p, radius_sq):
    """Cone generated by ``q - p`` over the other sites within the ball."""
    p = la.vector(p)
    return FgCone.spanned_by(src.dim, [la.sub(q, p) for q in src.points_in_ball(p, radius_sq)])


def cone_stabilized(src, p, r1, r2):
    """Whether the scanned cone is unchanged between the two radii.

    True is evidence of finite generation, not a proof.
    """
    r1, r2 = la.scalar(r1), la.scalar(r2)
    if r1 > r2:
        raise GeometryError("cone_stabilized expects r1 <= r2")
    return cone_equal(direction_cone_scan(src, p, r1), direction_cone_scan(src, p, r2))


def _generator_points(src, p):
    """Points whose differences from `p` generate the direction cone, if known.

    For a finite source these are simply all other points; otherwise they
    come from a ``finitely_generated`` hint.
    """
    hint = src.hint_at(p)
    if hint is not None and hint.kind == "finitely_generated":
        return list(hint.witness_points)
    if src.is_finite:
        return [q for q in src.all_points() if q != p]
    return None


def _nearest_radius_sq(src, p, max_radius_sq):
    r = Fraction(1)
    while True:
        r_eff = min(r, max_radius_sq)
        others = [q for q in src.points_in_ball(p, r_eff) if q != p]
        if others:
            return min(la.dist_sq(q, p) for q in others)
        if r_eff >= max_radius_sq:
            return None
        r *= 4


def classify_point(src, p, max_radius_sq):
    """Inner (with a Steinitz witness), boundary (with a support vector) or undetermined.

    Without a hint the ball around `p` is grown by doubling its radius until
    `p` becomes interior to the hull of the sites found, or the radius
    exceeds `max_radius_sq`.  Hinted and finite sources are decided exactly.
    """
    p = _require_member(src, p)
    max_radius_sq = la.scalar(max_radius_sq)
    n = src.dim

    gens = _generator_points(src, p)
    if gens is not None:
        cone = FgCone.spanned_by(n, [la.sub(q, p) for q in gens])
        if cone_is_fullspace(cone):
            return Classification(INNER, p, witness=steinitz_witness(gens, p))
        return Classification(BOUNDARY, p, support=support_direction(cone))

    hint = src.hint_at(p)
    if hint is not None and hint.kind == "not_closed":
        r = _nearest_radius_sq(src, p, max_radius_sq)
        radius = max_radius_sq if r is None else min(max_radius_sq, r * 4 ** (EVIDENCE_SAMPLES - 1))
        scan = direction_cone_scan(src, p, radius)
        return Classification(BOUNDARY, p, support=support_direction(scan), radius_sq=radius)

    r = Fraction(1)
    while True:
        r_eff = min(r, max_radius_sq)
        pts = src.points_in_ball(p, r_eff)
        if len(pts) > n and interior_contains(pts, p):
            return Classification(INNER, p, witness=steinitz_witness(pts, p), radius_sq=r_eff)
        if r_eff >= max_radius_sq:
            return Classification(UNDETERMINED, p, radius_sq=max_radius_sq)
        r *= 4


# ---------------------------------------------------------------------------
# cell constructions


def _witness_points(witness):
    return list(witness.points) if isinstance(witness, Witness) else [la.vector(w) for w in witness]


def voronoi_cell_inner(src, p, witness):
    """Cell of an inner site, bounded via the polar of its witness hull."""
    p = _require_member(src, p)
    pts = _witness_points(witness)
    n = src.dim
    shifted = [la.sub(w, p) for w in pts]
    if not all(src.contains(w) for w in pts) or not interior_contains(shifted, la.zeros(n)):
        raise GeometryError("witness does not contain the site in the interior of its hull")

    polar = h_to_v(polar_polytope(VRep(n, tuple(shifted))))
    m = max(la.norm_sq(w) for w in shifted) / 2
    rho_sq = m * m * max(la.norm_sq(v) for v in polar.vertices)
    bound_sq = 4 * rho_sq

    # Any bounded cell K of a subset of the sites contains V(p), so sites
    # beyond 4 * (max vertex distance of K)^2 cannot be relevant.  Growing the
    # ball until it covers that radius gives the same cell as querying the
    # (usually much larger) ball of squared radius 4 rho^2 directly.
    # Sites that were redundant for a round stay redundant later, so each
    # round only re-seeds with the previous facets and the witness.
    witness_seeds = [(w, bisector_halfspace(p, w)) for w in sorted(set(pts))]
    seeds = witness_seeds
    radius_sq = max(la.norm_sq(w) for w in shifted)
    while True:
        sites = _candidates(src, p, radius_sq)
        cell, owners = _minimal_cell(p, seeds, sites)
        seeds = witness_seeds + [(q, h) for q, h in zip(owners, cell.halfspaces)
                                 if q not in set(pts)]
        vrep = h_to_v(cell)
        if not vrep.is_bounded:
            raise AssertionError("inner cell is unbounded")
        reach_sq = 4 * max(la.dist_sq(v, p) for v in vrep.vertices)
        if reach_sq <= radius_sq:
            break
        radius_sq = min(reach_sq, 16 * radius_sq, bound_sq)
    for v in vrep.vertices:
        if any(la.dot(la.sub(v, p), w) > m for w in shifted):
            raise AssertionError("cell escapes the bounding polytope")
    return CellResult(
        POLYTOPE, p, cell, vrep, tuple(owners), FgCone(n),
        certificate={
            "witness": pts,
            "m": m,
            "rho_sq": rho_sq,
            "bound_radius_sq": bound_sq,
            "candidate_radius_sq": radius_sq,
            "candidates": len(sites),
        })


def voronoi_cell_boundary(src, p, witness_points, check_hint=True):
    """Cell of a site whose direction cone is ``cone(witness_points - p)``.

    The generators' bisectors form a polyhedron H; restricted to the affine
    hull of the translated cone it is line-free.  With s'^2 the largest
    squared distance from `p` to a vertex of ``H ∩ (C + p)`` and s''^2 the
    same for the vertices of H, every Voronoi relevant site lies within
    squared distance ``4 s^2``, s = max(s', s'').  The recession cone of the
    result must equal the polar of the direction cone.

    With `check_hint`, every candidate site is verified to lie in the
    translated cone, and a violation raises `HintError`.
    """
    p = _require_member(src, p)
    n = src.dim
    pts = sorted({la.vector(w) for w in witness_points})
    for w in pts:
        if w == p or not src.contains(w):
            raise HintError(f"cone witness {list(map(str, w))} is not another member point")
    dirs = [la.sub(w, p) for w in pts]
    cone = FgCone(n, tuple(dirs))

    bisectors = [bisector_halfspace(p, w) for w in pts]
    complement = la.orthogonal_complement(dirs, n) if dirs else [la.unit(n, i) for i in range(n)]
    pins = []
    for c in complement:
        pins.append(HalfSpace(c, la.dot(c, p)))
        pins.append(HalfSpace(la.neg(c), -la.dot(c, p)))
    restricted = HRep(n, tuple(bisectors + pins))

    h_vrep = h_to_v(restricted)
    if h_vrep.lines:
        raise AssertionError("restricted generator polyhedron still contains a line")
    s2_vertices = max(la.dist_sq(v, p) for v in h_vrep.vertices)
    translated_cone = v_to_h(VRep(n, (p,), tuple(dirs)))
    q_vrep = h_to_v(restricted & translated_cone)
    if not q_vrep.is_bounded:
        raise HintError("bisector polyhedron is unbounded inside the hinted cone")
    s2_cone = max(la.dist_sq(v, p) for v in q_vrep.vertices)
    s_sq = max(s2_cone, s2_vertices)
    radius_sq = 4 * s_sq

    sites = set(_candidates(src, p, radius_sq)) | set(pts)
    if check_hint:
        for q in sorted(sites):
            if not cone_contains(cone, la.sub(q, p)):
                raise HintError(
                    f"site {list(map(str, q))} lies outside the hinted direction cone")

    seeds = list(zip(pts, bisectors))
    cell, owners = _minimal_cell(p, seeds, sites)
    rec = recession_cone(cell) if cell.halfspaces else HRep(n)
    if not same_set(rec, polar_cone(cone)):
        raise HintError("recession cone of the cell differs from the polar of the hinted cone")
    vrep = h_to_v(cell)
    kind = POLYTOPE if vrep.is_bounded else POLYHEDRON
    return CellResult(
        kind, p, cell, vrep, tuple(owners), cone_generators(rec),
        certificate={
            "direction_generators": dirs,
            "s_sq": s_sq,
            "s_prime_sq": s2_cone,
            "s_double_prime_sq": s2_vertices,
            "candidate_radius_sq": radius_sq,
            "candidates": len(sites),
            "affine_hull_complement": complement if dirs else [],
        })


def box_hrep(lo, hi):
    """Axis-aligned box ``lo <= x <= hi``."""
    lo, hi = la.vector(lo), la.vector(hi)
    if len(lo) != len(hi) or any(a >= b for a, b in zip(lo, hi)):
        raise GeometryError("box needs lo < hi in every coordinate")
    n = len(lo)
    hs = []
    for i in range(n):
        e = la.unit(n, i)
        hs.append(HalfSpace(la.neg(e), -lo[i]))
        hs.append(HalfSpace(e, hi[i]))
    return HRep(n, tuple(hs))


def voronoi_cell_truncated(src, p, box):
    """Exact ``V(p) ∩ box`` for a bounded box with `p` strictly inside.

    With D^2 the largest squared distance from `p` to a box vertex, a site
    farther than ``4 D^2`` has a bisector containing the whole box.
    """
    p = _require_member(src, p)
    if box.dim != src.dim:
        raise GeometryError("box dimension mismatch")
    if not box.strictly_contains(p):
        raise GeometryError("the site is not strictly inside the truncation box")
    box_v = h_to_v(box)
    if not box_v.is_bounded:
        raise GeometryError("truncation box must be bounded")
    d_sq = max(la.dist_sq(v, p) for v in box_v.vertices)
    radius_sq = 4 * d_sq
    sites = _candidates(src, p, radius_sq)
    seeds = [(None, h) for h in box.halfspaces]
    cell, owners = _minimal_cell(p, seeds, sites)
    relevant = tuple(s for s in owners if s is not None)
    return CellResult(
        TRUNCATED, p, cell, h_to_v(cell), relevant, None,
        certificate={
            "box": box,
            "candidate_radius_sq": radius_sq,
            "candidates": len(sites),
            "box_facets": sum(1 for s in owners if s is None),
            "site_facets": len(relevant),
        })


def _not_closed_certificate(src, p, hint, max_radius_sq):
    limit = hint.limit_direction
    r0 = _nearest_radius_sq(src, p, max_radius_sq)
    radii = [] if r0 is None else [r0 * 4 ** k for k in range(EVIDENCE_SAMPLES)
                                   if r0 * 4 ** k <= max_radius_sq]
    samples = []
    prev = None
    for r in radii:
        scan = direction_cone_scan(src, p, r)
        contains_limit = cone_contains(scan, limit)
        if contains_limit:
            raise HintError(
                f"scanned direction cone at radius_sq {r} contains the declared limit direction")
        grew = prev is not None and not cone_equal(prev, scan)
        samples.append({"radius_sq": r, "generators": len(scan.generators),
                        "extreme_generators": scan.reduced().generators,
                        "grew": grew, "contains_limit": contains_limit})
        prev = scan

    family = src.parts[hint.witness_part]
    alignment = []
    for k in (1, 2, 4, 8, 16, 32, 64):
        u = la.sub(family.point(k), p)
        if la.is_zero(u):
            continue
        c = la.dot(u, limit)
        alignment.append([k, c * abs(c) / (la.norm_sq(u) * la.norm_sq(limit))])
    return {
        "hint": hint.to_json(),
        "evidence": samples,
        "strictly_growing": len(samples) > 1 and all(s["grew"] for s in samples[1:]),
        "witness_alignment": alignment,
    }


def voronoi_cell(src, p, max_radius_sq):
    """Classify `p`, then build its cell or explain why it is not polyhedral."""
    p = _require_member(src, p)
    max_radius_sq = la.scalar(max_radius_sq)
    n = src.dim
    if src.is_finite and len(src.all_points()) == 1:
        everything = HRep(n)
        v = h_to_v(everything)
        return CellResult(POLYHEDRON, p, everything, v, (),
                          FgCone(n, v.lines + tuple(la.neg(l) for l in v.lines)))

    cls = classify_point(src, p, max_radius_sq)
    if cls.kind == INNER:
        return voronoi_cell_inner(src, p, cls.witness)
    if cls.kind == BOUNDARY:
        gens = _generator_points(src, p)
        if gens is not None:
            return voronoi_cell_boundary(src, p, gens, check_hint=not src.is_finite)
        hint = src.hint_at(p)
        return CellResult(NON_POLYHEDRAL, p,
                          certificate=_not_closed_certificate(src, p, hint, max_radius_sq))
    return CellResult(UNDETERMINED, p, certificate={"radius_sq_exhausted": max_radius_sq})


def relevant_points(result):
    """Sites whose bisectors are facets of a computed cell."""
    if result.kind not in (POLYTOPE, POLYHEDRON):
        raise GeometryError(f"relevant points are undefined for a {result.kind} result")
    return list(result.relevant_points)
