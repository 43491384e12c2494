import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _corpus
from _oracles import (
    bisector,
    dist_sq,
    lattice_points,
    planar_cell,
    solve,
    strictly_inside_hull_2d,
    vec,
)
from lazyvor import (
    CandidateLimitError,
    FgCone,
    GeometryError,
    HintError,
    PointSource,
    bisector_halfspace,
    box_hrep,
    classify_point,
    cone_equal,
    cone_stabilized,
    direction_cone_scan,
    load_preset,
    parse_source_spec,
    polar_cone,
    relevant_points,
    voronoi_cell,
    voronoi_cell_boundary,
    voronoi_cell_inner,
    voronoi_cell_truncated,
)
from lazyvor.kernel.polyhedra import HalfSpace, HRep, recession_cone, remove_redundant, same_set

P1 = load_preset("p1")
P2 = load_preset("p2")
Z2 = load_preset("lattice-z2")
CORPUS = _corpus.load()

coord = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def finite_sets(dim=2, min_size=2, max_size=7):
    pt = st.tuples(*[coord] * dim)
    return st.lists(pt, min_size=min_size, max_size=max_size, unique=True)


def all_bisectors(p, pts):
    return HRep(len(p), tuple(bisector_halfspace(p, q) for q in pts if q != p))


def oracle_box(p, pts):
    """A square containing p and every pairwise intersection of bisector lines."""
    lines = [bisector(p, q) for q in pts if q != p]
    extent = max(abs(x) for x in p) + 1
    for i, (a, b) in enumerate(lines):
        for c, d in lines[i + 1:]:
            x = solve([a, c], [b, d])
            if x is not None:
                extent = max(extent, abs(x[0]), abs(x[1]))
    m = 2 * extent + 1
    return (-m, -m, m, m)


# ---------------------------------------------------------------------------
# examples


def test_bisector_halfspace():
    h = bisector_halfspace((0, 0), (2, 0))
    assert h == HalfSpace((1, 0), 1)
    assert h.contains(vec(1, 5)) and not h.contains(vec(Fraction(3, 2), 0))
    with pytest.raises(GeometryError):
        bisector_halfspace((1, 1), (1, 1))


def test_classify_examples():
    c = classify_point(Z2, (0, 0), 100)
    assert c.kind == "inner" and len(c.witness.points) <= 4
    assert strictly_inside_hull_2d(list(c.witness.points), vec(0, 0))

    c = classify_point(P1, (1, 0), 10 ** 4)
    assert c.kind == "boundary" and c.support == vec(1, 0)

    c = classify_point(P2, (1, 0), 10 ** 4)
    assert c.kind == "inner"
    assert strictly_inside_hull_2d(list(c.witness.points), vec(1, 0))

    # (0, 5) sits on the boundary of the hull of P1 and carries no hint
    c = classify_point(P1, (0, 5), 400)
    assert c.kind == "undetermined" and c.radius_sq == 400


def test_direction_cone_scan_and_stabilisation():
    scan = direction_cone_scan(P1, (1, 0), Fraction(25, 4))
    assert cone_equal(scan, FgCone(2, (vec(-1, 2), vec(-1, -2))))
    assert not cone_stabilized(P1, (1, 0), Fraction(25, 4), 25)
    assert cone_stabilized(Z2, (0, 0), 1, 25)
    with pytest.raises(GeometryError):
        cone_stabilized(Z2, (0, 0), 2, 1)


def test_lattice_cell_is_the_unit_square():
    r = voronoi_cell(Z2, (0, 0), 100)
    assert r.kind == "polytope"
    assert set(r.vrep.vertices) == {vec(x, y) for x in (Fraction(-1, 2), Fraction(1, 2))
                                    for y in (Fraction(-1, 2), Fraction(1, 2))}
    assert set(relevant_points(r)) == {vec(1, 0), vec(-1, 0), vec(0, 1), vec(0, -1)}
    sites = [q for q in lattice_points(3) if dist_sq(q, vec(0, 0)) <= 9]
    verts, rel, box_edges = planar_cell(vec(0, 0), sites, (-4, -4, 4, 4))
    assert verts == set(r.vrep.vertices) and rel == set(relevant_points(r)) and box_edges == 0


def test_p1_cell_is_not_polyhedral():
    r = voronoi_cell(P1, (1, 0), 10 ** 4)
    assert r.kind == "non_polyhedral"
    ev = r.certificate["evidence"]
    assert len(ev) >= 2 and all(not s["contains_limit"] for s in ev)
    assert r.certificate["strictly_growing"]
    with pytest.raises(GeometryError):
        relevant_points(r)


# The cell of (1, 0) in P2, cross-checked by clipping the box [-100, 100]^2
# with the bisectors of all 568 sites within the construction radius.
P2_GOLDEN_VERTICES = {
    vec(0, Fraction(-13, 4)), vec(0, Fraction(13, 4)), vec(Fraction(37, 12), Fraction(-35, 12)),
    vec(Fraction(97, 24), Fraction(-139, 24)), vec(Fraction(201, 40), Fraction(-389, 40)),
    vec(Fraction(361, 60), Fraction(-881, 60)), vec(Fraction(589, 84), Fraction(-1735, 84)),
    vec(Fraction(897, 112), Fraction(-3095, 112)), vec(Fraction(1297, 144), Fraction(-5129, 144)),
    vec(Fraction(1801, 180), Fraction(-8029, 180)), vec(Fraction(2421, 220), Fraction(-12011, 220)),
    vec(Fraction(3169, 264), Fraction(-17315, 264)), vec(Fraction(4057, 312), Fraction(-24205, 312)),
    vec(Fraction(4925, 364), Fraction(-30733, 364)),
}
P2_GOLDEN_RELEVANT = {vec(-2, Fraction(-1, 2)), vec(-1, 0)} | {
    vec(n, 1 - Fraction(1, n)) for n in range(2, 14)}


def test_p2_golden_cell():
    r = voronoi_cell(P2, (1, 0), 10 ** 6)
    assert r.kind == "polytope"
    assert set(r.vrep.vertices) == P2_GOLDEN_VERTICES
    assert set(relevant_points(r)) == P2_GOLDEN_RELEVANT
    assert r.certificate["candidate_radius_sq"] <= r.certificate["bound_radius_sq"]


def test_inner_cell_from_an_explicit_witness():
    src = PointSource.finite([(0, 0), (2, 0), (-2, 0), (0, 2), (0, -2), (5, 5)])
    r = voronoi_cell_inner(src, (0, 0), [(2, 0), (-2, 0), (0, 2), (0, -2)])
    assert set(r.vrep.vertices) == {vec(x, y) for x in (-1, 1) for y in (-1, 1)}
    with pytest.raises(GeometryError):
        voronoi_cell_inner(src, (0, 0), [(2, 0), (0, 2)])


def test_relevant_points_of_a_line():
    src = PointSource.finite([(0, 0), (1, 0), (2, 0), (3, 0)])
    r = voronoi_cell(src, (1, 0), 100)
    assert r.kind == "polyhedron" and relevant_points(r) == [vec(0, 0), vec(2, 0)]
    assert r.vrep.lines == (vec(0, 1),)


def test_singleton_cell_is_everything():
    r = voronoi_cell(PointSource.finite([(3, 1)]), (3, 1), 10)
    assert r.kind == "polyhedron" and r.hrep.halfspaces == () and relevant_points(r) == []


# ---------------------------------------------------------------------------
# truncation


def _truncated_p1(n):
    box = box_hrep((-2, -n), (2, n))
    return voronoi_cell_truncated(P1, (1, 0), box)


@pytest.mark.parametrize("n", [3, 6, 9])
def test_truncated_p1_matches_clipping(n):
    r = _truncated_p1(n)
    sites = [vec(0, z) for z in range(-4 * n - 10, 4 * n + 11)] + [vec(1, 0)]
    verts, rel, box_edges = planar_cell(vec(1, 0), sites, (-2, -n, 2, n))
    assert set(r.vrep.vertices) == verts
    assert set(r.relevant_points) == rel
    assert r.certificate["box_facets"] == box_edges


def test_truncated_p1_facet_count():
    # V((1,0)) lies in x >= (1 + y^2) / 2 - 1/8, so a window capped at x = 2
    # only ever meets the bisectors of (0, -2), ..., (0, 2), however tall it is.
    tall = [len(_truncated_p1(n).relevant_points) for n in (3, 6, 9)]
    assert tall == [5, 5, 5]
    # widening towards +x keeps exposing new facets
    wide = [len(voronoi_cell_truncated(P1, (1, 0), box_hrep((-2, -n), (n, n))).relevant_points)
            for n in (3, 6, 9)]
    assert wide == [5, 7, 9]


def test_truncated_lattice():
    r = voronoi_cell_truncated(Z2, (0, 0), box_hrep((-3, -3), (3, 3)))
    assert set(r.vrep.vertices) == {vec(x, y) for x in (Fraction(-1, 2), Fraction(1, 2))
                                    for y in (Fraction(-1, 2), Fraction(1, 2))}
    assert r.certificate["box_facets"] == 0


def test_truncated_two_points():
    src = PointSource.finite([(0, 0), (4, 0)])
    r = voronoi_cell_truncated(src, (0, 0), box_hrep((-1, -1), (3, 1)))
    assert set(r.vrep.vertices) == {vec(-1, -1), vec(-1, 1), vec(2, -1), vec(2, 1)}
    assert r.relevant_points == (vec(4, 0),) and r.certificate["box_facets"] == 3


def test_truncation_needs_the_site_inside():
    with pytest.raises(GeometryError):
        voronoi_cell_truncated(Z2, (0, 0), box_hrep((0, 0), (1, 1)))
    with pytest.raises(GeometryError):
        box_hrep((0, 0), (0, 1))


# ---------------------------------------------------------------------------
# hints and limits


def _hinted(points, at, witnesses):
    doc = {"dimension": 2, "parts": [{"kind": "finite", "points": [list(map(str, p)) for p in points]}],
           "hints": [{"at": list(map(str, at)), "kind": "finitely_generated",
                      "witness_points": [list(map(str, w)) for w in witnesses]}]}
    return parse_source_spec(json.dumps(doc))


def test_hint_with_a_too_small_cone_is_rejected():
    src = _hinted([(0, 0), (1, 0), (0, 1), (-1, -1)], (0, 0), [(1, 0), (0, 1)])
    with pytest.raises(HintError):
        voronoi_cell_boundary(src, (0, 0), [(1, 0), (0, 1)])


def test_hinted_boundary_cell():
    src = _hinted([(0, 0), (1, 0), (0, 1), (1, 1)], (0, 0), [(1, 0), (0, 1)])
    r = voronoi_cell(src, (0, 0), 100)
    assert r.kind == "polyhedron"
    assert set(r.relevant_points) == {vec(1, 0), vec(0, 1)}
    assert same_set(recession_cone(r.hrep), polar_cone(FgCone(2, (vec(1, 0), vec(0, 1)))))


def test_candidate_limit(monkeypatch):
    monkeypatch.setenv("LAZYVOR_MAX_CANDIDATES", "5")
    with pytest.raises(CandidateLimitError):
        voronoi_cell(P2, (1, 0), 10 ** 6)


# ---------------------------------------------------------------------------
# invariants on finite sets


@settings(max_examples=40, deadline=None)
@given(finite_sets())
def test_cell_matches_brute_force(pts):
    src = PointSource.finite(pts)
    for p in src.all_points():
        r = voronoi_cell(src, p, 10 ** 4)
        assert r.hrep.contains(p)
        assert same_set(r.hrep, all_bisectors(p, src.all_points()))
        others = [q for q in src.all_points() if q != p]
        for v in r.vrep.vertices:
            d = dist_sq(v, p)
            assert all(dist_sq(v, q) >= d for q in others)
            # a vertex is equidistant from p and at least two relevant sites
            assert sum(1 for q in r.relevant_points if dist_sq(v, q) == d) >= min(2, len(others))


@settings(max_examples=40, deadline=None)
@given(finite_sets(min_size=3))
def test_inner_iff_bounded(pts):
    src = PointSource.finite(pts)
    for p in src.all_points():
        inner = strictly_inside_hull_2d([q for q in src.all_points()], p)
        assert (classify_point(src, p, 10 ** 4).kind == "inner") == inner
        assert voronoi_cell(src, p, 10 ** 4).vrep.is_bounded == inner


@settings(max_examples=30, deadline=None)
@given(finite_sets(min_size=2), st.tuples(coord, coord), st.fractions(1, 5, max_denominator=3))
def test_translation_and_scaling(pts, t, s):
    def move(x):
        return tuple(s * a + b for a, b in zip(x, t))

    src = PointSource.finite(pts)
    moved = PointSource.finite([move(p) for p in pts])
    for p in src.all_points()[:3]:
        a = voronoi_cell(src, p, 10 ** 4)
        b = voronoi_cell(moved, move(p), 10 ** 4)
        # a.x <= c maps to a.x' <= s c + a.t
        image = HRep(2, tuple(HalfSpace(h.normal, s * h.offset + sum(x * y for x, y in zip(h.normal, t)))
                              for h in a.hrep.halfspaces))
        assert same_set(image, b.hrep)
        assert {move(v) for v in a.relevant_points} == set(b.relevant_points)


@settings(max_examples=30, deadline=None)
@given(finite_sets(min_size=2))
def test_truncation_is_the_cell_cut_by_the_box(pts):
    src = PointSource.finite(pts)
    box = box_hrep((-7, -7), (7, 7))
    for p in src.all_points()[:3]:
        full = voronoi_cell(src, p, 10 ** 4)
        cut = voronoi_cell_truncated(src, p, box)
        assert same_set(cut.hrep, full.hrep & box)
        assert set(cut.relevant_points) <= set(full.relevant_points)


def _boundary_runs(corpus):
    for dim, pts in corpus:
        src = PointSource.finite(pts)
        for p in src.all_points():
            if classify_point(src, p, 10 ** 4).kind == "boundary":
                yield src, p, voronoi_cell(src, p, 10 ** 4)


def test_boundary_recession_is_the_polar_of_the_direction_cone():
    for src, p, r in _boundary_runs(CORPUS[:20]):
        cone = FgCone.spanned_by(src.dim, [tuple(a - b for a, b in zip(q, p)) for q in src.all_points()])
        assert same_set(recession_cone(r.hrep), polar_cone(cone))
        s_sq = r.certificate["s_sq"]
        assert all(dist_sq(q, p) <= 4 * s_sq for q in r.relevant_points)


@pytest.mark.parametrize("index", range(0, len(CORPUS), 6))
def test_corpus_cells_match_the_bisector_oracle(index):
    dim, pts = CORPUS[index]
    src = PointSource.finite(pts)
    for p in src.all_points():
        r = voronoi_cell(src, p, 10 ** 4)
        expected = remove_redundant(all_bisectors(p, src.all_points()))
        assert set(r.hrep.halfspaces) == set(expected.halfspaces)
        if dim == 2:
            verts, rel, _ = planar_cell(p, src.all_points(), oracle_box(p, src.all_points()))
            assert set(r.relevant_points) == rel
            assert set(r.vrep.vertices) <= verts
