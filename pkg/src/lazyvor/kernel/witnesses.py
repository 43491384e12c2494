"""Small certificates that a point lies in (the interior of) a convex hull."""
from fractions import Fraction
from itertools import combinations

from . import linalg as la
from .lp import OPTIMAL, linprog
from .polyhedra import VRep, Witness, h_to_v, interior_contains, v_to_h

# Exhaustive fallback only looks at this many hull vertices.
STEINITZ_POOL_LIMIT = 24


def caratheodory_witness(points, x):
    """Convex combination of at most ``n + 1`` of `points` equal to `x`.

    An LP finds some convex combination, then affine dependencies among the
    support are used to zero out coefficients until the support is affinely
    independent.  Returns None when ``x`` is outside the hull.
    """
    points = [la.vector(p) for p in points]
    x = la.vector(x)
    if not points:
        return None
    n = len(x)
    k = len(points)
    A_eq = [[p[i] for p in points] for i in range(n)] + [[Fraction(1)] * k]
    b_eq = list(x) + [Fraction(1)]
    res = linprog([0] * k, A_eq=A_eq, b_eq=b_eq)
    if res.status != OPTIMAL:
        return None
    lam = {i: c for i, c in enumerate(res.x) if c}

    while len(lam) > n + 1:
        support = sorted(lam)
        # rows: coordinates and the all-ones row, columns: support points
        M = [[points[j][i] for j in support] for i in range(n)]
        M.append([Fraction(1)] * len(support))
        mu = la.nullspace(M, len(support))[0]
        if all(m <= 0 for m in mu):
            mu = la.neg(mu)
        t = min(lam[j] / m for j, m in zip(support, mu) if m > 0)
        for j, m in zip(support, mu):
            lam[j] -= t * m
        lam = {j: c for j, c in lam.items() if c}

    idx = tuple(sorted(lam))
    return Witness(idx, tuple(lam[i] for i in idx), tuple(points[i] for i in idx))


def _hull_vertex_indices(points):
    h = v_to_h(VRep(len(points[0]), tuple(points)))
    verts = set(h_to_v(h).vertices)
    return [i for i, p in enumerate(points) if p in verts]


def steinitz_witness(points, x):
    """At most ``2n`` of `points` whose hull has `x` in its interior.

    Candidates are the hull vertices, visited in lexicographic order.  One
    greedy pass drops every vertex whose removal keeps `x` interior; since
    interiority is monotone the result is inclusion-minimal.  If that set is
    still larger than ``2n`` an exhaustive search over subsets of size at most
    ``2n`` (by size, then lexicographically) is run on the pool.
    """
    points = [la.vector(p) for p in points]
    x = la.vector(x)
    if not points or not interior_contains(points, x):
        return None
    n = len(x)
    first = {}
    for i, p in enumerate(points):
        first.setdefault(p, i)
    pool = sorted(set(points[i] for i in _hull_vertex_indices(points)))

    chosen = list(pool)
    for p in pool:
        trial = [q for q in chosen if q != p]
        if interior_contains(trial, x):
            chosen = trial

    if len(chosen) > 2 * n:
        chosen = None
        if len(pool) > STEINITZ_POOL_LIMIT:
            raise RuntimeError("Steinitz fallback pool too large")
        for size in range(n + 1, 2 * n + 1):
            for subset in combinations(pool, size):
                if interior_contains(list(subset), x):
                    chosen = list(subset)
                    break
            if chosen:
                break
        if chosen is None:  # pragma: no cover - excluded by Steinitz's theorem
            raise AssertionError("no Steinitz subset found")

    idx = tuple(sorted(first[p] for p in chosen))
    return Witness(idx, None, tuple(points[i] for i in idx))
