"""Finitely generated convex cones with apex 0, stored by generators."""
from dataclasses import dataclass
from fractions import Fraction

from .errors import GeometryError
from .kernel import linalg as la
from .kernel.lp import OPTIMAL, linprog
from .kernel.polyhedra import HalfSpace, HRep, h_to_v


@dataclass(frozen=True)
class FgCone:
    """``{sum l_i g_i : l_i >= 0}``; an empty generator list denotes ``{0}``."""

    dim: int
    generators: tuple = ()

    def __post_init__(self):
        gens = tuple(la.vector(g) for g in self.generators)
        if any(len(g) != self.dim for g in gens):
            raise GeometryError("generator dimension mismatch")
        if any(la.is_zero(g) for g in gens):
            raise GeometryError("cone generators must be nonzero")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def spanned_by(cls, dim, vectors):
        """Cone of the nonzero vectors among `vectors` (zeros are skipped)."""
        return cls(dim, tuple(v for v in map(la.vector, vectors) if not la.is_zero(v)))

    def reduced(self):
        """Same cone, with duplicate directions and redundant generators dropped."""
        seen, gens = set(), []
        for g in self.generators:
            key = la.integer_direction(g)
            if key not in seen:
                seen.add(key)
                gens.append(tuple(Fraction(x) for x in key))
        i = 0
        while i < len(gens):
            rest = FgCone(self.dim, tuple(gens[:i] + gens[i + 1:]))
            if cone_contains(rest, gens[i]):
                del gens[i]
            else:
                i += 1
        return FgCone(self.dim, tuple(gens))


def cone_contains(c, v):
    """Exact LP test: is `v` a nonnegative combination of the generators?"""
    v = la.vector(v)
    if len(v) != c.dim:
        raise GeometryError("dimension mismatch")
    if la.is_zero(v):
        return True
    if not c.generators:
        return False
    k = len(c.generators)
    A_eq = [[g[i] for g in c.generators] for i in range(c.dim)]
    res = linprog([0] * k, A_eq=A_eq, b_eq=v)
    return res.status == OPTIMAL


def polar_cone(c):
    """``{y : <g, y> <= 0 for every generator g}``."""
    return HRep(c.dim, tuple(HalfSpace(g, 0) for g in c.generators))


def cone_equal(a, b):
    if a.dim != b.dim:
        raise GeometryError("dimension mismatch")
    return (all(cone_contains(b, g) for g in a.generators)
            and all(cone_contains(a, g) for g in b.generators))


def cone_is_fullspace(c):
    """True iff the polar cone is ``{0}``.

    The polar is ``{0}`` exactly when the generators span E^n (trivial
    lineality of the polar) and no nonzero ``y`` has ``<g, y> <= 0`` for all
    generators; with spanning generators such a ``y`` makes at least one
    product negative, so it suffices to test feasibility of
    ``<g_i, y> <= 0, sum_i <g_i, y> <= -1``.
    """
    if la.rank(list(c.generators), c.dim) < c.dim:
        return False
    A = [tuple(g) for g in c.generators]
    total = tuple(sum(col, Fraction(0)) for col in zip(*A))
    res = linprog([0] * c.dim, A + [total], [0] * len(A) + [-1], free=True)
    return res.status != OPTIMAL


def cone_generators(rep):
    """Generators of a homogeneous HRep (every offset must be 0)."""
    if any(h.offset != 0 for h in rep.halfspaces):
        raise GeometryError("cone_generators expects a homogeneous system")
    v = h_to_v(rep)
    return FgCone(rep.dim, v.rays + v.lines + tuple(la.neg(l) for l in v.lines))


def support_direction(c):
    """A nonzero vector of the polar cone, from its relative interior.

    Sum of the primitive extreme rays of the polar; if the polar has no
    rays it is a linear subspace and its first basis vector is returned.
    Returns None when the polar is ``{0}``.
    """
    v = h_to_v(polar_cone(c))
    if v.rays:
        total = la.zeros(c.dim)
        for r in v.rays:
            total = la.add(total, la.integer_direction(r))
        return tuple(Fraction(x) for x in la.integer_direction(total))
    if v.lines:
        return v.lines[0]
    return None
