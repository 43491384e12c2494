"""Incremental double description over integer vectors.

A homogeneous cone ``{y : <a, y> <= 0 for every constraint a}`` is kept as
a lineality basis plus a minimal list of extreme rays.  Every generator is a
primitive integer vector, so all the inner products below are exact integer
arithmetic.  Adjacency uses the combinatorial test on zero sets (bit masks of
tight constraints), which is exact for a minimal ray list.
"""
from math import gcd


def _primitive(v):
    g = gcd(*v)
    if g > 1:
        return tuple(a // g for a in v)
    return tuple(v)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


class HomogeneousCone:
    """Generators of ``{y in R^dim : a . y <= 0}`` for the constraints added so far."""

    def __init__(self, dim):
        self.dim = dim
        self.lines = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
        # (ray, mask of tight recorded constraints)
        self.rays = []
        self.nconstraints = 0

    def add(self, a):
        """Intersect with ``a . y <= 0``; `a` is an integer vector.

        Returns False, and records nothing, when the constraint already holds
        on the whole cone.
        """
        bit = 1 << self.nconstraints
        for idx, line in enumerate(self.lines):
            al = _dot(a, line)
            if al != 0:
                self._line_step(a, idx, line, al, bit)
                self.nconstraints += 1
                return True

        values = [_dot(a, r) for r, _ in self.rays]
        if all(v <= 0 for v in values):
            return False
        self._ray_step(values, bit)
        self.nconstraints += 1
        return True

    def _line_step(self, a, idx, line, al, bit):
        if al > 0:
            line = tuple(-x for x in line)
            al = -al
        old_mask = bit - 1
        lines = []
        for j, other in enumerate(self.lines):
            if j == idx:
                continue
            s = _dot(a, other)
            if s:
                other = _primitive(tuple(-al * x + s * y for x, y in zip(other, line)))
            lines.append(other)
        rays = []
        for r, m in self.rays:
            s = _dot(a, r)
            if s:
                r = _primitive(tuple(-al * x + s * y for x, y in zip(r, line)))
            rays.append((r, m | bit))
        rays.append((_primitive(line), old_mask))
        self.lines = lines
        self.rays = rays

    def _ray_step(self, values, bit):
        rays = self.rays
        pointed_dim = self.dim - len(self.lines)
        pos = [i for i, v in enumerate(values) if v > 0]
        neg = [i for i, v in enumerate(values) if v < 0]
        new = []
        for i, v in enumerate(values):
            if v < 0:
                new.append(rays[i])
            elif v == 0:
                new.append((rays[i][0], rays[i][1] | bit))
        for ip in pos:
            rp, mp = rays[ip]
            vp = values[ip]
            for in_ in neg:
                rn, mn = rays[in_]
                common = mp & mn
                if common.bit_count() < pointed_dim - 2:
                    continue
                if any(k != ip and k != in_ and (m & common) == common
                       for k, (_, m) in enumerate(rays)):
                    continue
                vn = values[in_]
                r = _primitive(tuple(vp * x - vn * y for x, y in zip(rn, rp)))
                new.append((r, common | bit))
        self.rays = new
