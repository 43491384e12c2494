"""Exact vector helpers over `fractions.Fraction`.

Vectors are plain tuples of Fractions.  Nothing in here ever produces a
float; square roots are avoided by working with squared norms throughout.
"""
from fractions import Fraction
from math import gcd, lcm

Vector = tuple


def scalar(value):
    """Coerce an int, Fraction or ``"p/q"`` string into a Fraction.

    Floats are rejected: they would smuggle rounding into exact code.
    """
    if type(value) is Fraction:
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    if isinstance(value, str):
        value = value.strip()
    return Fraction(value)


def vector(values):
    return tuple(scalar(v) for v in values)


def format_scalar(x):
    """Canonical text form: ``"p/q"`` in lowest terms, or ``"p"``."""
    return str(Fraction(x))


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def neg(v):
    return tuple(-a for a in v)


def norm_sq(v):
    return dot(v, v)


def dist_sq(u, v):
    return norm_sq(sub(u, v))


def is_zero(v):
    return all(a == 0 for a in v)


def zeros(n):
    return (Fraction(0),) * n


def unit(n, i):
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def max_norm(v):
    return max((abs(a) for a in v), default=Fraction(0))


def integer_direction(v):
    """Primitive integer vector that is a positive multiple of `v`.

    Used to give rays, lines and half-space normals a canonical scale.
    """
    den = lcm(*(Fraction(a).denominator for a in v)) if v else 1
    ints = [Fraction(a).numerator * (den // Fraction(a).denominator) for a in v]
    g = gcd(*ints)
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints)


def rref(rows, ncols):
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [a / p for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for every row}`` with rational entries."""
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def orthogonal_complement(vectors, n):
    """Orthogonal basis of ``span(vectors)^perp`` (Gram-Schmidt, unnormalised)."""
    return gram_schmidt(nullspace(vectors, n))


def gram_schmidt(vectors):
    out = []
    for v in vectors:
        w = tuple(v)
        for u in out:
            w = sub(w, scale(dot(w, u) / dot(u, u), u))
        if not is_zero(w):
            out.append(w)
    return out


def independent_subset(vectors):
    """Greedy maximal linearly independent subset, in input order."""
    chosen = []
    for v in vectors:
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
    return chosen
