"""Exact two-phase simplex over the rationals.

Pivoting follows Bland's rule (smallest eligible column enters, ties on the
ratio test go to the smallest basic index), which guarantees termination
without any tolerance.  Problem sizes are tiny so the tableau is dense.
"""
from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple = None
    value: Fraction = None

    @property
    def feasible(self):
        return self.status != INFEASIBLE


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.basis = list(basis)
        self.d = None

    def set_objective(self, c):
        d = list(c) + [_ZERO]
        for i, j in enumerate(self.basis):
            cj = c[j]
            if cj:
                row = self.rows[i]
                d = [a - cj * b for a, b in zip(d, row)]
        self.d = d

    def pivot(self, r, q):
        row = self.rows[r]
        piv = row[q]
        if piv != 1:
            row = [a / piv for a in row]
            self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[q]
                if f:
                    self.rows[i] = [a - f * b for a, b in zip(other, row)]
        f = self.d[q]
        if f:
            self.d = [a - f * b for a, b in zip(self.d, row)]
        self.basis[r] = q

    def run(self, ncols):
        """Maximise the current objective over the first `ncols` columns."""
        while True:
            q = next((j for j in range(ncols) if self.d[j] > 0), None)
            if q is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[q]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], q)

    def solution(self, n):
        y = [_ZERO] * n
        for i, j in enumerate(self.basis):
            if j < n:
                y[j] = self.rows[i][-1]
        return y


def _standard_form(c, A_ub, b_ub, A_eq, b_eq):
    """Maximise c.y subject to A_ub y <= b_ub, A_eq y = b_eq, y >= 0."""
    n = len(c)
    n_slack = len(A_ub)
    rows, rhs, needs_art, slack_basis = [], [], [], []
    for k, (a, b) in enumerate(zip(A_ub, b_ub)):
        row = [Fraction(v) for v in a] + [_ZERO] * n_slack
        row[n + k] = Fraction(1)
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
            needs_art.append(True)
            slack_basis.append(None)
        else:
            needs_art.append(False)
            slack_basis.append(n + k)
        rows.append(row)
        rhs.append(b)
    for a, b in zip(A_eq, b_eq):
        row = [Fraction(v) for v in a] + [_ZERO] * n_slack
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)
        needs_art.append(True)
        slack_basis.append(None)

    width = n + n_slack
    n_art = sum(needs_art)
    basis = []
    art = width
    for i, row in enumerate(rows):
        row.extend([_ZERO] * n_art)
        if needs_art[i]:
            row[art] = Fraction(1)
            basis.append(art)
            art += 1
        else:
            basis.append(slack_basis[i])
    return rows, rhs, basis, width, n_art


def _solve_nonneg(c, A_ub, b_ub, A_eq, b_eq):
    n = len(c)
    rows, rhs, basis, width, n_art = _standard_form(c, A_ub, b_ub, A_eq, b_eq)
    tab = _Tableau(rows, rhs, basis)
    total = width + n_art

    if n_art:
        phase1 = [_ZERO] * width + [Fraction(-1)] * n_art
        tab.set_objective(phase1)
        tab.run(total)
        if tab.d[-1] != 0:  # d[-1] = -(phase-1 optimum) = sum of artificials
            return LPResult(INFEASIBLE)
        # Drive zero-level artificials out of the basis; drop dependent rows.
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= width:
                q = next((j for j in range(width) if tab.rows[i][j] != 0), None)
                if q is None:
                    del tab.rows[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, q)
            i += 1
        tab.rows = [row[:width] + [row[-1]] for row in tab.rows]

    cost = [Fraction(v) for v in c] + [_ZERO] * (width - n)
    tab.set_objective(cost)
    status = tab.run(width)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    y = tab.solution(n)
    value = sum((ci * yi for ci, yi in zip(cost, y)), _ZERO)
    return LPResult(OPTIMAL, tuple(y), value)


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), free=False):
    """Maximise ``c . x`` subject to ``A_ub x <= b_ub`` and ``A_eq x = b_eq``.

    Variables are nonnegative unless `free` is set, in which case every
    variable is unrestricted in sign (split internally as ``u - v``).

    Returns
    -------
    LPResult
        ``status`` is one of ``"optimal"``, ``"infeasible"``,
        ``"unbounded"``; ``x`` and ``value`` are set only when optimal.
    """
    c = [Fraction(v) for v in c]
    A_ub, b_ub = list(A_ub), list(b_ub)
    A_eq, b_eq = list(A_eq), list(b_eq)
    if not free:
        return _solve_nonneg(c, A_ub, b_ub, A_eq, b_eq)

    n = len(c)
    split = lambda row: [Fraction(v) for v in row] + [-Fraction(v) for v in row]  # noqa: E731
    res = _solve_nonneg(split(c), [split(r) for r in A_ub], b_ub,
                        [split(r) for r in A_eq], b_eq)
    if res.status != OPTIMAL:
        return res
    x = tuple(res.x[i] - res.x[n + i] for i in range(n))
    return LPResult(OPTIMAL, x, res.value)


def feasible_point(A_ub=(), b_ub=(), A_eq=(), b_eq=(), nvars=None, free=True):
    """Any point of the system, or None when it is infeasible."""
    if nvars is None:
        first = next(iter(list(A_ub) + list(A_eq)), None)
        if first is None:
            raise ValueError("nvars is required for an empty system")
        nvars = len(first)
    res = linprog([0] * nvars, A_ub, b_ub, A_eq, b_eq, free=free)
    return res.x if res.status == OPTIMAL else None
