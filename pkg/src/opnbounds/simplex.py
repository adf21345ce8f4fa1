"""Exact two-phase simplex over Fraction arithmetic.

Dense tableau, Bland's smallest-index rule for both entering and leaving
choices (no cycling, fully deterministic pivot sequence), no floating point
anywhere. Sized for small systems, tens of rows and columns.

Problem form: minimize c . x subject to rows[i] . x >= rhs[i] or == rhs[i],
x >= 0. The result carries one dual multiplier per input row in the original
row orientation: nonnegative on inequalities, signed on equalities, with
sum(y_i * rhs_i) equal to the optimal objective (checked exactly).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

GE = ">="
EQ = "=="


class Status(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class SimplexResult:
    status: Status
    value: Fraction | None = None   # c . x at the optimum
    x: list | None = None           # structural variable values
    duals: list | None = None       # per input row, original orientation


class _Tableau:
    def __init__(self, rows, relations, rhs, n):
        m = len(rows)
        self.n = n
        self.relations = list(relations)
        # column layout: structural 0..n-1, then one surplus per GE row,
        # then artificials; Bland therefore prefers structural columns in
        # their declaration order
        self.surplus_col = {}
        col = n
        for i, rel in enumerate(relations):
            if rel == GE:
                self.surplus_col[i] = col
                col += 1
        self.sigma = [1] * m        # row flips applied to make rhs nonnegative
        body = []
        b = []
        for i in range(m):
            row = [Fraction(v) for v in rows[i]] + [_ZERO] * (col - n)
            if i in self.surplus_col:
                row[self.surplus_col[i]] = -_ONE
            bi = Fraction(rhs[i])
            if bi < 0:
                row = [-v for v in row]
                bi = -bi
                self.sigma[i] = -1
            body.append(row)
            b.append(bi)
        # initial basis: the surplus column where the flip made it +1,
        # an artificial everywhere else
        self.art_col = {}
        basis = []
        for i in range(m):
            if self.sigma[i] == -1 and i in self.surplus_col:
                basis.append(self.surplus_col[i])
            else:
                self.art_col[i] = col
                basis.append(col)
                col += 1
        self.total = col
        for i in range(m):
            body[i].extend([_ZERO] * (col - len(body[i])))
            if i in self.art_col:
                body[i][self.art_col[i]] = _ONE
        self.rows = body
        self.b = b
        self.basis = basis
        self.orig = list(range(m))  # original row index per live tableau row
        self.first_art = min(self.art_col.values()) if self.art_col else col

    def pivot(self, r, c, z, zrhs):
        p = self.rows[r][c]
        row = self.rows[r]
        if p != 1:
            inv = _ONE / p
            self.rows[r] = row = [v * inv for v in row]
            self.b[r] *= inv
        br = self.b[r]
        for i in range(len(self.rows)):
            if i == r:
                continue
            f = self.rows[i][c]
            if f:
                other = self.rows[i]
                self.rows[i] = [ov - f * rv for ov, rv in zip(other, row)]
                self.b[i] -= f * br
        f = z[c]
        if f:
            for j in range(self.total):
                z[j] -= f * row[j]
            zrhs -= f * br
        self.basis[r] = c
        return zrhs

    def run(self, z, zrhs, entering_limit):
        """Bland iterations until optimal or unbounded. entering_limit bounds
        the candidate columns (artificials are barred in phase 2)."""
        guard = 0
        limit = 2000 * (len(self.rows) + self.total + 1)
        while True:
            guard += 1
            if guard > limit:  # Bland's rule makes this unreachable
                raise AssertionError("pivot limit exceeded")
            enter = -1
            for j in range(entering_limit):
                if z[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal", zrhs
            leave = -1
            best_ratio = None
            best_var = None
            for i in range(len(self.rows)):
                a = self.rows[i][enter]
                if a > 0:
                    ratio = self.b[i] / a
                    if (leave < 0 or ratio < best_ratio
                            or (ratio == best_ratio and self.basis[i] < best_var)):
                        leave, best_ratio, best_var = i, ratio, self.basis[i]
            if leave < 0:
                return "unbounded", zrhs
            zrhs = self.pivot(leave, enter, z, zrhs)


def solve(rows, relations, rhs, objective) -> SimplexResult:
    """Two-phase exact simplex; see the module docstring for the problem form."""
    m = len(rows)
    n = len(objective)
    tb = _Tableau(rows, relations, rhs, n)
    c = [Fraction(v) for v in objective]

    # phase 1: minimize the artificial sum
    if tb.art_col:
        z = [_ZERO] * tb.total
        for col in tb.art_col.values():
            z[col] = _ONE
        zrhs = _ZERO
        for i in range(m):
            if tb.basis[i] in tb.art_col.values():
                row = tb.rows[i]
                for j in range(tb.total):
                    z[j] -= row[j]
                zrhs -= tb.b[i]
        state, zrhs = tb.run(z, zrhs, tb.total)
        assert state == "optimal", "phase 1 objective is bounded below by zero"
        if -zrhs != 0:
            return SimplexResult(Status.INFEASIBLE)
        _drive_out_artificials(tb, z)

    # phase 2: the real objective over the feasible tableau
    z = list(c) + [_ZERO] * (tb.total - n)
    zrhs = _ZERO
    for i in range(len(tb.rows)):
        cb = c[tb.basis[i]] if tb.basis[i] < n else _ZERO
        if cb:
            row = tb.rows[i]
            for j in range(tb.total):
                z[j] -= cb * row[j]
            zrhs -= cb * tb.b[i]
    state, zrhs = tb.run(z, zrhs, tb.first_art)
    if state == "unbounded":
        return SimplexResult(Status.UNBOUNDED)

    x = [_ZERO] * n
    for i, col in enumerate(tb.basis):
        if col < n:
            x[col] = tb.b[i]
    value = sum((cj * xj for cj, xj in zip(c, x)), _ZERO)

    duals = [_ZERO] * m
    live = set(tb.orig)
    for i in range(m):
        if i not in live:
            continue  # row found redundant in phase 1; multiplier stays 0
        if relations[i] == GE:
            duals[i] = z[tb.surplus_col[i]]
            assert duals[i] >= 0, "inequality dual must be nonnegative"
        else:
            duals[i] = -tb.sigma[i] * z[tb.art_col[i]]
    paid = sum((duals[i] * Fraction(rhs[i]) for i in range(m)), _ZERO)
    assert paid == value, "strong duality must hold exactly"
    return SimplexResult(Status.OPTIMAL, value, x, duals)


def _drive_out_artificials(tb: _Tableau, z) -> None:
    """After a zero-value phase 1, pivot basic artificials out (or drop the
    row as redundant when its structural part vanished)."""
    art_cols = set(tb.art_col.values())
    r = 0
    while r < len(tb.rows):
        if tb.basis[r] in art_cols:
            pivot_col = -1
            for j in range(tb.first_art):
                if tb.rows[r][j]:
                    pivot_col = j
                    break
            if pivot_col >= 0:
                # rhs of a basic-artificial row is 0 here, so feasibility
                # survives pivoting on either sign
                tb.pivot(r, pivot_col, z, _ZERO)
            else:
                del tb.rows[r]
                del tb.b[r]
                del tb.basis[r]
                del tb.orig[r]
                continue
        r += 1
