"""Reference LP solver for cross-checking the simplex: enumerate candidate
vertices by solving every n-subset of tight conditions exactly, and decide
unboundedness from the vertices of the normalized recession cone. Hopeless
past toy sizes, which is the point: no pivoting logic is shared with the
code under test.

Problem form matches simplex.solve: minimize c.x, rows[i].x >= rhs[i] or
== rhs[i], x >= 0 componentwise.
"""
from fractions import Fraction
from itertools import combinations


def _solve_square(mat, vec):
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(vec[i])] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _satisfies(x, rows, relations, rhs):
    if any(v < 0 for v in x):
        return False
    for row, rel, b in zip(rows, relations, rhs):
        lhs = sum(Fraction(c) * v for c, v in zip(row, x))
        if rel == "==":
            if lhs != Fraction(b):
                return False
        elif lhs < Fraction(b):
            return False
    return True


def _vertices(n, rows, relations, rhs):
    """All basic feasible points: every way to make n independent conditions
    tight, out of the constraint rows and the axis planes x_j = 0."""
    conditions = [(list(row), Fraction(b)) for row, b in zip(rows, rhs)]
    for j in range(n):
        unit = [Fraction(0)] * n
        unit[j] = Fraction(1)
        conditions.append((unit, Fraction(0)))
    seen = set()
    out = []
    for combo in combinations(range(len(conditions)), n):
        x = _solve_square([conditions[k][0] for k in combo],
                          [conditions[k][1] for k in combo])
        if x is None or not _satisfies(x, rows, relations, rhs):
            continue
        key = tuple(x)
        if key not in seen:
            seen.add(key)
            out.append(x)
    return out


def brute_force_lp(rows, relations, rhs, objective):
    """(status, value) with status in {"infeasible", "unbounded", "optimal"};
    value only for optimal. x >= 0 makes the feasible set pointed, so when it
    is nonempty some vertex exists, and the minimum is either attained at a
    vertex or pushed to -infinity along a recession ray."""
    n = len(objective)
    points = _vertices(n, rows, relations, rhs)
    if not points:
        return "infeasible", None
    # recession directions, normalized onto sum(d) = 1
    ray_rows = [list(row) for row in rows] + [[1] * n]
    ray_relations = list(relations) + ["=="]
    ray_rhs = [0] * len(rows) + [1]
    for d in _vertices(n, ray_rows, ray_relations, ray_rhs):
        if sum(Fraction(c) * v for c, v in zip(objective, d)) < 0:
            return "unbounded", None
    best = min(sum(Fraction(c) * v for c, v in zip(objective, x)) for x in points)
    return "optimal", best
