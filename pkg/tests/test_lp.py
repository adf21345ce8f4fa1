import random
from fractions import Fraction

import pytest

from opnbounds.certificates import verify_certificate
from opnbounds.enumeration import is_feasible
from opnbounds.linexpr import LinExpr
from opnbounds.lp import (LPProblem, UnboundedSlopeError, best_constant,
                          frontier, minimize)
from opnbounds.model import Case, Relation, Var, build_system
from opnbounds.simplex import Status

NO3 = build_system(Case.THREE_COPRIME)
WITH3 = build_system(Case.THREE_DIVIDES)
WITH3_SHARP = build_system(Case.THREE_DIVIDES, True)


def test_theorem_slope_no3():
    bound = best_constant(NO3, Fraction(8, 3))
    assert bound.constant == Fraction(-7, 3)
    # the known-good integral witness: e=1, s1=1, s=1, Omega=3, omega=2
    attained = (bound.witness[Var.Omega]
                - Fraction(8, 3) * bound.witness[Var.omega])
    assert attained == Fraction(-7, 3)
    assert is_feasible(NO3, bound.witness)
    report = verify_certificate(NO3, bound.certificate)
    assert report.passed and report.derived_constant == Fraction(-7, 3)


def test_theorem_slope_with3():
    bound = best_constant(WITH3, Fraction(21, 8))
    assert bound.constant == Fraction(-39, 8)
    assert is_feasible(WITH3, bound.witness)
    report = verify_certificate(WITH3, bound.certificate)
    assert report.passed and report.derived_constant == Fraction(-39, 8)


def test_slope_two_frozen_value():
    bound = best_constant(NO3, Fraction(2))
    assert bound.constant == Fraction(-1)
    assert verify_certificate(NO3, bound.certificate).passed


def test_slope_zero_bounded_below_by_one():
    # Omega >= e >= 1 forces the constant up to at least 1
    bound = best_constant(NO3, Fraction(0))
    assert bound.constant >= 1


def test_f3_min2_does_not_move_the_theorem_slope():
    """Frozen answer to the system's own open question: adding f3 >= 2
    leaves the optimum at 21/8 exactly where it was."""
    sharp = best_constant(WITH3_SHARP, Fraction(21, 8))
    assert sharp.constant == Fraction(-39, 8)
    assert is_feasible(WITH3_SHARP, sharp.witness)
    assert verify_certificate(WITH3_SHARP, sharp.certificate).passed


def test_f3_min2_monotone_across_slopes():
    for slope in (Fraction(0), Fraction(2), Fraction(21, 8), Fraction(5, 2)):
        plain = best_constant(WITH3, slope).constant
        sharp = best_constant(WITH3_SHARP, slope).constant
        assert sharp >= plain, slope


def test_unsupported_slope_raises():
    with pytest.raises(UnboundedSlopeError, match="slope 100 not supported"):
        best_constant(NO3, Fraction(100))
    # the scaling ray: t grows, f4 = 4t, Omega = 5t + const, omega = t + const
    with pytest.raises(UnboundedSlopeError):
        best_constant(NO3, Fraction(6))


def test_three_divides_tips_over_at_21_8():
    # 21/8 is the largest supported slope for the 3 | N system: the ray
    # t=1, s1=4, s31=3, s3=3, s=7, f3=3, f4=4, Omega=21, omega=8 satisfies
    # every homogeneous constraint with Omega/omega ratio exactly 21/8, so
    # any steeper slope is unbounded while 21/8 itself is attained (-39/8).
    with pytest.raises(UnboundedSlopeError, match="not supported"):
        best_constant(WITH3, Fraction(8, 3))
    with pytest.raises(UnboundedSlopeError):
        best_constant(WITH3_SHARP, Fraction(8, 3))
    assert best_constant(WITH3, Fraction(21, 8)).constant == Fraction(-39, 8)

    ray = {var: Fraction(0) for var in Var}
    ray.update({Var.t: Fraction(1), Var.s1: Fraction(4), Var.s31: Fraction(3),
                Var.s3: Fraction(3), Var.s: Fraction(7), Var.f3: Fraction(3),
                Var.f4: Fraction(4), Var.Omega: Fraction(21),
                Var.omega: Fraction(8)})
    for con in WITH3.constraints:
        moved = sum(coeff * ray[var] for var, coeff in con.body.terms.items())
        if con.relation is Relation.EQ:
            assert moved == 0, con.name
        else:
            assert moved >= 0, con.name


def test_minimize_statuses():
    zero = minimize(LPProblem(NO3, LinExpr({})))
    assert zero.status is Status.OPTIMAL and zero.value == 0
    down = minimize(LPProblem(NO3, LinExpr({Var.e: -1})))
    assert down.status is Status.UNBOUNDED
    assert down.value is None and down.primal is None


def test_minimize_primal_is_exactly_feasible():
    problem = LPProblem(NO3, LinExpr({Var.Omega: 1, Var.omega: Fraction(-8, 3)}))
    solution = minimize(problem)
    assert solution.optimal
    for c in NO3.constraints:
        value = c.body.evaluate(solution.primal)
        assert value == 0 if c.relation is Relation.EQ else value >= 0, c.name
    assert problem.objective.evaluate(solution.primal) == solution.value
    assert all(v >= 0 for v in solution.primal.values())


def test_multiplier_map_covers_constraints():
    solution = minimize(LPProblem(NO3, LinExpr({Var.Omega: 1})))
    assert solution.optimal
    assert set(solution.multipliers) <= set(NO3.names())
    for name, y in solution.multipliers.items():
        if NO3.mapping()[name].relation is Relation.GE:
            assert y >= 0, name


def test_frontier_rows_in_input_order():
    rows = frontier(NO3, [Fraction(2), Fraction(8, 3), Fraction(100)])
    assert [(r.slope, r.constant) for r in rows] == [
        (Fraction(2), Fraction(-1)),
        (Fraction(8, 3), Fraction(-7, 3)),
        (Fraction(100), None),
    ]
    assert rows[0].certificate is not None
    assert rows[2].certificate is None
    assert frontier(NO3, []) == []


def test_weak_duality_on_random_feasible_points():
    """Any verified certificate's bound holds at any feasible point."""
    rng = random.Random(99)
    bound = best_constant(NO3, Fraction(8, 3))
    for _ in range(80):
        free = {var: Fraction(rng.randint(0, 5)) for var in
                (Var.e, Var.s1, Var.s22, Var.s32, Var.t, Var.f4)}
        point = {v: Fraction(0) for v in Var}
        point.update(free)
        point[Var.e] += 1
        point[Var.s2] = point[Var.s22]
        point[Var.s3] = point[Var.s32]
        point[Var.s] = point[Var.s1] + point[Var.s2] + point[Var.s3]
        point[Var.omega] = point[Var.s] + point[Var.t] + 1
        point[Var.f4] += 4 * point[Var.t]
        point[Var.Omega] = point[Var.e] + 2 * point[Var.s] + point[Var.f4]
        if not is_feasible(NO3, point):
            continue
        assert (point[Var.Omega] - Fraction(8, 3) * point[Var.omega]
                >= bound.constant)
