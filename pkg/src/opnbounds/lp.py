"""Model-level LP interface: exact minimization over a constraint system,
best provable constants for a given slope, and slope frontiers.

best_constant(system, a) computes b* = min(Omega - a*omega) over the LP
relaxation, so Omega >= a*omega + b* holds at every feasible point and the
optimal dual multipliers form a Certificate proving exactly that bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import simplex
from .certificates import Certificate, verify_certificate
from .linexpr import LinExpr
from .model import ConstraintSystem, Relation, Var
from .rationals import format_rational


class UnboundedSlopeError(ValueError):
    """The objective Omega - slope*omega has no finite minimum."""


@dataclass(frozen=True)
class LPProblem:
    system: ConstraintSystem
    objective: LinExpr


@dataclass
class LPSolution:
    status: simplex.Status
    value: Fraction | None = None
    primal: dict | None = None        # Var -> Fraction, optimal only
    multipliers: dict | None = None   # constraint name -> Fraction, optimal only

    @property
    def optimal(self) -> bool:
        return self.status is simplex.Status.OPTIMAL


@dataclass
class SlopeBound:
    slope: Fraction
    constant: Fraction
    certificate: Certificate
    witness: dict  # Var -> Fraction, a feasible point attaining the constant


def minimize(problem: LPProblem) -> LPSolution:
    """Exact minimum of the objective over the system; duals come back as a
    complete per-constraint multiplier map."""
    system = problem.system
    rows = []
    relations = []
    rhs = []
    for c in system.constraints:
        rows.append([c.body.coeff(v) for v in Var])
        relations.append(simplex.GE if c.relation is Relation.GE else simplex.EQ)
        rhs.append(-c.body.constant)
    cost = [problem.objective.coeff(v) for v in Var]
    result = simplex.solve(rows, relations, rhs, cost)
    if result.status is not simplex.Status.OPTIMAL:
        return LPSolution(result.status)

    primal = {v: result.x[v.value] for v in Var}
    for c in system.constraints:  # the witness must satisfy the system exactly
        body = c.body.evaluate(primal)
        assert body == 0 if c.relation is Relation.EQ else body >= 0, c.name
    value = result.value + problem.objective.constant
    assert problem.objective.evaluate(primal) == value
    multipliers = {c.name: result.duals[i]
                   for i, c in enumerate(system.constraints)}
    return LPSolution(simplex.Status.OPTIMAL, value, primal, multipliers)


def best_constant(system: ConstraintSystem, slope: Fraction) -> SlopeBound:
    """Largest b with Omega >= slope*omega + b across the system, plus the
    dual certificate (re-verified) and an attaining witness."""
    slope = Fraction(slope)
    objective = LinExpr({Var.Omega: 1, Var.omega: -slope})
    solution = minimize(LPProblem(system, objective))
    if solution.status is simplex.Status.UNBOUNDED:
        raise UnboundedSlopeError(
            f"slope {format_rational(slope)} not supported by system")
    if not solution.optimal:
        raise RuntimeError(f"system unexpectedly {solution.status.value}")
    cert = Certificate(
        case=system.case,
        include_f3_min2=system.include_f3_min2,
        multipliers={name: m for name, m in solution.multipliers.items() if m},
        claimed_slope=slope,
        claimed_constant=solution.value,
    )
    report = verify_certificate(system, cert)
    assert report.passed, f"dual certificate failed: {report.failure_reason}"
    assert report.derived_constant == solution.value
    return SlopeBound(slope, solution.value, cert, solution.primal)


@dataclass
class FrontierRow:
    slope: Fraction
    constant: Fraction | None          # None when the slope is unbounded
    certificate: Certificate | None


def frontier(system: ConstraintSystem, slopes) -> list:
    """best_constant per requested slope, in the given order; unbounded
    slopes produce a row with no constant instead of failing the sweep."""
    rows = []
    for slope in slopes:
        try:
            bound = best_constant(system, slope)
        except UnboundedSlopeError:
            rows.append(FrontierRow(Fraction(slope), None, None))
        else:
            rows.append(FrontierRow(bound.slope, bound.constant, bound.certificate))
    return rows
