"""Linear-combination certificates and their verification.

A certificate claims Omega >= slope * omega + constant over one case system
by listing one rational multiplier per constraint. Verification recomputes
the weighted sum exactly: multipliers on inequalities must be nonnegative
(equalities may be signed), the combined Omega coefficient must be positive,
and after normalizing it to 1 every other variable's coefficient (the
residual) must be nonpositive. Then Omega - slope*omega + residual-terms +
constant >= 0 holds at every feasible point, which proves the claim whenever
the derived constant is at least the claimed one.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .linexpr import combine
from .model import Case, ConstraintSystem, Relation, Var, build_system
from .rationals import format_rational, parse_rational

_SCHEMA_FIELDS = ("system", "include_f3_min2", "multipliers",
                  "claimed_slope", "claimed_constant")


class CertificateFormatError(ValueError):
    """Raised when a certificate file does not match the schema."""


@dataclass(frozen=True)
class Certificate:
    case: Case
    include_f3_min2: bool
    multipliers: Mapping  # constraint name -> Fraction
    claimed_slope: Fraction
    claimed_constant: Fraction

    def system(self) -> ConstraintSystem:
        return build_system(self.case, self.include_f3_min2)


@dataclass
class VerificationReport:
    passed: bool
    failure_reason: str | None
    derived_slope: Fraction | None
    derived_constant: Fraction | None
    # coefficient after normalization for every variable except Omega, omega;
    # empty when verification failed before the combination was formed
    residuals: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def verify_certificate(system: ConstraintSystem, cert: Certificate) -> VerificationReport:
    """Check a certificate against a system; never raises on bad certificates."""

    def fail(reason):
        return VerificationReport(False, reason, None, None)

    if cert.case is not system.case:
        return fail(f"system mismatch: certificate targets {cert.case.value}, "
                    f"system is {system.case.value}")
    by_name = system.mapping()
    for name in cert.multipliers:
        if name not in by_name:
            return fail(f"unknown constraint: {name}")
    for name, multiplier in cert.multipliers.items():
        if by_name[name].relation is Relation.GE and multiplier < 0:
            return fail(f"illegal multiplier sign: {name}")

    total = combine((m, by_name[name].body) for name, m in cert.multipliers.items())
    omega_coeff = total.coeff(Var.Omega)
    if omega_coeff <= 0:
        return fail("no Omega contribution")
    normalized = total.scaled(Fraction(1) / omega_coeff)

    derived_slope = -normalized.coeff(Var.omega)
    derived_constant = -normalized.constant
    residuals = {v: normalized.coeff(v) for v in Var
                 if v is not Var.Omega and v is not Var.omega}
    report = VerificationReport(True, None, derived_slope, derived_constant, residuals)

    if derived_slope != cert.claimed_slope:
        report.passed = False
        report.failure_reason = (
            f"slope mismatch: derived {format_rational(derived_slope)}, "
            f"claimed {format_rational(cert.claimed_slope)}")
        return report
    for var in Var:
        if var in residuals and residuals[var] > 0:
            report.passed = False
            report.failure_reason = f"positive residual: {var.name}"
            return report
    if derived_constant < cert.claimed_constant:
        report.passed = False
        report.failure_reason = (
            f"constant shortfall: derived {format_rational(derived_constant)}, "
            f"claimed {format_rational(cert.claimed_constant)}")
        return report
    return report


def _strict_object(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise CertificateFormatError(f"duplicate key: {key}")
        out[key] = value
    return out


def certificate_from_dict(data: dict) -> Certificate:
    if not isinstance(data, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    for name in _SCHEMA_FIELDS:
        if name not in data:
            raise CertificateFormatError(f"missing field: {name}")
    for name in data:
        if name not in _SCHEMA_FIELDS:
            raise CertificateFormatError(f"unknown field: {name}")
    try:
        case = Case(data["system"])
    except ValueError:
        raise CertificateFormatError(f"unknown system: {data['system']!r}") from None
    if not isinstance(data["include_f3_min2"], bool):
        raise CertificateFormatError("include_f3_min2 must be a boolean")
    raw = data["multipliers"]
    if not isinstance(raw, dict):
        raise CertificateFormatError("multipliers must be an object")
    multipliers = {}
    for name, text in raw.items():
        if not isinstance(text, str):
            raise CertificateFormatError(f"multiplier for {name} must be a string")
        try:
            multipliers[name] = parse_rational(text)
        except ValueError as exc:
            raise CertificateFormatError(f"multiplier for {name}: {exc}") from None
    try:
        slope = parse_rational(data["claimed_slope"])
        constant = parse_rational(data["claimed_constant"])
    except (TypeError, ValueError) as exc:
        raise CertificateFormatError(f"claimed bound: {exc}") from None
    return Certificate(case, data["include_f3_min2"], multipliers, slope, constant)


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "system": cert.case.value,
        "include_f3_min2": cert.include_f3_min2,
        "multipliers": {name: format_rational(m)
                        for name, m in cert.multipliers.items()},
        "claimed_slope": format_rational(cert.claimed_slope),
        "claimed_constant": format_rational(cert.claimed_constant),
    }


def load_certificate(path) -> Certificate:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        data = json.loads(text, object_pairs_hook=_strict_object)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"invalid JSON: {exc}") from None
    return certificate_from_dict(data)


def save_certificate(cert: Certificate, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(certificate_to_dict(cert), handle, indent=2, ensure_ascii=False)
        handle.write("\n")
