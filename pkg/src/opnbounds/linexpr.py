"""Sparse exact linear expressions.

A LinExpr is a finite map {variable: nonzero Fraction} plus a rational
constant. Keys can be anything hashable with a total order; the model layer
uses its variable enum. Zero coefficients are never stored, so structural
equality is semantic equality.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple


class LinExpr:
    """Immutable sparse linear form sum(coeff * var) + constant."""

    __slots__ = ("terms", "constant")

    def __init__(self, terms=(), constant=0):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for var, coeff in items:
            c = Fraction(coeff)
            if c:
                clean[var] = c
            elif var in clean:  # explicit zero cancels an earlier entry
                del clean[var]
        self.terms = clean
        self.constant = Fraction(constant)

    def coeff(self, var) -> Fraction:
        return self.terms.get(var, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms and self.constant == 0

    def evaluate(self, assignment: Mapping) -> Fraction:
        """Value at a full assignment; every used variable must be present."""
        total = self.constant
        for var, coeff in self.terms.items():
            total += coeff * assignment[var]
        return total

    def scaled(self, factor) -> "LinExpr":
        f = Fraction(factor)
        if not f:
            return LinExpr()
        return LinExpr({v: c * f for v, c in self.terms.items()}, self.constant * f)

    def __add__(self, other: "LinExpr") -> "LinExpr":
        merged = dict(self.terms)
        for var, coeff in other.terms.items():
            merged[var] = merged.get(var, Fraction(0)) + coeff
        return LinExpr(merged, self.constant + other.constant)

    def __sub__(self, other: "LinExpr") -> "LinExpr":
        return self + other.scaled(-1)

    def __neg__(self) -> "LinExpr":
        return self.scaled(-1)

    def __mul__(self, factor) -> "LinExpr":
        return self.scaled(factor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinExpr):
            return NotImplemented
        return self.terms == other.terms and self.constant == other.constant

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.constant))

    def __repr__(self):
        inner = ", ".join(f"{v}: {c}" for v, c in self.terms.items())
        return f"LinExpr({{{inner}}}, {self.constant})"


def combine(parts: Iterable[Tuple[object, LinExpr]]) -> LinExpr:
    """Exact weighted sum of (multiplier, expression) pairs."""
    terms: dict = {}
    constant = Fraction(0)
    for multiplier, expr in parts:
        m = Fraction(multiplier)
        if not m:
            continue
        for var, coeff in expr.terms.items():
            terms[var] = terms.get(var, Fraction(0)) + m * coeff
        constant += m * expr.constant
    return LinExpr(terms, constant)
