"""Exact arithmetic: rationals, parametric polynomials, linear systems, integer search."""

from fractions import Fraction as BigRational

from .linear import (
    CramerSolution,
    LinearSystem,
    SolveKind,
    SolveOutcome,
    cramer_solve,
    determinant,
    linsolve_exact,
    residuals,
)
from .poly import DEFAULT_ALPHABET, Alphabet, ParamPolynomial, as_poly, exact_quotient
from .search import integer_points_under_quadratic


def poly_arith(lhs: ParamPolynomial, rhs: ParamPolynomial, kind: str) -> ParamPolynomial:
    """Functional form of ``+``, ``-`` and ``*``."""
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    raise ValueError(f"unknown operation {kind!r}")


__all__ = [
    "Alphabet",
    "BigRational",
    "CramerSolution",
    "DEFAULT_ALPHABET",
    "LinearSystem",
    "ParamPolynomial",
    "SolveKind",
    "SolveOutcome",
    "as_poly",
    "cramer_solve",
    "determinant",
    "exact_quotient",
    "integer_points_under_quadratic",
    "linsolve_exact",
    "poly_arith",
    "residuals",
]
