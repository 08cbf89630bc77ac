"""Integer enumeration under a strict quadratic sign condition."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import UnboundedError
from .poly import ParamPolynomial


def integer_points_under_quadratic(
    p: ParamPolynomial,
    var: str = "a",
    constraints: Sequence[ParamPolynomial] = (),
    start: int = 1,
) -> list[int]:
    """Integers ``n >= start`` with ``p(n) < 0`` and ``g(n) >= 0`` for every g.

    ``p`` and the constraints must involve no parameter other than ``var``.
    The scan stops at the first point past the vertex where ``p`` is
    non-negative; convexity makes that a complete search.
    """
    extra = set(p.variables()) - {var}
    if extra:
        raise ValueError(f"quadratic still depends on {sorted(extra)}")
    if p.degree_in(var) > 2:
        raise ValueError(f"{p} is not quadratic in {var}")
    lead = p.coeff(var, 2)
    if lead.is_constant() is False or lead.constant_value() <= 0:
        raise UnboundedError(f"leading coefficient of {p} is not positive; solution set unbounded")
    b = p.coeff(var, 1).constant_value() if p.degree_in(var) >= 1 else Fraction(0)
    vertex = -b / (2 * lead.constant_value())

    def at(q, n):
        return q.evaluate({var: n})

    found = []
    n = start
    while True:
        value = at(p, n)
        if n > vertex and value >= 0:
            return found
        if value < 0 and all(at(g, n) >= 0 for g in constraints):
            found.append(n)
        n += 1
