"""Chern characters, Todd series and rank-two bundle formulas.

The class arguments are duck-typed: anything with ring-like ``+``, ``*``,
integer scaling and a ``degree()`` method works, so the same twist and
discriminant code serves both :class:`~chowcheck.chowring.GradedClass` and
Schubert classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .chowring import GradedClass
from .errors import DegreeError, RankError

# x / (1 - exp(-x)) through degree 5
TODD_LINE_COEFFS = (
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 12),
    Fraction(0),
    Fraction(-1, 720),
    Fraction(0),
)


@dataclass(frozen=True)
class BundleClassData:
    rank: int
    c1: Any
    c2: Any

    def __post_init__(self):
        if self.rank < 1:
            raise RankError(f"rank must be positive, got {self.rank}")
        _require_degree(self.c1, 1, "c1")
        _require_degree(self.c2, 2, "c2")


def _require_degree(cls, d: int, what: str):
    if not cls:
        return
    got = cls.degree()
    if got != d:
        raise DegreeError(f"{what} must be homogeneous of degree {d}, got {cls}")


def _top(cls: GradedClass, trunc: int | None) -> int:
    top = cls.ring.top_degree
    if trunc is None:
        return top
    if trunc > top:
        raise DegreeError(f"truncation {trunc} exceeds top degree {top}")
    return trunc


def chern_character_line(D: GradedClass, trunc: int | None = None) -> GradedClass:
    """``exp(D)`` truncated at ``trunc`` (default: the top degree)."""
    _require_degree(D, 1, "divisor")
    n = _top(D, trunc)
    total = D.ring.one()
    power = D.ring.one()
    for k in range(1, n + 1):
        power = power * D
        total = total + power * Fraction(1, math.factorial(k))
    return total


def todd_line(x: GradedClass, trunc: int | None = None) -> GradedClass:
    """Todd class of a line bundle with first Chern class ``x``."""
    _require_degree(x, 1, "line class")
    n = _top(x, trunc)
    if n >= len(TODD_LINE_COEFFS):
        raise DegreeError(f"Todd series is tabulated only through degree {len(TODD_LINE_COEFFS) - 1}")
    total = x.ring.one()
    power = x.ring.one()
    for k in range(1, n + 1):
        power = power * x
        if TODD_LINE_COEFFS[k]:
            total = total + power * TODD_LINE_COEFFS[k]
    return total


def todd_fourfold(r, H: GradedClass, c2X: GradedClass, point: GradedClass) -> GradedClass:
    """Todd class of a fourfold with ``c1 = r*H``, ``c2 = c2X`` and ``chi(O) = 1``.

    The degree-four part is ``point``, which must integrate to 1.
    """
    return (
        H.ring.one()
        + H * (Fraction(1, 2) * r)
        + (H * H * r ** 2 + c2X) * Fraction(1, 12)
        + H * c2X * (Fraction(1, 24) * r)
        + point
    )


def twist_rank2(b: BundleClassData, L) -> BundleClassData:
    """Chern data of ``E (x) L`` for rank-two ``E``."""
    if b.rank != 2:
        raise RankError(f"twist formula is for rank 2, got rank {b.rank}")
    _require_degree(L, 1, "twisting class")
    return BundleClassData(2, b.c1 + L * 2, b.c2 + b.c1 * L + L * L)


def discriminant(b: BundleClassData):
    if b.rank != 2:
        raise RankError(f"discriminant is defined here for rank 2, got rank {b.rank}")
    return b.c1 * b.c1 - b.c2 * 4
