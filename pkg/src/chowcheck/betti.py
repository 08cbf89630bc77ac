"""Betti-number bookkeeping for projective bundles and blow-ups.

Entries are ParamPolynomials of degree <= 1 over :data:`BETTI_ALPHABET`,
so unknown Betti numbers can be carried through the formulas and solved
for with the exact eliminator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ChowCheckError
from .ratcore import Alphabet, LinearSystem, ParamPolynomial, linsolve_exact, residuals

# bX*, bY*: Betti numbers of the two fourfolds; sB1 = sum of b1 over the
# blown-up curves; m = number of curves.
BETTI_ALPHABET = Alphabet(("m", "bX3", "bX4", "bY3", "bY4", "sB1"))


def _entry(value) -> ParamPolynomial:
    if isinstance(value, ParamPolynomial):
        return value
    if isinstance(value, str):
        return BETTI_ALPHABET.var(value)
    return BETTI_ALPHABET.const(value)


@dataclass(frozen=True)
class BettiSequence:
    entries: tuple[ParamPolynomial, ...]

    @classmethod
    def of(cls, values: Iterable) -> BettiSequence:
        return cls(tuple(_entry(v) for v in values))

    @property
    def real_dimension(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, k: int) -> ParamPolynomial:
        if 0 <= k < len(self.entries):
            return self.entries[k]
        return BETTI_ALPHABET.zero()

    def __add__(self, other: BettiSequence) -> BettiSequence:
        n = max(len(self.entries), len(other.entries))
        return BettiSequence(tuple(self[k] + other[k] for k in range(n)))

    def scaled(self, factor) -> BettiSequence:
        return BettiSequence(tuple(e * factor for e in self.entries))

    def poincare_defects(self) -> list[ParamPolynomial]:
        """``b_k - b_{n-k}`` for k < n/2; all zero iff duality holds."""
        n = self.real_dimension
        return [self[k] - self[n - k] for k in range(n // 2 + 1) if k < n - k]

    def satisfies_duality(self) -> bool:
        return not any(self.poincare_defects())

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def point() -> BettiSequence:
    return BettiSequence.of([1])


def projective_space(n: int) -> BettiSequence:
    return projbundle_betti(point(), n)


def projbundle_betti(base: BettiSequence, fiber_dim: int) -> BettiSequence:
    """Betti numbers of a P^fiber_dim bundle: ``b_k = sum_j b_{k-2j}(base)``."""
    if fiber_dim < 1:
        raise ValueError("fiber dimension must be at least 1")
    n = base.real_dimension + 2 * fiber_dim
    return BettiSequence(tuple(
        sum((base[k - 2 * j] for j in range(fiber_dim + 1)), BETTI_ALPHABET.zero())
        for k in range(n + 1)
    ))


def blowup_betti(base: BettiSequence, centers: Sequence[tuple[BettiSequence, int]]) -> BettiSequence:
    """Blow-up along disjoint smooth centres of the given complex codimensions."""
    entries = list(base.entries)
    for center, codim in centers:
        if codim < 2:
            raise ValueError(f"blow-up centre must have codimension >= 2, got {codim}")
        for k in range(len(entries)):
            for j in range(1, codim):
                entries[k] = entries[k] + center[k - 2 * j]
    return BettiSequence(tuple(entries))


def fano_fourfold(prefix: str) -> BettiSequence:
    """b0 = 1, b1 = 0, b2 = 1, unknown b3, b4, completed by Poincare duality."""
    b3, b4 = BETTI_ALPHABET.var(f"{prefix}3"), BETTI_ALPHABET.var(f"{prefix}4")
    return BettiSequence.of([1, 0, 1, b3, b4, b3, 1, 0, 1])


def curves(m) -> BettiSequence:
    """Summed Betti numbers of ``m`` disjoint smooth connected curves."""
    m = _entry(m)
    return BettiSequence((m, BETTI_ALPHABET.var("sB1"), m))


@dataclass(frozen=True)
class ScrollRelations:
    equations: dict[int, ParamPolynomial]
    relations: dict[str, ParamPolynomial]
    each_b1_zero: bool
    route_via_base: BettiSequence
    route_via_target: BettiSequence
    curve_codimension: int

    def route_difference(self) -> list[ParamPolynomial]:
        n = max(len(self.route_via_base.entries), len(self.route_via_target.entries))
        return [self.route_via_base[k] - self.route_via_target[k] for k in range(n)]


def scroll_routes(m="m", curve_codimension: int = 3) -> tuple[BettiSequence, BettiSequence]:
    """Betti numbers of the common resolution, computed over X and over Y.

    Over X: P^1-bundle W, blown up along the P^2-bundles over the curves
    (codimension 2).  Over Y: Y blown up along the curves, then a P^1-bundle.
    """
    X, Y, B = fano_fourfold("bX"), fano_fourfold("bY"), curves(m)
    W = projbundle_betti(X, 1)
    E = projbundle_betti(B, 2)
    via_x = blowup_betti(W, [(E, 2)])
    via_y = projbundle_betti(blowup_betti(Y, [(B, curve_codimension)]), 1)
    return via_x, via_y


def derive_scroll_relations(m="m", curve_codimension: int = 3) -> ScrollRelations:
    """Solve the degree 3, 4, 5 comparisons for ``bX3``, ``bX4`` and ``sB1``."""
    via_x, via_y = scroll_routes(m, curve_codimension)
    equations = {k: via_x[k] - via_y[k] for k in (3, 4, 5)}
    sys = LinearSystem.from_equations([equations[k] for k in (3, 4, 5)], ("sB1", "bX3", "bX4"))
    outcome = linsolve_exact(sys)
    if not outcome.is_unique:
        raise ChowCheckError(f"Betti comparison is not uniquely solvable: {outcome.kind.value}")
    if any(residuals(sys, outcome.assignment)):
        raise ChowCheckError("Betti solution leaves a nonzero residual")
    relations = dict(outcome.assignment)
    # b1 of each curve is non-negative, so a vanishing sum forces each to vanish
    each_zero = relations["sB1"] == 0
    return ScrollRelations(equations, relations, each_zero, via_x, via_y, curve_codimension)
