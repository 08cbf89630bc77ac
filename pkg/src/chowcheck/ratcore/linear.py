"""Exact linear systems over the rationals (with parametric right-hand sides)."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import ParametricCoefficientError, SingularSystemError
from .poly import Alphabet, ParamPolynomial


@dataclass(frozen=True)
class LinearSystem:
    """Rows ``sum_j coefficients[i][j] * unknowns[j] = rhs[i]``.

    Entries are ParamPolynomials over one alphabet.  The unknowns must be
    names in that alphabet; their order is the pivot order used by
    :func:`linsolve_exact`, so unknowns listed last are the ones left free.
    """

    alphabet: Alphabet
    unknowns: tuple[str, ...]
    coefficients: tuple[tuple[ParamPolynomial, ...], ...]
    rhs: tuple[ParamPolynomial, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(self.rhs):
            raise ValueError("row count of coefficients and rhs differ")
        for row in self.coefficients:
            if len(row) != len(self.unknowns):
                raise ValueError(f"row of length {len(row)} for {len(self.unknowns)} unknowns")
        for u in self.unknowns:
            self.alphabet.index(u)

    @classmethod
    def from_equations(cls, equations: Sequence[ParamPolynomial], unknowns: Sequence[str]) -> LinearSystem:
        """Build from expressions each understood as ``expr = 0``."""
        if not equations:
            raise ValueError("no equations")
        alphabet = equations[0].alphabet
        rows, rhs = [], []
        for eq in equations:
            coeffs, rest = eq.linear_parts(unknowns)
            rows.append(tuple(coeffs[u] for u in unknowns))
            rhs.append(-rest)
        return cls(alphabet, tuple(unknowns), tuple(rows), tuple(rhs))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rhs), len(self.unknowns)

    def equation(self, i: int) -> ParamPolynomial:
        """Row ``i`` as a single expression ``lhs - rhs``."""
        expr = -self.rhs[i]
        for c, u in zip(self.coefficients[i], self.unknowns):
            expr = expr + c * self.alphabet.var(u)
        return expr

    def subs(self, values: Mapping[str, object]) -> LinearSystem:
        return LinearSystem(
            self.alphabet,
            self.unknowns,
            tuple(tuple(c.subs(values) for c in row) for row in self.coefficients),
            tuple(r.subs(values) for r in self.rhs),
        )


class SolveKind(enum.Enum):
    UNIQUE = "Unique"
    AFFINE_FAMILY = "AffineFamily"
    INCONSISTENT = "Inconsistent"


@dataclass(frozen=True)
class SolveOutcome:
    """Result of exact elimination.

    ``assignment`` maps each bound unknown to a polynomial that may involve
    the ``free`` unknowns and any non-unknown parameters.  For an
    inconsistent system ``witness`` holds row multipliers whose combination
    reads ``0 = witness_value`` with ``witness_value`` nonzero.
    """

    kind: SolveKind
    assignment: dict[str, ParamPolynomial] = field(default_factory=dict)
    free: tuple[str, ...] = ()
    witness: dict[int, Fraction] = field(default_factory=dict)
    witness_value: ParamPolynomial | None = None

    @property
    def is_unique(self):
        return self.kind is SolveKind.UNIQUE

    @property
    def is_family(self):
        return self.kind is SolveKind.AFFINE_FAMILY

    @property
    def is_inconsistent(self):
        return self.kind is SolveKind.INCONSISTENT


def _rational_matrix(sys: LinearSystem) -> list[list[Fraction]]:
    out = []
    for i, row in enumerate(sys.coefficients):
        vals = []
        for j, c in enumerate(row):
            if not c.is_constant():
                raise ParametricCoefficientError(
                    f"coefficient of {sys.unknowns[j]!r} in row {i} is {c}; substitute parameters first"
                )
            vals.append(c.constant_value())
        out.append(vals)
    return out


def linsolve_exact(sys: LinearSystem) -> SolveOutcome:
    """Gauss-Jordan elimination over Q, pivoting in unknown order."""
    A = _rational_matrix(sys)
    b = list(sys.rhs)
    n_rows, n_cols = sys.shape
    # track each working row as a combination of the original rows
    combo = [[Fraction(int(i == k)) for k in range(n_rows)] for i in range(n_rows)]

    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        pr = next((i for i in range(r, n_rows) if A[i][col] != 0), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        b[r], b[pr] = b[pr], b[r]
        combo[r], combo[pr] = combo[pr], combo[r]
        piv = A[r][col]
        A[r] = [v / piv for v in A[r]]
        b[r] = b[r] / piv
        combo[r] = [v / piv for v in combo[r]]
        for i in range(n_rows):
            f = A[i][col]
            if i == r or f == 0:
                continue
            A[i] = [vi - f * vr for vi, vr in zip(A[i], A[r])]
            b[i] = b[i] - f * b[r]
            combo[i] = [vi - f * vr for vi, vr in zip(combo[i], combo[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break

    for i in range(r, n_rows):
        if b[i]:
            witness = {k: v for k, v in enumerate(combo[i]) if v}
            return SolveOutcome(SolveKind.INCONSISTENT, witness=witness, witness_value=b[i])

    free = tuple(sys.unknowns[j] for j in range(n_cols) if j not in pivots)
    assignment = {}
    for i, col in enumerate(pivots):
        value = b[i]
        for j in range(n_cols):
            if j != col and A[i][j]:
                value = value - A[i][j] * sys.alphabet.var(sys.unknowns[j])
        assignment[sys.unknowns[col]] = value
    kind = SolveKind.AFFINE_FAMILY if free else SolveKind.UNIQUE
    return SolveOutcome(kind, assignment=assignment, free=free)


def residuals(sys: LinearSystem, assignment: Mapping[str, object]) -> list[ParamPolynomial]:
    """Back-substitute ``assignment`` into every row; exact solutions give zeros."""
    return [sys.equation(i).subs(assignment) for i in range(len(sys.rhs))]


def determinant(matrix: Sequence[Sequence[ParamPolynomial]]) -> ParamPolynomial:
    """Leibniz expansion; fine for the handful of small systems used here."""
    n = len(matrix)
    alphabet = matrix[0][0].alphabet
    total = alphabet.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = alphabet.const(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if not term:
                break
        total = total + term
    return total


@dataclass(frozen=True)
class CramerSolution:
    """Solution ``unknown = numerators[unknown] / determinant`` as polynomial fractions."""

    determinant: ParamPolynomial
    numerators: dict[str, ParamPolynomial]

    def matches(self, unknown: str, numerator: ParamPolynomial, denominator: ParamPolynomial) -> bool:
        """Exact equality with ``numerator/denominator`` via cross-multiplication."""
        return self.numerators[unknown] * denominator == numerator * self.determinant


def cramer_solve(sys: LinearSystem) -> CramerSolution:
    """Solve a square system whose coefficients may depend on parameters."""
    n_rows, n_cols = sys.shape
    if n_rows != n_cols:
        raise ValueError(f"Cramer's rule needs a square system, got {n_rows}x{n_cols}")
    det = determinant(sys.coefficients)
    if not det:
        raise SingularSystemError("determinant vanishes identically")
    nums = {}
    for j, u in enumerate(sys.unknowns):
        replaced = [list(row) for row in sys.coefficients]
        for i in range(n_rows):
            replaced[i][j] = sys.rhs[i]
        nums[u] = determinant(replaced)
    return CramerSolution(det, nums)
