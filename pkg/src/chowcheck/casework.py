"""Case analysis: the quadric-bundle system, the two Bogomolov expansions,
the integer case split and the Riemann-Roch linear systems."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chowring import Ring, RingPresentation, make_ring
from .errors import ChowCheckError, SingularSystemError
from .projbundle import ProjBundleRing, generic_setup, hrr_chi_poly
from .ratcore import (
    DEFAULT_ALPHABET,
    CramerSolution,
    LinearSystem,
    ParamPolynomial,
    SolveOutcome,
    cramer_solve,
    determinant,
    exact_quotient,
    integer_points_under_quadratic,
    linsolve_exact,
)

A = DEFAULT_ALPHABET
INDEX_CANDIDATES = (1, 3)
TARGET_INDICES = tuple(range(1, 6))


@dataclass
class CaseRecord:
    params: dict[str, int]
    derived: dict[str, object] = field(default_factory=dict)
    verdict: str = "admissible"
    reason: str = ""

    @property
    def admissible(self) -> bool:
        return self.verdict == "admissible"


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: object
    rhs: object

    @property
    def difference(self):
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return not self.difference


# ---------------------------------------------------------------- quadric case

@dataclass(frozen=True)
class SpanCoefficient:
    numerator: ParamPolynomial
    denominator: ParamPolynomial

    def reduced(self) -> ParamPolynomial | None:
        return exact_quotient(self.numerator, self.denominator)

    def __str__(self):
        q = self.reduced()
        return str(q) if q is not None else f"({self.numerator})/({self.denominator})"


@dataclass(frozen=True)
class QuadricSystem:
    """Equations (as ``expr = 0``) from the three pairings, in unknowns x, y, z.

    ``equations[0]``: (a xi - H)^3 xi^2 = 2; ``equations[1]``: (a xi - H)^4 H = 0;
    ``equations[2]``: (a xi - H)^4 xi = 0.
    """

    equations: tuple[ParamPolynomial, ...]
    system: LinearSystem

    def span_coefficients(self, target: ParamPolynomial) -> tuple[SpanCoefficient, ...] | None:
        """Coefficients c with ``target = sum c_i * equations[i]``, or None."""
        return span_coefficients(self.equations, target, ("x", "y", "z"))


def _coefficient_vector(eq: ParamPolynomial, unknowns) -> list[ParamPolynomial]:
    coeffs, rest = eq.linear_parts(unknowns)
    return [coeffs[u] for u in unknowns] + [rest]


def span_coefficients(basis, target, unknowns) -> tuple[SpanCoefficient, ...] | None:
    """Express ``target`` in the span of ``basis`` over the parameter fraction field.

    Coefficients come from Cramer's rule on the unknowns' columns; the
    constant column is then checked by cross-multiplication.
    """
    vecs = [_coefficient_vector(b, unknowns) for b in basis]
    tv = _coefficient_vector(target, unknowns)
    n = len(unknowns)
    # columns of M are the basis vectors restricted to the unknown coordinates
    M = [[vecs[j][i] for j in range(len(basis))] for i in range(n)]
    det = determinant(M)
    if not det:
        raise SingularSystemError("basis equations are dependent")
    nums = []
    for j in range(len(basis)):
        Mj = [row[:] for row in M]
        for i in range(n):
            Mj[i][j] = tv[i]
        nums.append(determinant(Mj))
    const = sum((nums[j] * vecs[j][n] for j in range(len(basis))), A.zero())
    if const != tv[n] * det:
        return None
    return tuple(SpanCoefficient(nj, det) for nj in nums)


def quadric_derive_system(pb: ProjBundleRing | None = None) -> QuadricSystem:
    pb = pb or generic_setup()
    ring = pb.ring
    xi, H = pb.xi, pb.pi(pb.base.gen("H"))
    D = xi * ring.param("a") - H
    eqs = (
        ring.integrate(D ** 3 * xi * xi) - 2,
        ring.integrate(D ** 4 * H),
        ring.integrate(D ** 4 * xi),
    )
    return QuadricSystem(eqs, LinearSystem.from_equations(list(eqs), ("x", "y", "z")))


def quadric_symbolic_solution(qs: QuadricSystem | None = None) -> CramerSolution:
    qs = qs or quadric_derive_system()
    return cramer_solve(qs.system)


def quadric_solve(a: int, r: int, qs: QuadricSystem | None = None) -> tuple[Fraction, Fraction, Fraction]:
    if r * a == 2:
        raise SingularSystemError(f"system is singular at r*a = 2 (a={a}, r={r})")
    qs = qs or quadric_derive_system()
    outcome = linsolve_exact(qs.system.subs({"a": a, "r": r}))
    if not outcome.is_unique:
        raise SingularSystemError(f"system at a={a}, r={r} is {outcome.kind.value}")
    return tuple(outcome.assignment[k].constant_value() for k in ("x", "y", "z"))


def _quadric_a_range(r: int):
    """a = 1, 2, ... until x = 4a/(ra-2)^2 drops below 1 for good."""
    a = 1
    while True:
        yield a
        if r * a > 2 and (r * a - 2) ** 2 > 4 * a:
            return
        a += 1


def quadric_classify(indices=INDEX_CANDIDATES) -> list[CaseRecord]:
    qs = quadric_derive_system()
    records = []
    for r in indices:
        for a in _quadric_a_range(r):
            rec = CaseRecord({"a": a, "r": r})
            records.append(rec)
            if a * r < 3:
                rec.verdict, rec.reason = "rejected", "a*r < 3"
                continue
            x, y, z = quadric_solve(a, r, qs)
            rec.derived = {"x": x, "y": y, "z": z}
            for name, value in (("x", x), ("y", y), ("z", z)):
                if value.denominator != 1:
                    rec.verdict, rec.reason = "rejected", f"{name} = {value} is not an integer"
                    break
    return records


# ------------------------------------------------------- Bogomolov expansions

def contracted_threefold_ring() -> Ring:
    """A threefold on which the second contraction is constant: only xi, with xi^3 = w."""
    return make_ring(RingPresentation(
        generators=(("xi", 1),),
        top_degree=3,
        integration_table={"xi^3": A.var("w")},
    ))


def bound_expand(pb: ProjBundleRing | None = None) -> list[IdentityReport]:
    pb = pb or generic_setup()
    F = contracted_threefold_ring()
    a, r = A.var("a"), A.var("r")
    xi_f = F.gen("xi")
    restrict = pb.ring.hom(F, {"xi": xi_f, "H": xi_f * a, "e": xi_f * xi_f * (r * a - 1)})
    xi, H, e = pb.xi, pb.pi(pb.base.gen("H")), pb.pi(pb.base.gen("e"))
    delta = H * H * r ** 2 - e * 4
    target = xi_f ** 3 * (a * (a * r - 2) ** 2)
    return [
        IdentityReport("discriminant", restrict(delta * H), target),
        IdentityReport("square", restrict((xi * 2 - H * r) ** 2 * H), target),
    ]


def scroll_ei_ring() -> Ring:
    """Projectivised normal bundle of a line in the fourfold: zeta over h."""
    d, rY = A.var("d"), A.var("rY")
    return make_ring(RingPresentation(
        generators=(("zeta", 1), ("h", 1)),
        top_degree=3,
        relations={"h^2": {}, "zeta^3": {"zeta^2*h": d * rY - 2}},
        integration_table={"zeta^2*h": 1},
    ))


def scroll_quadratic() -> ParamPolynomial:
    a, r, rY = A.vars("a r rY")
    return r * rY * a**2 - (3 * r + 2 * rY) * a + 2


def scroll_factored() -> ParamPolynomial:
    a, r, d = A.vars("a r d")
    return (r * a - 2) * (d * scroll_quadratic() + a * (r * a - 2))


def scroll_expand_ei() -> list[IdentityReport]:
    ring = scroll_ei_ring()
    a, r, rY, d = A.vars("a r rY d")
    zeta, h = ring.gens("zeta h")
    # restrictions: tautological class zeta + h, pulled-back hyperplane d*h
    xi_e = zeta + h
    hy = h * d
    pi_h = xi_e * a - hy
    expanded = ring.integrate((zeta * a + h * (a - d)) * (zeta * (a * r - 2) + h * (a * r - d * r - 2)) ** 2)
    from_bogomolov = ring.integrate(pi_h * (xi_e * 2 - pi_h * r) ** 2)
    middle = (r * a - 2) * ((d * r * rY + r) * a**2 - (3 * d * r + 2 * d * rY + 2) * a + 2 * d)
    return [
        IdentityReport("restriction", from_bogomolov, expanded),
        IdentityReport("expanded", expanded, middle),
        IdentityReport("factored", middle, scroll_factored()),
    ]


def prop_ineq_points(r_x: int, r_y: int) -> list[int]:
    a, r = A.vars("a r")
    q = scroll_quadratic().subs({"r": r_x, "rY": r_y})
    return integer_points_under_quadratic(q, "a", constraints=[(r * a - 3).subs({"r": r_x})])


def prop_ineq_cases(indices=INDEX_CANDIDATES, target_indices=TARGET_INDICES) -> list[CaseRecord]:
    records = []
    for r_x in indices:
        for r_y in target_indices:
            for a in prop_ineq_points(r_x, r_y):
                q = scroll_quadratic().evaluate({"a": a, "r": r_x, "rY": r_y})
                records.append(CaseRecord({"a": a, "rX": r_x, "rY": r_y}, {"quadratic": q}))
    return records


def trichotomy_case(a: int, r_x: int, r_y: int) -> int | None:
    """Which of the three listed alternatives (1, 2, 3) a triple satisfies."""
    if a * r_x == 3 and r_y >= 2:
        return 1
    if a <= 3 and r_x == 3 and r_y == 1:
        return 2
    if a <= 4 and r_x == 1 and r_y == 1:
        return 3
    return None


def trichotomy_points(indices=INDEX_CANDIDATES, target_indices=TARGET_INDICES) -> set[tuple[int, int, int]]:
    """Grid points (a, rX, rY) with a*rX >= 3 meeting one of the alternatives."""
    out = set()
    for r_x in indices:
        for r_y in target_indices:
            for a in range(1, 5):
                if a * r_x >= 3 and trichotomy_case(a, r_x, r_y):
                    out.add((a, r_x, r_y))
    return out


def closed_form_bound_holds(a: int, r_x: int, r_y: int) -> bool:
    """``a < (3rX + 2rY + sqrt(9rX^2 + 4rXrY + 4rY^2)) / (2rXrY)`` decided exactly.

    Equivalent to ``2rXrY a - 3rX - 2rY < sqrt(D)``: true when the left side is
    negative, otherwise compare squares.
    """
    lhs = 2 * r_x * r_y * a - 3 * r_x - 2 * r_y
    disc = 9 * r_x**2 + 4 * r_x * r_y + 4 * r_y**2
    return lhs < 0 or lhs * lhs < disc


# -------------------------------------------------------- Riemann-Roch case

def hilbert_targets(dimension: int = 4) -> tuple[Fraction, ...]:
    """Coefficients of binom(m + n, n), highest power of m first (m^{n+1} included)."""
    m = A.var("m")
    p = A.one()
    for i in range(1, dimension + 1):
        p = p * (m + i)
    p = p / math.factorial(dimension)
    return tuple(p.coeff("m", k).constant_value() for k in range(dimension + 1, 0, -1))


def hrr_case_system(a: int, r: int, pb: ProjBundleRing | None = None) -> LinearSystem:
    """``f_i = target_i``, unknowns ordered so that x is the one left free."""
    pb = pb or generic_setup()
    chi = hrr_chi_poly(pb).subs({"a": a, "r": r})
    eqs = [fi - t for fi, t in zip(chi.f, hilbert_targets())]
    return LinearSystem.from_equations(eqs, ("y", "z", "u", "v", "x"))


def hrr_case_solve(a: int, r: int, pb: ProjBundleRing | None = None) -> SolveOutcome:
    return linsolve_exact(hrr_case_system(a, r, pb))


def prop_comp_candidates(records: list[CaseRecord] | None = None) -> set[tuple[int, int, int]]:
    """The admissible (a, rX, rY) with a*rX > 3."""
    records = records if records is not None else prop_ineq_cases()
    return {
        (rec.params["a"], rec.params["rX"], rec.params["rY"])
        for rec in records
        if rec.params["a"] * rec.params["rX"] > 3
    }


def anticanonical_degree(a: int, r_x: int, r_y: int) -> Fraction:
    """Degree of the pulled-back anticanonical class on a minimal lift (xi.C = 1, H.C = 3/rX)."""
    return r_y * (a - Fraction(3, r_x))


def ensure(condition: bool, message: str):
    if not condition:
        raise ChowCheckError(message)
