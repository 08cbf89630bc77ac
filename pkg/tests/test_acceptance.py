"""One test per acceptance criterion; each records a PASS/FAIL line.

All comparisons are exact (tolerance: exact zero / exact equality).
"""

import itertools
import random

import pytest

from conftest import ACCEPTANCE_LINES

from chowcheck import betti as bt
from chowcheck import casework as cw
from chowcheck import reference as P
from chowcheck import schubert as sb
from chowcheck.charclass import discriminant
from chowcheck.chowring import normal_form
from chowcheck.cli import render_report, run_suite
from chowcheck.projbundle import generic_setup, hrr_chi_poly, mukai_bundle, pushforward
from chowcheck.ratcore import DEFAULT_ALPHABET as A
from chowcheck.ratcore import LinearSystem, linsolve_exact, residuals


def record(n, title, parts):
    """``parts``: list of (label, bool).  Prints and asserts."""
    ok = all(v for _, v in parts)
    failed = [label for label, v in parts if not v]
    line = f"criterion {n} [{title}]: {'PASS' if ok else 'FAIL'}"
    if failed:
        line += " -- failed: " + "; ".join(failed)
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert ok, line


def test_criterion_1_discriminant_identity():
    pb = generic_setup()
    H, r = pb.pi(pb.base.gen("H")), A.var("r")
    diff = normal_form(pb.pi(discriminant(mukai_bundle(pb.base))) - (pb.xi * 2 - H * r) ** 2)
    record(1, "Grothendieck/discriminant identity", [("normal form of difference is 0", not diff)])


def test_criterion_2_quadric_case():
    qs = cw.quadric_derive_system()
    sol = cw.quadric_symbolic_solution(qs)
    records = cw.quadric_classify()
    by = {(rec.params["a"], rec.params["r"]): rec for rec in records}
    admissible = [rec for rec in records if rec.admissible]
    ys = {by[(3, 1)].derived["y"], by[(4, 1)].derived["y"]}
    record(2, "quadric case", [
        ("x = Q1", sol.matches("x", *P.QUADRIC_SOLUTION["x"])),
        ("y = Q2", sol.matches("y", *P.QUADRIC_SOLUTION["y"])),
        ("z = Q3", sol.matches("z", *P.QUADRIC_SOLUTION["z"])),
        ("(1,3) -> (4,10,26)", cw.quadric_solve(1, 3, qs) == (4, 10, 26)),
        ("x = 4 at (1,3)", by[(1, 3)].derived["x"] == P.QUADRIC_ANSWER["x"]),
        ("a = 3, 4 rejected", by[(3, 1)].verdict == by[(4, 1)].verdict == "rejected"),
        ("y value set {10/3, 5/4}", ys == set(P.QUADRIC_REJECTED_Y)),
        ("exactly one admissible record", len(admissible) == 1
         and admissible[0].params == {"a": 1, "r": 3}),
    ])


def test_criterion_3_reference_system_equivalence():
    qs = cw.quadric_derive_system()
    a, r = A.vars("a r")
    in_span = all(qs.span_coefficients(p) is not None for p in P.QUADRIC_SYSTEM)
    reference3 = P.QUADRIC_SYSTEM[2]
    # stated identity: reference3 = derived3 - (r/a) * derived2, cleared of the
    # denominator a.  The pairings behind derived2/derived3 are tried both ways.
    pairing_h, pairing_xi = qs.equations[1], qs.equations[2]
    literal = any(
        a * reference3 == a * third - r * second
        for second, third in ((pairing_h, pairing_xi), (pairing_xi, pairing_h))
    )
    record(3, "reference system equivalence", [
        ("every reference equation in the rational span", in_span),
        ("reference3 = derived3 - (r/a) derived2 identically", literal),
    ])


def test_criterion_4_bound_identity():
    record(4, "bound identity", [
        (f"{rep.name} form = a(ar-2)^2 xi^3", rep.lhs == rep.lhs.ring.gen("xi") ** 3 * P.BOUND_FACTOR)
        for rep in cw.bound_expand()
    ])


def test_criterion_5_scroll_inequality():
    chain = {rep.name: rep for rep in cw.scroll_expand_ei()}
    admissible = {(rec.params["a"], rec.params["rX"], rec.params["rY"]) for rec in cw.prop_ineq_cases()}
    listed = cw.trichotomy_points()
    record(5, "scroll inequality and case split", [
        ("restriction", chain["restriction"].holds),
        ("expansion = factored form", chain["expanded"].lhs == P.SCROLL_FACTORED),
        ("admissible set equals the three listed cases", admissible == listed),
    ])


def test_criterion_6_betti():
    rel = bt.derive_scroll_relations()
    B = bt.BETTI_ALPHABET
    record(6, "Betti derivation", [
        ("sum b1(B_i) = 0", rel.relations["sB1"] == 0 and rel.each_b1_zero),
        ("b3(X) = b3(Y)", rel.relations["bX3"] == B.var("bY3")),
        ("b4(X) = b4(Y) + m", rel.relations["bX4"] == B.var("bY4") + B.var("m")),
        ("exactly these three", set(rel.relations) == {"sB1", "bX3", "bX4"}),
    ])


def test_criterion_7_hrr():
    chi = hrr_chi_poly(generic_setup())
    fam = cw.hrr_case_solve(1, 3)
    sys13 = cw.hrr_case_system(1, 3)
    parts = [(f"f{i} = reference", chi.coefficient(i) == P.CHI_COEFFICIENTS[i - 1]) for i in range(1, 6)]
    parts += [
        ("constant term 1", chi.constant == 1),
        ("(1,3) affine family", fam.is_family and fam.assignment == P.HRR_FAMILY),
        ("fifth equation residual 0", fam.is_family and residuals(sys13, fam.assignment)[4] == 0),
        ("(3,1) inconsistent", cw.hrr_case_solve(3, 1).is_inconsistent),
    ]
    record(7, "Riemann-Roch systems", parts)


def test_criterion_8_cross_route():
    forms = sb.quintic_degree_forms()
    fam = cw.hrr_case_solve(1, 3)
    at5 = tuple(fam.assignment[k].evaluate({"x": 5}) for k in "yzuv")
    record(8, "cross-route consistency", [
        ("Schubert (5,12,29)", forms.at(m=1, c=1, dv=1) == (5, 12, 29)),
        ("HRR at x=5 gives (12,29,22,53)", at5 == (12, 29, 22, 53)),
        ("routes agree on (y,z)", at5[:2] == forms.at(m=1, c=1, dv=1)[1:]),
        ("sigma1^6 = 5", sb.integrate_pairing(sb.sigma(1) ** 6) == P.QUINTIC_DEGREE),
        ("solve_mcd(5,12,29) = (1,1,1)", sb.solve_mcd(5, 12, 29) == [P.MCD_ANSWER]),
    ])


def test_criterion_9_property_suites():
    rng = random.Random(0)
    pb = generic_setup()
    W, X = pb.ring, pb.base
    gens_w = [pb.xi, pb.pi(X.gen("H")), pb.pi(X.gen("e")), pb.pi(X.gen("t"))]
    gens_x = list(X.gens("H e t"))
    a, r = A.vars("a r")

    def rand_class(pool, max_deg=3):
        total = pool[0].ring.zero()
        for _ in range(3):
            mono = pool[0].ring.one()
            for _ in range(rng.randint(0, max_deg)):
                mono = mono * rng.choice(pool)
            total = total + mono * rng.randint(-3, 3) * rng.choice([A.one(), a, r])
        return total

    axioms = idem = proj = True
    for _ in range(30):
        p, q, s = (rand_class(gens_w) for _ in range(3))
        axioms &= p * q == q * p and (p * q) * s == p * (q * s) and p * (q + s) == p * q + p * s
        idem &= normal_form(normal_form(p)) == p
        alpha = rand_class(gens_x, 2)
        proj &= pushforward(pb, pb.pi(alpha) * p) == alpha * pushforward(pb, p)

    parts_box = sb.box_partitions()
    duality = all(
        sb.integrate_pairing(sb.sigma(l.first, l.second) * sb.sigma(m.first, m.second))
        == (1 if m == l.complement() else 0)
        for l, m in itertools.product(parts_box, parts_box) if l.codimension + m.codimension == sb.TOP
    )
    pieri = all(
        sb.pieri(sb.sigma(l.first, l.second), k) == sb.sigma(l.first, l.second) * sb.sigma(k)
        for l in parts_box for k in (1, 2, 3)
    )
    betti_dual = all(
        bt.projbundle_betti(bt.fano_fourfold("bX"), f).satisfies_duality() for f in (1, 2, 3)
    ) and bt.blowup_betti(bt.fano_fourfold("bY"), [(bt.curves("m"), 3)]).satisfies_duality()

    x, y, z = A.vars("x y z")
    solver = True
    for _ in range(50):
        eqs = [sum((rng.randint(-4, 4) * v for v in (x, y, z)), A.zero()) - rng.randint(-4, 4)
               for _ in range(rng.randint(1, 4))]
        sys = LinearSystem.from_equations(eqs, ("x", "y", "z"))
        out = linsolve_exact(sys)
        if not out.is_inconsistent:
            solver &= not any(residuals(sys, out.assignment))

    deterministic = render_report(run_suite(["all"]), "json") == render_report(run_suite(["all"]), "json")
    record(9, "property suites", [
        ("ring axioms", axioms), ("normal-form idempotence", idem), ("projection formula", proj),
        ("Schubert duality (exhaustive)", duality), ("Pieri = table (exhaustive)", pieri),
        ("Poincare duality preserved", betti_dual), ("solver residuals zero", solver),
        ("byte-identical reports", deterministic),
    ])
