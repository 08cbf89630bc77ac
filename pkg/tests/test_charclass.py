from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowcheck.charclass import (
    TODD_LINE_COEFFS,
    BundleClassData,
    chern_character_line,
    discriminant,
    todd_fourfold,
    todd_line,
    twist_rank2,
)
from chowcheck.chowring import RingPresentation, make_ring
from chowcheck.errors import RankError
from chowcheck.projbundle import generic_setup, mukai_bundle, relative_canonical
from chowcheck.ratcore import DEFAULT_ALPHABET as A

PB = generic_setup()
W, XI = PB.ring, PB.xi
H = PB.pi(PB.base.gen("H"))
a, r, m = A.vars("a r m")


def test_chern_character_trivial_cases():
    assert chern_character_line(W.zero()) == W.one()
    P1 = make_ring(RingPresentation(generators=(("h", 1),), top_degree=1,
                                    relations={"h^2": {}}, integration_table={"h": 1}))
    h = P1.gen("h")
    assert chern_character_line(h * m) == P1.one() + h * m


def test_chern_character_top_coefficient_is_f1():
    D = (XI * a - H) * m
    ch = chern_character_line(D, trunc=5)
    f1 = (a**5 * r**4 - 5 * a**4 * r**3 + 10 * a**3 * r**2 - 10 * a**2 * r + 5 * a) / 120 * A.var("x") \
        - (3 * a**5 * r**2 - 10 * a**4 * r + 10 * a**3) / 120 * A.var("y") + a**5 / 120 * A.var("z")
    assert W.integrate(ch.homogeneous_part(5)) == f1 * m**5


@settings(max_examples=25, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_exponential_property(p, q, s, t):
    D1, D2 = XI * p + H * q, XI * s + H * t
    assert chern_character_line(D1 + D2) == chern_character_line(D1) * chern_character_line(D2)


def test_todd_line_coefficients():
    assert TODD_LINE_COEFFS[:5] == (1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720))
    assert todd_line(W.zero()) == W.one()
    x = relative_canonical(PB)
    four_term = W.one() + x / 2 + x * x / 12 - x**4 / 720
    assert todd_line(x, trunc=4) == four_term
    assert todd_line(x) == four_term  # the x^3 and x^5 terms vanish


def test_todd_fourfold_parts():
    X = PB.base
    HX, t, pt = X.gens("H t pt")
    td = todd_fourfold(r, HX, t, pt)
    assert td.homogeneous_part(0) == X.one()
    assert td.homogeneous_part(2) == (HX * HX * r**2 + t) / 12
    assert X.integrate(td.homogeneous_part(4)) == 1


def test_twist_examples():
    b = mukai_bundle(PB.base)
    L = PB.base.gen("H")
    assert twist_rank2(b, PB.base.zero()) == b
    assert twist_rank2(twist_rank2(b, L), -L) == b
    with pytest.raises(RankError):
        twist_rank2(BundleClassData(3, b.c1, b.c2), L)


@settings(max_examples=25, deadline=None)
@given(st.integers(-4, 4))
def test_discriminant_twist_invariant(k):
    b = mukai_bundle(PB.base)
    L = PB.base.gen("H") * k
    assert discriminant(twist_rank2(b, L)) == discriminant(b)


def test_discriminant_examples():
    X = PB.base
    b = mukai_bundle(X)
    HX, e = X.gens("H e")
    assert discriminant(b) == HX * HX * r**2 - e * 4
    degenerate = BundleClassData(2, HX * 2, HX * HX)
    assert not discriminant(degenerate)
    assert PB.pi(discriminant(b)) == (XI * 2 - H * r) ** 2
