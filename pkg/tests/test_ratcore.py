from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowcheck.errors import (
    AlphabetMismatchError,
    NonLinearError,
    ParametricCoefficientError,
    SingularSystemError,
    UnboundedError,
)
from chowcheck.ratcore import (
    DEFAULT_ALPHABET as A,
    Alphabet,
    BigRational,
    LinearSystem,
    ParamPolynomial,
    SolveKind,
    cramer_solve,
    exact_quotient,
    integer_points_under_quadratic,
    linsolve_exact,
    poly_arith,
    residuals,
)

a, r, x, y, z = A.vars("a r x y z")

SMALL = Alphabet(("p", "q", "s"))


@st.composite
def polys(draw, alphabet=SMALL, max_terms=4, max_exp=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(st.integers(0, max_exp)) for _ in alphabet.names)
        terms[exps] = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 5)))
    return ParamPolynomial(alphabet, terms)


# ----------------------------------------------------------- worked examples

def test_monomial_product():
    assert str(poly_arith(a * r, a * r, "mul")) == "a^2*r^2"


def test_binomial_square():
    assert str((r * a - 2) ** 2) == "a^2*r^2 - 4*a*r + 4"


def test_absorbing_zero():
    assert poly_arith(3 * a - 1, A.zero(), "mul") == 0
    assert str((3 * a - 1) * 0) == "0"


def test_bigrational_is_reduced_and_exact():
    q = BigRational(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)
    assert BigRational(1, 720) * 720 == 1


def test_alphabet_mismatch_names_parameter():
    other = Alphabet(("a", "k"))
    with pytest.raises(AlphabetMismatchError) as err:
        a + other.var("k")
    assert err.value.parameter in {"r", "k"}
    with pytest.raises(AlphabetMismatchError) as err:
        A.var("k")
    assert err.value.parameter == "k"


def test_render_fractions_and_signs():
    assert str(a**5 * z / 120 - x / 2) == "1/120*a^5*z - 1/2*x"
    assert str(-a) == "-a"
    assert str(A.const(Fraction(-7, 3))) == "-7/3"


def test_no_zero_coefficients_stored():
    p = a + r - a
    assert len(p) == 1 and p == r


def test_exact_quotient():
    assert exact_quotient((a * r - 2) ** 3 * a, (a * r - 2) ** 2) == a * (a * r - 2)
    assert exact_quotient(a + 1, a) is None


# ------------------------------------------------------------------ algebra

@settings(max_examples=200, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, s):
    assert (p + q) + s == p + (q + s)
    assert p + q == q + p
    assert (p * q) * s == p * (q * s)
    assert p * q == q * p
    assert p * (q + s) == p * q + p * s
    assert p - p == 0
    assert p * 1 == p


@settings(max_examples=100, deadline=None)
@given(polys(), polys())
def test_evaluation_is_a_homomorphism(p, q):
    point = {"p": Fraction(2, 3), "q": -1, "s": 5}
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)


@settings(max_examples=100, deadline=None)
@given(polys(), polys().filter(bool))
def test_exact_quotient_recovers_factor(p, q):
    assert exact_quotient(p * q, q) == p


# ----------------------------------------------------------------- solving

def test_affine_family_example():
    sys = LinearSystem.from_equations([5 * x - 2 * y - 1, 11 * x - 7 * y + z], ("y", "z", "x"))
    out = linsolve_exact(sys)
    assert out.kind is SolveKind.AFFINE_FAMILY
    assert out.free == ("x",)
    assert out.assignment["y"] == (5 * x - 1) / 2
    assert out.assignment["z"] == (13 * x - 7) / 2
    assert not any(residuals(sys, out.assignment))


def test_unique_identity_system():
    out = linsolve_exact(LinearSystem.from_equations([x - 3], ("x",)))
    assert out.is_unique and out.assignment["x"] == 3


def test_inconsistent_has_witness():
    sys = LinearSystem.from_equations([x + y - 1, 2 * x + 2 * y - 3], ("x", "y"))
    out = linsolve_exact(sys)
    assert out.is_inconsistent
    combo = sum((sys.equation(i) * c for i, c in out.witness.items()), A.zero())
    # the witness rows combine to 0 = witness_value, i.e. lhs - rhs = -witness_value
    assert out.witness_value != 0
    assert combo == -out.witness_value


def test_nonlinear_entry_rejected():
    with pytest.raises(NonLinearError) as err:
        LinearSystem.from_equations([x * y - 1], ("x", "y"))
    assert err.value.unknown in {"x", "y"}


def test_parametric_coefficient_rejected():
    with pytest.raises(ParametricCoefficientError):
        linsolve_exact(LinearSystem.from_equations([a * x - 1], ("x",)))


def test_cramer_parametric_and_singular():
    sol = cramer_solve(LinearSystem.from_equations([a * x + y - 1, x - y], ("x", "y")))
    assert sol.matches("x", A.one(), a + 1)
    with pytest.raises(SingularSystemError):
        cramer_solve(LinearSystem.from_equations([x + y - 1, 2 * x + 2 * y], ("x", "y")))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=4))
def test_solver_residuals_vanish(rows):
    eqs = [c0 * x + c1 * y + c2 * z - c3 for c0, c1, c2, c3 in rows]
    sys = LinearSystem.from_equations(eqs, ("x", "y", "z"))
    out = linsolve_exact(sys)
    if out.is_inconsistent:
        combo = sum((sys.equation(i) * c for i, c in out.witness.items()), A.zero())
        assert out.witness_value != 0 and combo == -out.witness_value
    else:
        assert not any(residuals(sys, out.assignment))


# --------------------------------------------------------------- enumeration

def _quadratic(r_x, r_y):
    return r_x * r_y * a**2 - (3 * r_x + 2 * r_y) * a + 2


@pytest.mark.parametrize("r_x, r_y, floor, expected", [
    (3, 1, 1, [1, 2, 3]),
    (1, 1, 3, [3, 4]),
    (3, 2, 1, [1]),
])
def test_quadratic_examples(r_x, r_y, floor, expected):
    got = integer_points_under_quadratic(_quadratic(r_x, r_y), "a", constraints=[a - floor])
    assert got == expected


@pytest.mark.parametrize("r_x", [1, 3])
@pytest.mark.parametrize("r_y", [1, 2, 3, 4, 5])
def test_quadratic_matches_exhaustive_scan(r_x, r_y):
    q = _quadratic(r_x, r_y)
    brute = [n for n in range(1, 101) if q.evaluate({"a": n}) < 0 and n * r_x >= 3]
    assert integer_points_under_quadratic(q, "a", constraints=[r_x * a - 3]) == brute


def test_unbounded_quadratic():
    with pytest.raises(UnboundedError):
        integer_points_under_quadratic(-(a**2) + 1, "a")
    with pytest.raises(UnboundedError):
        integer_points_under_quadratic(a - 5, "a")
