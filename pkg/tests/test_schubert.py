import itertools
from functools import lru_cache

import pytest
import sympy as sp

from chowcheck import reference as P
from chowcheck import schubert as sb
from chowcheck.errors import DegreeError
from chowcheck.ratcore import DEFAULT_ALPHABET as A
from chowcheck.schubert import Partition, sigma

PARTS = sb.box_partitions()
X1, X2 = sp.symbols("x1 x2")


@lru_cache(maxsize=None)
def schur(p, q):
    """Two-variable Schur polynomial via the bialternant."""
    num = sp.Matrix([[X1 ** (p + 1), X2 ** (p + 1)], [X1**q, X2**q]]).det()
    return sp.expand(sp.cancel(num / (X1 - X2)))


def schur_product_in_box(lam, mu):
    """Expand s_lam s_mu in the Schur basis, keep partitions inside the box."""
    rest = sp.Poly(schur(lam.first, lam.second) * schur(mu.first, mu.second), X1, X2)
    out = {}
    while not rest.is_zero:
        (p, q), c = max(rest.terms())
        out[(p, q)] = int(c)
        rest = rest - sp.Poly(c * schur(p, q), X1, X2)
    return {Partition(p, q): c for (p, q), c in out.items() if p <= sb.COLS}


def test_box_has_ten_partitions():
    assert len(PARTS) == 10
    with pytest.raises(ValueError):
        Partition(4, 0)
    with pytest.raises(ValueError):
        Partition(1, 2)


@pytest.mark.parametrize("lam, mu", list(itertools.product(PARTS, PARTS)))
def test_table_matches_schur_oracle(lam, mu):
    assert sb.multiplication_table()[(lam, mu)] == schur_product_in_box(lam, mu)


@pytest.mark.parametrize("lam, p", [(lam, p) for lam in PARTS for p in (1, 2, 3)])
def test_pieri_matches_table(lam, p):
    s = sigma(lam.first, lam.second)
    assert sb.pieri(s, p) == s * sigma(p)


@pytest.mark.parametrize("lam, mu", [(l, m) for l in PARTS for m in PARTS
                                     if l.codimension + m.codimension == sb.TOP])
def test_duality_pairing(lam, mu):
    value = sb.integrate_pairing(sigma(lam.first, lam.second) * sigma(mu.first, mu.second))
    assert value == (1 if mu == lam.complement() else 0)


def test_commutative_and_in_box():
    for lam, mu in itertools.product(PARTS, PARTS):
        prod = sigma(lam.first, lam.second) * sigma(mu.first, mu.second)
        assert prod == sigma(mu.first, mu.second) * sigma(lam.first, lam.second)
        for nu in prod.terms:
            assert nu.codimension == lam.codimension + mu.codimension


def test_pieri_examples():
    s1 = sigma(1)
    assert s1 * s1 == sigma(2) + sigma(1, 1)
    assert not sb.pieri(sigma(3, 3), 1)
    assert s1**4 == sigma(3, 1) * 3 + sigma(2, 2) * 2
    with pytest.raises(ValueError):
        sb.pieri(s1, 4)
    with pytest.raises(ValueError):
        sb.pieri(s1, 0)


def test_multiply_examples():
    assert sigma(1, 1) * sigma(1, 1) == sigma(2, 2)
    assert sb.one() * sigma(2, 1) == sigma(2, 1)
    assert sigma(1) ** 6 == sigma(3, 3) * 5
    assert sb.integrate_pairing(sigma(1) ** 6) == P.QUINTIC_DEGREE


def test_pairing_examples():
    assert sb.integrate_pairing(sigma(3, 1) * sigma(2)) == 1
    assert sb.integrate_pairing(sigma(3, 1) * sigma(1, 1)) == 0
    assert sb.integrate_pairing(sb.SchubertElement()) == 0
    with pytest.raises(DegreeError):
        sb.integrate_pairing(sigma(2, 1))


def test_twisted_bundle_chern_classes():
    from chowcheck.charclass import twist_rank2
    b = twist_rank2(sb.dual_subbundle(), sigma(1))
    assert b.c1 == sigma(1) * 3
    assert b.c2 == sigma(1, 1) + sigma(1) * sigma(1) * 2


def test_degree_forms():
    forms = sb.quintic_degree_forms()
    m, c, dv = A.vars("m c dv")
    assert forms.x == m * (2 * c + 3 * dv)
    assert forms.y == m * (5 * c + 7 * dv)
    assert forms.z == m * (13 * c + 16 * dv)
    assert forms.at(m=1, c=1, dv=1) == (5, 12, 29)
    assert forms.at(m=0, c=1, dv=1) == (0, 0, 0)
    # the reference split agrees on the totals only
    assert tuple(sum(P.DEGREE_SPLIT[k]) for k in "xyz") == (5, 12, 29)


def _brute_mcd(x, y, z, bound=10):
    forms = sb.quintic_degree_forms()
    return sorted((m, c, d) for m in range(1, bound + 1) for c in range(1, bound + 1)
                  for d in range(1, bound + 1) if forms.at(m=m, c=c, dv=d) == (x, y, z))


@pytest.mark.parametrize("target", [(5, 12, 29), (10, 24, 58), (1, 1, 1), (7, 17, 42)])
def test_solve_mcd_matches_brute_force(target):
    assert sorted(sb.solve_mcd(*target)) == _brute_mcd(*target)


def test_solve_mcd_examples():
    assert sb.solve_mcd(5, 12, 29) == [P.MCD_ANSWER]
    assert sb.solve_mcd(1, 1, 1) == []
    assert sb.solve_mcd(10, 24, 58) == [(1, 2, 2), (2, 1, 1)]
