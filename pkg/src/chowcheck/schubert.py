"""Schubert calculus on the Grassmannian of 2-planes in C^5.

Classes are indexed by partitions in the 2x3 box.  Products use the Pieri
rule; general products go through the two-row Giambelli formula
``s_{a,b} = s_a s_b - s_{a+1} s_{b-1}`` and are cached in a 10x10 table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterator, Mapping

from .charclass import BundleClassData, twist_rank2
from .errors import DegreeError
from .ratcore import DEFAULT_ALPHABET, ParamPolynomial

ROWS, COLS = 2, 3
TOP = ROWS * COLS


@dataclass(frozen=True, order=True)
class Partition:
    first: int
    second: int = 0

    def __post_init__(self):
        if not COLS >= self.first >= self.second >= 0:
            raise ValueError(f"({self.first},{self.second}) is not in the {ROWS}x{COLS} box")

    @property
    def codimension(self) -> int:
        return self.first + self.second

    def complement(self) -> Partition:
        return Partition(COLS - self.second, COLS - self.first)

    def __str__(self):
        return f"s{self.first}{self.second}"


def box_partitions() -> list[Partition]:
    return [Partition(a, b) for a in range(COLS + 1) for b in range(a + 1)]


class SchubertElement:
    """Finite combination of Schubert classes with polynomial coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, object] | None = None):
        clean = {}
        for p, c in (terms or {}).items():
            if not isinstance(c, ParamPolynomial):
                c = DEFAULT_ALPHABET.const(c)
            if c:
                clean[p] = c
        self.terms = clean

    @staticmethod
    def _coerce(other) -> SchubertElement:
        if isinstance(other, SchubertElement):
            return other
        if isinstance(other, (int, Rational, ParamPolynomial)):
            return SchubertElement({Partition(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms[p] + c if p in terms else c
        return SchubertElement(terms)

    __radd__ = __add__

    def __neg__(self):
        return SchubertElement({p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational, ParamPolynomial)):
            return SchubertElement({p: c * other for p, c in self.terms.items()})
        if not isinstance(other, SchubertElement):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int | None:
        """Codimension of a nonzero homogeneous element, else None."""
        ds = {p.codimension for p in self.terms}
        return ds.pop() if len(ds) == 1 else None

    codimension = degree

    def coefficient(self, p: Partition) -> ParamPolynomial:
        return self.terms.get(p, DEFAULT_ALPHABET.zero())

    def items(self) -> Iterator[tuple[Partition, ParamPolynomial]]:
        for p in sorted(self.terms, key=lambda q: (q.codimension, q.first), reverse=True):
            yield p, self.terms[p]

    def __str__(self):
        if not self.terms:
            return "0"
        def term(p, c):
            if c == 1:
                return str(p)
            if c.is_constant():
                return f"{c}*{p}"
            return f"({c})*{p}"

        return " + ".join(term(p, c) for p, c in self.items())

    def __repr__(self):
        return f"SchubertElement({self})"


def sigma(first: int, second: int = 0) -> SchubertElement:
    return SchubertElement({Partition(first, second): 1})


def one() -> SchubertElement:
    return sigma(0, 0)


def pieri(s: SchubertElement, p: int) -> SchubertElement:
    """Multiply by the special class ``sigma_p``: add p boxes, no two in a column."""
    if not 1 <= p <= COLS:
        raise ValueError(f"special Schubert class index must be in 1..{COLS}, got {p}")
    out: dict[Partition, ParamPolynomial] = {}
    for lam, c in s.terms.items():
        for mu in _pieri_terms(lam, p):
            out[mu] = out[mu] + c if mu in out else c
    return SchubertElement(out)


def _pieri_terms(lam: Partition, p: int) -> list[Partition]:
    # horizontal strip: lam1 <= mu1 <= COLS, lam2 <= mu2 <= lam1
    out = []
    for mu2 in range(lam.second, lam.first + 1):
        mu1 = lam.first + p - (mu2 - lam.second)
        if lam.first <= mu1 <= COLS and mu1 >= mu2:
            out.append(Partition(mu1, mu2))
    return out


def _special_times(s: SchubertElement, k: int) -> SchubertElement:
    if k == 0:
        return s
    if k < 0 or k > COLS:
        return SchubertElement()
    return pieri(s, k)


def _giambelli_product(s: SchubertElement, lam: Partition) -> SchubertElement:
    a, b = lam.first, lam.second
    return _special_times(_special_times(s, a), b) - _special_times(_special_times(s, a + 1), b - 1)


@lru_cache(maxsize=None)
def multiplication_table() -> dict[tuple[Partition, Partition], dict[Partition, int]]:
    """Structure constants for every ordered pair of box partitions."""
    table = {}
    for lam in box_partitions():
        for mu in box_partitions():
            prod = _giambelli_product(sigma(lam.first, lam.second), mu)
            table[(lam, mu)] = {p: int(c.constant_value()) for p, c in prod.terms.items()}
    return table


def multiply(s: SchubertElement, t: SchubertElement) -> SchubertElement:
    table = multiplication_table()
    out: dict[Partition, ParamPolynomial] = {}
    for lam, c in s.terms.items():
        for mu, d in t.terms.items():
            cd = c * d
            for nu, k in table[(lam, mu)].items():
                out[nu] = out[nu] + cd * k if nu in out else cd * k
    return SchubertElement(out)


def integrate_pairing(s: SchubertElement) -> ParamPolynomial:
    """Degree of a top-codimension class (coefficient of the point class)."""
    bad = [str(p) for p in s.terms if p.codimension != TOP]
    if bad:
        raise DegreeError(f"pairing needs codimension {TOP}, found {bad}")
    return s.coefficient(Partition(COLS, COLS))


def dual_subbundle() -> BundleClassData:
    """Chern data of the dual tautological subbundle: ``c = 1 + s1 + s11``."""
    return BundleClassData(2, sigma(1), sigma(1, 1))


@dataclass(frozen=True)
class DegreeForms:
    x: ParamPolynomial
    y: ParamPolynomial
    z: ParamPolynomial

    def at(self, **values) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(f.evaluate(values) for f in (self.x, self.y, self.z))


def quintic_degree_forms() -> DegreeForms:
    """Intersection numbers of a finite cover of ``c*s11 + dv*s2`` by its degree ``m``.

    The bundle is the dual subbundle twisted by the hyperplane class, so
    ``c2 = s11 + 2*s1^2``; the three forms are ``H^4``, ``c2.H^2`` and ``c2^2``.
    """
    m, c, dv = DEFAULT_ALPHABET.vars("m c dv")
    H = sigma(1)
    bundle = twist_rank2(dual_subbundle(), H)
    cycle = sigma(1, 1) * c + sigma(2) * dv
    c2 = bundle.c2
    return DegreeForms(
        x=integrate_pairing(H ** 4 * cycle) * m,
        y=integrate_pairing(c2 * H ** 2 * cycle) * m,
        z=integrate_pairing(c2 * c2 * cycle) * m,
    )


def solve_mcd(x: int, y: int, z: int, forms: DegreeForms | None = None) -> list[tuple[int, int, int]]:
    """Every positive integer triple ``(m, c, dv)`` realising ``(x, y, z)``.

    An empty list means the values are inconsistent with any cover.
    """
    values = [Fraction(v) for v in (x, y, z)]
    if any(v.denominator != 1 or v <= 0 for v in values):
        return []
    x, y, z = (int(v) for v in values)
    forms = forms or quintic_degree_forms()
    zero ={"m": 0, "c": 0, "dv": 0}

    def lin(form):
        # form = m * (alpha*c + beta*dv)
        base = form.coeff("m", 1)
        return (
            base.evaluate({**zero, "c": 1}) - base.evaluate(zero),
            base.evaluate({**zero, "dv": 1}) - base.evaluate(zero),
        )

    (ax, bx), (ay, by) = lin(forms.x), lin(forms.y)
    det = ax * by - bx * ay
    found = []
    for m in range(1, x + 1):
        if x % m or y % m or z % m:
            continue
        X, Y = Fraction(x, m), Fraction(y, m)
        if det:
            candidates = [((X * by - bx * Y) / det, (ax * Y - ay * X) / det)]
        else:
            candidates = [(cc, dd) for cc in range(1, x + 1) for dd in range(1, x + 1)]
        for cc, dd in candidates:
            if cc <= 0 or dd <= 0 or Fraction(cc).denominator != 1 or Fraction(dd).denominator != 1:
                continue
            point = {"m": m, "c": int(cc), "dv": int(dd)}
            if forms.at(**point) == (x, y, z):
                found.append((m, int(cc), int(dd)))
    return found
