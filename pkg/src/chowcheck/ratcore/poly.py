"""Multivariate polynomials with exact rational coefficients.

Every polynomial lives over a fixed, ordered parameter alphabet.  Terms are
kept in a dict keyed by exponent tuples; zero coefficients are never stored,
so structural equality is mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from ..errors import AlphabetMismatchError, NonLinearError

Exponents = tuple[int, ...]


class Alphabet:
    """An ordered tuple of parameter names.

    The order fixes the graded-lexicographic monomial order used for
    rendering, so two alphabets with the same names in a different order
    are considered different.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter names in {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({self.names!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetMismatchError(name, f"unknown parameter {name!r} for {self!r}") from None

    def var(self, name: str) -> ParamPolynomial:
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return ParamPolynomial(self, {tuple(exps): Fraction(1)})

    def vars(self, names: str) -> tuple[ParamPolynomial, ...]:
        return tuple(self.var(n) for n in names.split())

    def const(self, value) -> ParamPolynomial:
        return ParamPolynomial(self, {self.unit: Fraction(value)})

    @property
    def unit(self) -> Exponents:
        return (0,) * len(self.names)

    def zero(self) -> ParamPolynomial:
        return ParamPolynomial(self)

    def one(self) -> ParamPolynomial:
        return self.const(1)


# a, r, rY, d (scroll fibres), m, c, dv (Schubert weights), intersection
# numbers x..v, w = xi^3 on a contracted threefold.
DEFAULT_ALPHABET = Alphabet(("a", "r", "rY", "d", "m", "c", "dv", "x", "y", "z", "u", "v", "w"))


def _grlex_key(exps: Exponents):
    return (sum(exps), exps)


def _mismatch(left: Alphabet, right: Alphabet) -> str:
    for n in left.names:
        if n not in right:
            return n
    for n in right.names:
        if n not in left:
            return n
    for n, m in zip(left.names, right.names):
        if n != m:
            return n
    return left.names[0] if left.names else "?"


class ParamPolynomial:
    """Immutable polynomial in the parameters of an :class:`Alphabet`."""

    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Exponents, object] | None = None):
        self.alphabet = alphabet
        clean = {}
        if terms:
            n = len(alphabet)
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent tuple {exps} does not fit {alphabet!r}")
                c = Fraction(c)
                if c:
                    clean[tuple(exps)] = c
        self._terms = clean
        self._hash = None

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> ParamPolynomial:
        if isinstance(other, ParamPolynomial):
            if other.alphabet != self.alphabet:
                raise AlphabetMismatchError(_mismatch(self.alphabet, other.alphabet))
            return other
        if isinstance(other, (int, Rational)):
            return self.alphabet.const(other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return ParamPolynomial(self.alphabet, terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPolynomial(self.alphabet, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return ParamPolynomial(self.alphabet, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamPolynomial):
            if not other.is_constant():
                raise TypeError("division by a non-constant polynomial")
            other = other.constant_value()
        other = Fraction(other)
        return ParamPolynomial(self.alphabet, {e: c / other for e, c in self._terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.alphabet.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, ParamPolynomial):
            return self.alphabet == other.alphabet and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == ({self.alphabet.unit: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alphabet, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- inspection -------------------------------------------------------
    def terms(self) -> Iterator[tuple[Exponents, Fraction]]:
        """Terms in descending graded-lexicographic order."""
        for e in sorted(self._terms, key=_grlex_key, reverse=True):
            yield e, self._terms[e]

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.alphabet.index(name)
        return max((e[i] for e in self._terms), default=-1)

    def variables(self) -> tuple[str, ...]:
        used = {i for e in self._terms for i, k in enumerate(e) if k}
        return tuple(n for i, n in enumerate(self.alphabet.names) if i in used)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(self.alphabet.unit, Fraction(0))

    def coeff(self, name: str, k: int) -> ParamPolynomial:
        """Coefficient of ``name**k``, as a polynomial in the other parameters."""
        i = self.alphabet.index(name)
        terms = {}
        for e, c in self._terms.items():
            if e[i] == k:
                terms[e[:i] + (0,) + e[i + 1:]] = c
        return ParamPolynomial(self.alphabet, terms)

    def linear_parts(self, unknowns: Iterable[str]) -> tuple[dict[str, ParamPolynomial], ParamPolynomial]:
        """Split into ``sum(coeff[u] * u) + rest`` over the given unknowns.

        Raises NonLinearError if some term has total degree > 1 in the unknowns.
        """
        unknowns = tuple(unknowns)
        idx = {u: self.alphabet.index(u) for u in unknowns}
        coeffs: dict[str, dict] = {u: {} for u in unknowns}
        rest: dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            hit = [u for u, i in idx.items() if e[i]]
            if not hit:
                rest[e] = c
                continue
            if len(hit) > 1 or e[idx[hit[0]]] > 1:
                raise NonLinearError(hit[0])
            i = idx[hit[0]]
            coeffs[hit[0]][e[:i] + (0,) + e[i + 1:]] = c
        return (
            {u: ParamPolynomial(self.alphabet, t) for u, t in coeffs.items()},
            ParamPolynomial(self.alphabet, rest),
        )

    # -- substitution -----------------------------------------------------
    def subs(self, values: Mapping[str, object]) -> ParamPolynomial:
        """Substitute numbers or same-alphabet polynomials for parameters."""
        if not values:
            return self
        subst = {self.alphabet.index(k): self._coerce(v) for k, v in values.items()}
        powers: dict[tuple[int, int], ParamPolynomial] = {}
        result = self.alphabet.zero()
        for e, c in self._terms.items():
            kept = list(e)
            term = self.alphabet.const(c)
            for i, p in subst.items():
                if e[i]:
                    key = (i, e[i])
                    if key not in powers:
                        powers[key] = p ** e[i]
                    term = term * powers[key]
                    kept[i] = 0
            result = result + term * ParamPolynomial(self.alphabet, {tuple(kept): 1})
        return result

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        return self.subs(values).constant_value()

    # -- rendering --------------------------------------------------------
    def _monomial_str(self, e: Exponents) -> str:
        parts = []
        for n, k in zip(self.alphabet.names, e):
            if k == 1:
                parts.append(n)
            elif k:
                parts.append(f"{n}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in self.terms():
            mono = self._monomial_str(e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"ParamPolynomial({self})"


def as_poly(value, alphabet: Alphabet = DEFAULT_ALPHABET) -> ParamPolynomial:
    if isinstance(value, ParamPolynomial):
        return value
    return alphabet.const(value)


def exact_quotient(num: ParamPolynomial, den: ParamPolynomial) -> ParamPolynomial | None:
    """``num / den`` if ``den`` divides ``num`` exactly, else None."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_e, lead_c = next(den.terms())
    alphabet = num.alphabet
    quotient = alphabet.zero()
    rest = num
    while rest:
        e, c = next(rest.terms())
        shift = tuple(i - j for i, j in zip(e, lead_e))
        if any(k < 0 for k in shift):
            return None
        step = ParamPolynomial(alphabet, {shift: c / lead_c})
        quotient = quotient + step
        rest = rest - step * den
    return quotient
