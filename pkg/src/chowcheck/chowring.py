"""Graded quotient rings given by terminating rewrite rules.

A ring is presented by graded generators, rewrite rules and a top degree.
Rules are either ``g^k -> (lower terms)`` for a single generator ``g`` or
``monomial -> 0``.  Anything above the top degree vanishes.  Top-degree
monomials in normal form are integrated by table lookup.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping, Union

from .errors import (
    DegreeError,
    PresentationError,
    RewriteCycleError,
    RingMismatchError,
    UnhousedSymbolError,
)
from .ratcore import DEFAULT_ALPHABET, Alphabet, ParamPolynomial

Exponents = tuple[int, ...]
MonomialSpec = Union[str, Mapping[str, int]]
Scalar = Union[int, Fraction, ParamPolynomial]

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


@dataclass(frozen=True)
class RingPresentation:
    """Declarative description of a ring; see :func:`make_ring`.

    Monomials are written ``"xi*H^2"`` (``"1"`` for the unit) or as
    ``{name: exponent}`` mappings.  ``relations`` maps a left-hand monomial to
    its replacement, itself a mapping monomial -> coefficient.
    """

    generators: tuple[tuple[str, int], ...]
    top_degree: int
    relations: Mapping[MonomialSpec, Mapping[MonomialSpec, Scalar]] = field(default_factory=dict)
    integration_table: Mapping[MonomialSpec, Scalar] = field(default_factory=dict)
    unhoused: tuple[MonomialSpec, ...] = ()
    alphabet: Alphabet = DEFAULT_ALPHABET


class Ring:
    """Immutable ring handle; build with :func:`make_ring`."""

    def __init__(self, pres: RingPresentation):
        self.alphabet = pres.alphabet
        self.names = tuple(n for n, _ in pres.generators)
        self.degrees = tuple(d for _, d in pres.generators)
        if len(set(self.names)) != len(self.names):
            raise PresentationError(f"duplicate generator names {self.names}")
        if any(d < 1 for d in self.degrees):
            raise PresentationError("generator degrees must be positive")
        self.top_degree = pres.top_degree
        self._index = {n: i for i, n in enumerate(self.names)}

        self.rules: list[tuple[Exponents, dict[Exponents, ParamPolynomial]]] = []
        for lhs, rhs in pres.relations.items():
            self.rules.append((self.parse_monomial(lhs), self._parse_terms(rhs)))
        self._check_termination()
        self._check_homogeneity()

        self.unhoused = frozenset(self.parse_monomial(m) for m in pres.unhoused)
        self.table: dict[Exponents, ParamPolynomial] = {}
        for mono, value in pres.integration_table.items():
            e = self.parse_monomial(mono)
            if self.monomial_degree(e) != self.top_degree:
                raise PresentationError(f"table entry {self.monomial_str(e)} is not of top degree")
            if self._find_rule(e) is not None:
                raise PresentationError(f"table entry {self.monomial_str(e)} is not in normal form")
            self.table[e] = self._scalar(value)
        missing = [
            self.monomial_str(e)
            for e in self.normal_monomials(self.top_degree)
            if e not in self.table and e not in self.unhoused
        ]
        if missing:
            raise PresentationError(f"top-degree monomials neither tabulated nor unhoused: {missing}")
        self._cache: dict[Exponents, dict[Exponents, ParamPolynomial]] = {}

    # -- parsing ----------------------------------------------------------
    def parse_monomial(self, spec: MonomialSpec) -> Exponents:
        exps = [0] * len(self.names)
        if isinstance(spec, tuple):
            if len(spec) != len(self.names):
                raise PresentationError(f"exponent tuple {spec} has wrong length")
            return spec
        if isinstance(spec, str):
            spec = spec.replace(" ", "")
            items = []
            if spec != "1":
                for factor in spec.split("*"):
                    m = _FACTOR.match(factor)
                    if not m:
                        raise PresentationError(f"cannot parse monomial {spec!r}")
                    items.append((m.group(1), int(m.group(2) or 1)))
        else:
            items = list(spec.items())
        for name, k in items:
            if name not in self._index:
                raise PresentationError(f"unknown generator {name!r}")
            exps[self._index[name]] += k
        return tuple(exps)

    def _scalar(self, value: Scalar) -> ParamPolynomial:
        if isinstance(value, ParamPolynomial):
            if value.alphabet != self.alphabet:
                raise PresentationError("coefficient over a foreign alphabet")
            return value
        return self.alphabet.const(value)

    def _parse_terms(self, terms) -> dict[Exponents, ParamPolynomial]:
        if isinstance(terms, GradedClass):
            return dict(terms.terms)
        out: dict[Exponents, ParamPolynomial] = {}
        for mono, c in terms.items():
            e = self.parse_monomial(mono)
            out[e] = out.get(e, self.alphabet.zero()) + self._scalar(c)
        return {e: c for e, c in out.items() if c}

    # -- validation -------------------------------------------------------
    def _check_termination(self):
        power_rules = {}
        for lhs, rhs in self.rules:
            support = [i for i, k in enumerate(lhs) if k]
            if not support:
                raise RewriteCycleError("a relation rewrites the unit")
            if len(support) == 1:
                g = support[0]
                for e in rhs:
                    if e[g] >= lhs[g]:
                        raise RewriteCycleError(
                            f"rule for {self.monomial_str(lhs)} reintroduces {self.monomial_str(e)}"
                        )
                if g in power_rules:
                    raise PresentationError(f"two power rules for generator {self.names[g]!r}")
                power_rules[g] = rhs
            elif rhs:
                raise PresentationError(
                    f"mixed monomial {self.monomial_str(lhs)} may only be rewritten to 0"
                )
        # generator g -> h whenever g's rule can produce h and h is rewritten too
        edges = {g: {i for e in rhs for i, k in enumerate(e) if k and i != g and i in power_rules}
                 for g, rhs in power_rules.items()}
        state: dict[int, int] = {}

        def visit(g, path):
            state[g] = 1
            for h in edges[g]:
                if state.get(h) == 1:
                    cycle = " -> ".join(self.names[i] for i in path + [h])
                    raise RewriteCycleError(f"rewrite rules form a cycle: {cycle}")
                if h not in state:
                    visit(h, path + [h])
            state[g] = 2

        for g in edges:
            if g not in state:
                visit(g, [g])

    def _check_homogeneity(self):
        for lhs, rhs in self.rules:
            d = self.monomial_degree(lhs)
            for e in rhs:
                if self.monomial_degree(e) != d:
                    raise PresentationError(
                        f"rule for {self.monomial_str(lhs)} is not homogeneous ({self.monomial_str(e)})"
                    )

    # -- monomials --------------------------------------------------------
    def monomial_degree(self, e: Exponents) -> int:
        return sum(k * d for k, d in zip(e, self.degrees))

    def monomial_str(self, e: Exponents) -> str:
        parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k]
        return "*".join(parts) or "1"

    def _find_rule(self, e: Exponents):
        for lhs, rhs in self.rules:
            if all(k >= l for k, l in zip(e, lhs)):
                return lhs, rhs
        return None

    def monomials(self, degree: int) -> Iterator[Exponents]:
        def rec(i, left, acc):
            if i == len(self.names):
                if left == 0:
                    yield tuple(acc)
                return
            d = self.degrees[i]
            for k in range(left // d, -1, -1):
                yield from rec(i + 1, left - k * d, acc + [k])

        yield from rec(0, degree, [])

    def normal_monomials(self, degree: int) -> list[Exponents]:
        return [e for e in self.monomials(degree) if self._find_rule(e) is None]

    def reduce_monomial(self, e: Exponents) -> dict[Exponents, ParamPolynomial]:
        cached = self._cache.get(e)
        if cached is not None:
            return cached
        if self.monomial_degree(e) > self.top_degree:
            out = {}
        else:
            rule = self._find_rule(e)
            if rule is None:
                out = {e: self.alphabet.one()}
            else:
                lhs, rhs = rule
                quotient = tuple(k - l for k, l in zip(e, lhs))
                out = {}
                for r_e, r_c in rhs.items():
                    shifted = tuple(i + j for i, j in zip(quotient, r_e))
                    for n_e, n_c in self.reduce_monomial(shifted).items():
                        out[n_e] = out.get(n_e, self.alphabet.zero()) + r_c * n_c
                out = {k: v for k, v in out.items() if v}
        self._cache[e] = out
        return out

    def reduce_terms(self, terms: Mapping[Exponents, ParamPolynomial]) -> dict[Exponents, ParamPolynomial]:
        out: dict[Exponents, ParamPolynomial] = {}
        for e, c in terms.items():
            if not c:
                continue
            for n_e, n_c in self.reduce_monomial(e).items():
                out[n_e] = out.get(n_e, self.alphabet.zero()) + c * n_c
        return {k: v for k, v in out.items() if v}

    # -- classes ----------------------------------------------------------
    def element(self, terms: Mapping[MonomialSpec, Scalar]) -> GradedClass:
        return GradedClass(self, self.reduce_terms(self._parse_terms(terms)))

    def gen(self, name: str) -> GradedClass:
        return self.element({name: 1})

    def gens(self, names: str) -> tuple[GradedClass, ...]:
        return tuple(self.gen(n) for n in names.split())

    def scalar(self, value: Scalar) -> GradedClass:
        return GradedClass(self, self.reduce_terms({(0,) * len(self.names): self._scalar(value)}))

    def one(self) -> GradedClass:
        return self.scalar(1)

    def zero(self) -> GradedClass:
        return GradedClass(self, {})

    def param(self, name: str) -> ParamPolynomial:
        return self.alphabet.var(name)

    # -- integration ------------------------------------------------------
    def integrate(self, p: GradedClass) -> ParamPolynomial:
        """Integral of a class that is zero or homogeneous of top degree."""
        _check_ring(self, p)
        bad = [self.monomial_str(e) for e in p.terms if self.monomial_degree(e) != self.top_degree]
        if bad:
            raise DegreeError(f"integrand has components below top degree: {bad}")
        return self._lookup(p)

    def integrate_full(self, p: GradedClass) -> ParamPolynomial:
        """Integral of the top-degree component of an arbitrary class."""
        _check_ring(self, p)
        return self._lookup(p.homogeneous_part(self.top_degree))

    def _lookup(self, p: GradedClass) -> ParamPolynomial:
        total = self.alphabet.zero()
        for e, c in sorted(p.terms.items()):
            if e not in self.table:
                raise UnhousedSymbolError(self.monomial_str(e))
            total = total + c * self.table[e]
        return total

    def hom(self, target: Ring, images: Mapping[str, GradedClass]) -> RingHom:
        return RingHom(self, target, images)

    def __repr__(self):
        gens = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"Ring({gens}; top={self.top_degree})"


def make_ring(spec: RingPresentation) -> Ring:
    return Ring(spec)


def _check_ring(ring: Ring, p: GradedClass):
    if p.ring is not ring:
        raise RingMismatchError(f"class from {p.ring!r} used in {ring!r}")


class GradedClass:
    """Element of a :class:`Ring`, always held in normal form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict[Exponents, ParamPolynomial]):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other) -> GradedClass:
        if isinstance(other, GradedClass):
            _check_ring(self.ring, other)
            return other
        if isinstance(other, (int, Rational, ParamPolynomial)):
            return self.ring.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        zero = self.ring.alphabet.zero()
        for e, c in other.terms.items():
            terms[e] = terms.get(e, zero) + c
        return GradedClass(self.ring, {e: c for e, c in terms.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.ring, {e: -c for e, c in self.terms.items()})

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
        if isinstance(other, (int, Rational, ParamPolynomial)):
            if isinstance(other, ParamPolynomial) and other.alphabet != self.ring.alphabet:
                raise RingMismatchError("scalar over a foreign alphabet")
            scaled = {e: c * other for e, c in self.terms.items()}
            return GradedClass(self.ring, {e: c for e, c in scaled.items() if c})
        if not isinstance(other, GradedClass):
            return NotImplemented
        _check_ring(self.ring, other)
        raw: dict[Exponents, ParamPolynomial] = {}
        zero = self.ring.alphabet.zero()
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                raw[e] = raw.get(e, zero) + c1 * c2
        return GradedClass(self.ring, self.ring.reduce_terms(raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return GradedClass(self.ring, {e: c / other for e, c in self.terms.items()})

    def __pow__(self, n: int):
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational, ParamPolynomial, GradedClass)):
            other = self._coerce(other)
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {self.ring.monomial_degree(e) for e in self.terms}

    def degree(self) -> int | None:
        """The common degree of a nonzero homogeneous class, else None."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> GradedClass:
        return GradedClass(self.ring, {e: c for e, c in self.terms.items() if self.ring.monomial_degree(e) == d})

    def coefficient(self, monomial: MonomialSpec) -> ParamPolynomial:
        e = self.ring.parse_monomial(monomial)
        return self.terms.get(e, self.ring.alphabet.zero())

    def subs(self, values: Mapping[str, object]) -> GradedClass:
        """Substitute parameters in every coefficient."""
        return GradedClass(self.ring, self.ring.reduce_terms({e: c.subs(values) for e, c in self.terms.items()}))

    def __str__(self):
        if not self.terms:
            return "0"
        order = sorted(self.terms, key=lambda e: (self.ring.monomial_degree(e), e), reverse=True)
        out = []
        for e in order:
            c = self.terms[e]
            mono = self.ring.monomial_str(e)
            if len(c) == 1:
                # single-term coefficient: pull its sign out front
                cs = str(c)
                neg = cs.startswith("-")
                cs = cs.lstrip("-")
                if mono == "1":
                    body = cs
                elif cs == "1":
                    body = mono
                else:
                    body = f"{cs}*{mono}"
            else:
                neg = False
                body = f"({c})" if mono == "1" else f"({c})*{mono}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"{'-' if neg else '+'} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"GradedClass({self})"


def normal_form(p: GradedClass) -> GradedClass:
    """Re-run every rewrite on ``p``; a no-op on well-formed classes."""
    return GradedClass(p.ring, p.ring.reduce_terms(p.terms))


def multiply(p: GradedClass, q: GradedClass) -> GradedClass:
    if p.ring is not q.ring:
        raise RingMismatchError("cannot multiply classes from different rings")
    return p * q


def integrate(p: GradedClass) -> ParamPolynomial:
    return p.ring.integrate(p)


def integrate_full(p: GradedClass) -> ParamPolynomial:
    return p.ring.integrate_full(p)


class RingHom:
    """Ring map determined by generator images; checked against every rule."""

    def __init__(self, source: Ring, target: Ring, images: Mapping[str, GradedClass]):
        self.source = source
        self.target = target
        self.images = dict(images)
        for name in self.images:
            source.gen(name)
        for lhs, rhs in source.rules:
            support = {source.names[i] for i, k in enumerate(lhs) if k}
            support |= {source.names[i] for e in rhs for i, k in enumerate(e) if k}
            if not support <= set(self.images):
                continue
            image = self._apply_terms({lhs: source.alphabet.one()}) - self._apply_terms(rhs)
            if image:
                raise PresentationError(
                    f"images do not respect {source.monomial_str(lhs)} -> ...: residue {image}"
                )

    def _apply_terms(self, terms) -> GradedClass:
        total = self.target.zero()
        for e, c in terms.items():
            term = self.target.scalar(c)
            for i, k in enumerate(e):
                if k:
                    name = self.source.names[i]
                    if name not in self.images:
                        raise PresentationError(f"no image given for generator {name!r}")
                    term = term * self.images[name] ** k
            total = total + term
        return total

    def __call__(self, p: GradedClass) -> GradedClass:
        _check_ring(self.source, p)
        return self._apply_terms(p.terms)

