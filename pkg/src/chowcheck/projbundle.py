"""Chow ring of the projectivisation of a rank-two bundle, and its HRR polynomial."""

from __future__ import annotations

from dataclasses import dataclass

from .charclass import BundleClassData, chern_character_line, todd_fourfold, todd_line
from .chowring import GradedClass, Ring, RingHom, RingPresentation, make_ring
from .errors import ChowCheckError, RankError, RingMismatchError
from .ratcore import DEFAULT_ALPHABET, Alphabet, ParamPolynomial


def generic_fourfold(alphabet: Alphabet = DEFAULT_ALPHABET) -> Ring:
    """Chow ring model of a Fano fourfold of Picard rank one with a rank-two bundle.

    Generators: ``H`` (ample generator), ``e`` = c2 of the bundle, ``t`` = c2
    of the tangent bundle, ``pt`` = point class.  Top-degree integrals are
    the symbols x = H^4, y = e.H^2, z = e^2, u = t.H^2, v = t.e; ``t^2`` is
    left unhoused on purpose.
    """
    x, y, z, u, v = (alphabet.var(n) for n in "xyzuv")
    return make_ring(RingPresentation(
        generators=(("H", 1), ("e", 2), ("t", 2), ("pt", 4)),
        top_degree=4,
        integration_table={"H^4": x, "H^2*e": y, "e^2": z, "H^2*t": u, "e*t": v, "pt": 1},
        unhoused=("t^2",),
        alphabet=alphabet,
    ))


def mukai_bundle(base: Ring) -> BundleClassData:
    """``c1 = r*H``, ``c2 = e`` on :func:`generic_fourfold`."""
    return BundleClassData(2, base.gen("H") * base.param("r"), base.gen("e"))


@dataclass(frozen=True)
class ProjBundleRing:
    base: Ring
    ring: Ring
    bundle: BundleClassData
    pullback: RingHom
    xi_name: str = "xi"

    @property
    def xi(self) -> GradedClass:
        return self.ring.gen(self.xi_name)

    def pi(self, alpha: GradedClass) -> GradedClass:
        return self.pullback(alpha)


def _minimal_vanishing(base: Ring) -> list[tuple[int, ...]]:
    """Minimal monomials above the base top degree, to be killed in the bundle ring."""
    top = base.top_degree
    out = set()
    for d in range(top + 1):
        for e in base.normal_monomials(d):
            for i, gd in enumerate(base.degrees):
                if d + gd <= top:
                    continue
                f = tuple(k + (j == i) for j, k in enumerate(e))
                if base._find_rule(f) is not None:
                    continue
                drops = (tuple(k - (j == i2) for j, k in enumerate(f)) for i2, k2 in enumerate(f) if k2)
                if all(base.monomial_degree(g) <= top for g in drops):
                    out.add(f)
    return sorted(out)


def build_pe_ring(base: Ring | RingPresentation, bundle: BundleClassData, xi_name: str = "xi") -> ProjBundleRing:
    """Adjoin the tautological class with ``xi^2 = c1*xi - c2``."""
    if isinstance(base, RingPresentation):
        base = make_ring(base)
    if bundle.rank != 2:
        raise RankError(f"projective bundle ring is built for rank 2, got {bundle.rank}")
    for c in (bundle.c1, bundle.c2):
        if isinstance(c, GradedClass) and c.ring is not base:
            raise RingMismatchError("bundle classes do not live in the base ring")

    n = len(base.names)

    def lift(e):
        return e + (0,)

    def terms_of(cls):
        if not cls:
            return {}
        return {lift(e): c for e, c in cls.terms.items()}

    relations = {}
    for lhs, rhs in base.rules:
        relations[lift(lhs)] = {lift(e): c for e, c in rhs.items()}
    for e in _minimal_vanishing(base):
        relations.setdefault(lift(e), {})
    xi_e = (0,) * n + (1,)
    grothendieck = {}
    for e, c in terms_of(bundle.c1).items():
        grothendieck[tuple(i + j for i, j in zip(e, xi_e))] = c
    for e, c in terms_of(bundle.c2).items():
        grothendieck[e] = grothendieck.get(e, base.alphabet.zero()) - c
    relations[(0,) * n + (2,)] = grothendieck

    table = {tuple(i + j for i, j in zip(lift(e), xi_e)): val for e, val in base.table.items()}
    unhoused = tuple(tuple(i + j for i, j in zip(lift(e), xi_e)) for e in base.unhoused)
    ring = make_ring(RingPresentation(
        generators=tuple(zip(base.names, base.degrees)) + ((xi_name, 1),),
        top_degree=base.top_degree + 1,
        relations=relations,
        integration_table=table,
        unhoused=unhoused,
        alphabet=base.alphabet,
    ))
    pullback = base.hom(ring, {name: ring.gen(name) for name in base.names})
    return ProjBundleRing(base, ring, bundle, pullback, xi_name)


def pushforward(pb: ProjBundleRing, p: GradedClass) -> GradedClass:
    """The xi-linear coefficient of ``p``, as a class on the base."""
    if p.ring is not pb.ring:
        raise RingMismatchError("class is not in the projective bundle ring")
    k = len(pb.base.names)
    lowered = {e[:k]: c for e, c in p.terms.items() if e[k] == 1}
    return GradedClass(pb.base, pb.base.reduce_terms(lowered))


def relative_canonical(pb: ProjBundleRing) -> GradedClass:
    """Anticanonical class of the fibration, ``2*xi - pi^* c1``."""
    return pb.xi * 2 - pb.pi(pb.bundle.c1)


@dataclass(frozen=True)
class ChiPolynomial:
    """``chi(m*D) = f1 m^5 + f2 m^4 + f3 m^3 + f4 m^2 + f5 m + constant``."""

    f: tuple[ParamPolynomial, ...]
    constant: ParamPolynomial

    def coefficient(self, i: int) -> ParamPolynomial:
        """``f_i`` for i in 1..5."""
        return self.f[i - 1]

    def at(self, m) -> ParamPolynomial:
        total = self.constant
        for i, fi in enumerate(self.f, start=1):
            total = total + fi * (m ** (len(self.f) + 1 - i))
        return total

    def subs(self, values) -> ChiPolynomial:
        return ChiPolynomial(tuple(fi.subs(values) for fi in self.f), self.constant.subs(values))


def generic_setup(alphabet: Alphabet = DEFAULT_ALPHABET) -> ProjBundleRing:
    """W = P(E) over :func:`generic_fourfold` with the Mukai bundle."""
    base = generic_fourfold(alphabet)
    return build_pe_ring(base, mukai_bundle(base))


def todd_total(pb: ProjBundleRing) -> GradedClass:
    """``pi^* td(X) * td(T_pi)`` for the generic fourfold base."""
    base = pb.base
    try:
        H, t, pt = base.gens("H t pt")
    except ChowCheckError as exc:
        raise ChowCheckError("Todd class needs the generic fourfold generators H, t, pt") from exc
    td_base = todd_fourfold(base.param("r"), H, t, pt)
    fibre = relative_canonical(pb)
    return pb.pi(td_base) * todd_line(fibre, trunc=min(5, pb.ring.top_degree))


def hrr_chi_poly(pb: ProjBundleRing, a=None, divisor: GradedClass | None = None) -> ChiPolynomial:
    """Riemann-Roch polynomial of ``m*(a*xi - pi^*H)`` on the total space.

    ``a`` defaults to the parameter ``a``; ``divisor`` overrides the class.
    """
    ring = pb.ring
    if divisor is None:
        if a is None:
            a = ring.param("a")
        divisor = pb.xi * a - pb.pi(pb.base.gen("H"))
    m = ring.param("m")
    td = todd_total(pb)
    chi = ring.integrate_full(chern_character_line(divisor * m) * td)
    dim = ring.top_degree
    f = tuple(chi.coeff("m", dim + 1 - i) for i in range(1, dim + 1))
    return ChiPolynomial(f, chi.coeff("m", 0))
