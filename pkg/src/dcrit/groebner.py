"""Groebner bases over Q in degrevlex order.

Buchberger's algorithm with the coprime-leading-term criterion, followed by
minimalization and full interreduction, so the returned basis is the reduced
monic Groebner basis: a canonical form, idempotent under recomputation.
This is the independent oracle for degree-zero cohomology (quotient ring
dimension) and for Milnor numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence, Union

from .poly import Exponents, Poly, degrevlex_key, gradient

#: Returned where a quotient ring has no finite vector-space dimension.
INFINITE = "infinite"


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exps_sub(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def _exps_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(p: Poly, basis: Sequence[Poly]) -> Poly:
    """Remainder of full multivariate division of p by the basis."""
    basis = [g for g in basis if not g.is_zero()]
    leads = [g.leading() for g in basis]
    work = p
    remainder = Poly.zero(p.vars)
    while not work.is_zero():
        exps, c = work.leading()
        for g, (ge, gc) in zip(basis, leads):
            if _divides(ge, exps):
                factor = Poly.monomial(p.vars, _exps_sub(exps, ge), c / gc)
                work = work - factor * g
                break
        else:
            mono = Poly.monomial(p.vars, exps, c)
            remainder = remainder + mono
            work = work - mono
    return remainder


def s_poly(f: Poly, g: Poly) -> Poly:
    fe, fc = f.leading()
    ge, gc = g.leading()
    lcm = _exps_lcm(fe, ge)
    mf = Poly.monomial(f.vars, _exps_sub(lcm, fe), Fraction(1) / fc)
    mg = Poly.monomial(g.vars, _exps_sub(lcm, ge), Fraction(1) / gc)
    return mf * f - mg * g


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Groebner basis, sorted by ascending leading term."""

    vars: tuple[str, ...]
    gens: tuple[Poly, ...]

    def normal_form(self, p: Poly) -> Poly:
        if p.vars != self.vars:
            raise ValueError("polynomial lives over different variables")
        return normal_form(p, self.gens)

    def contains(self, p: Poly) -> bool:
        """Ideal membership: true when the normal form vanishes."""
        return self.normal_form(p).is_zero()

    def leading_exponents(self) -> list[Exponents]:
        return [g.leading()[0] for g in self.gens]

    def __str__(self) -> str:
        return "{" + ", ".join(str(g) for g in self.gens) + "}"


def buchberger(gens: Iterable[Poly]) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal the generators span."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least the ring (pass explicit zero polynomials)")
    vars = gens[0].vars
    for g in gens:
        if g.vars != vars:
            raise ValueError("generators live over different variables")
    basis = [g * (Fraction(1) / g.leading()[1]) for g in gens if not g.is_zero()]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        # prefer pairs with small lcm; keeps intermediate growth down
        pairs.sort(key=lambda ij: degrevlex_key(
            _exps_lcm(basis[ij[0]].leading()[0], basis[ij[1]].leading()[0])), reverse=True)
        i, j = pairs.pop()
        fe = basis[i].leading()[0]
        ge = basis[j].leading()[0]
        if _exps_lcm(fe, ge) == tuple(a + b for a, b in zip(fe, ge)):
            continue  # coprime leading terms: s-polynomial reduces to zero
        r = normal_form(s_poly(basis[i], basis[j]), basis)
        if not r.is_zero():
            r = r * (Fraction(1) / r.leading()[1])
            basis.append(r)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # minimalize: drop any generator whose leading term another one divides
    basis.sort(key=lambda g: degrevlex_key(g.leading()[0]))
    minimal: list[Poly] = []
    for g in basis:
        ge = g.leading()[0]
        if not any(_divides(h.leading()[0], ge) for h in minimal):
            minimal.append(g)
    # interreduce: fully reduce each generator against the others
    reduced = []
    for k, g in enumerate(minimal):
        rest = minimal[:k] + minimal[k + 1:]
        r = normal_form(g, rest)
        reduced.append(r * (Fraction(1) / r.leading()[1]))
    reduced.sort(key=lambda g: degrevlex_key(g.leading()[0]))
    return GroebnerBasis(vars, tuple(reduced))


def _as_basis(arg: Union[GroebnerBasis, Iterable[Poly]]) -> GroebnerBasis:
    if isinstance(arg, GroebnerBasis):
        return arg
    return buchberger(arg)


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True when the quotient is a finite-dimensional vector space.

    Criterion: every variable has a pure power among the leading terms.
    With no variables the quotient is Q itself, which counts as finite.
    """
    n = len(gb.vars)
    if any(g.is_constant() for g in gb.gens):
        return True
    leads = gb.leading_exponents()
    for i in range(n):
        if not any(e[i] > 0 and all(e[k] == 0 for k in range(n) if k != i) for e in leads):
            return False
    return True


def standard_monomials(gb: GroebnerBasis) -> list[Exponents] | None:
    """Monomials not divisible by any leading term; None if infinitely many."""
    if not is_zero_dimensional(gb):
        return None
    if any(g.is_constant() for g in gb.gens):
        return []
    n = len(gb.vars)
    leads = gb.leading_exponents()
    caps = []
    for i in range(n):
        cap = min(e[i] for e in leads
                  if e[i] > 0 and all(e[k] == 0 for k in range(n) if k != i))
        caps.append(cap)
    out = []
    for exps in product(*(range(c) for c in caps)):
        if not any(_divides(le, exps) for le in leads):
            out.append(exps)
    return sorted(out, key=degrevlex_key)


def quotient_dimension(arg: Union[GroebnerBasis, Iterable[Poly]]):
    """dim_Q of R/I as a vector space, or INFINITE."""
    gb = _as_basis(arg)
    monos = standard_monomials(gb)
    if monos is None:
        return INFINITE
    return len(monos)


def milnor_number(f: Poly):
    """dim_Q R/(all partials of f), or INFINITE for non-isolated critical loci."""
    return quotient_dimension(gradient(f))


def jacobian_ideal(f: Poly) -> GroebnerBasis:
    return buchberger(gradient(f))
