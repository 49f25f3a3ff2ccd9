"""The exterior coalgebra and its coaction on Koszul complexes.

The exterior algebra on m generators over R carries a comultiplication
sending a wedge monomial e_S to the signed sum of all two-block splits of
S, the counit picking the scalar part, and an antipode acting by (-1)^p on
wedge degree p.  Together with the wedge product these satisfy the Hopf
compatibilities checked in `check_coalgebra`.  The same splitting map is a
coaction of the bare coalgebra (zero differential) on every Koszul complex
with the same generators: contraction in the left slot commutes with it.

Tensors are stored over R: a term is (exponent vector, left subset, right
subset) with a rational coefficient, so e_U (x) e_V with a polynomial
coefficient never splits the polynomial between the slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from random import Random
from typing import Callable, Mapping, Sequence

from .checks import CheckReport, rand_mixed, rand_section, shrink_elements
from .exterior import Ambient, ExtElt, Section, contract, merge_sign, wedge
from .koszul import KoszulComplex
from .poly import Exponents, Poly, exps_add, monomial_str

TensorKey = tuple[Exponents, tuple[int, ...], tuple[int, ...]]


class TensorElt:
    """Element of (Lambda otimes_R Lambda) over the polynomial ring."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Mapping[TensorKey, Fraction]):
        clean: dict[TensorKey, Fraction] = {}
        n = len(ambient.vars)
        for (exps, left, right), c in terms.items():
            if len(exps) != n:
                raise ValueError("exponent vector does not match the variables")
            c = Fraction(c)
            if c:
                clean[(tuple(exps), tuple(left), tuple(right))] = c
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorElt is immutable")

    @classmethod
    def zero(cls, ambient: Ambient) -> "TensorElt":
        return cls(ambient, {})

    @classmethod
    def tensor(cls, a: ExtElt, b: ExtElt) -> "TensorElt":
        if a.ambient != b.ambient:
            raise ValueError("mixed ambients")
        terms: dict[TensorKey, Fraction] = {}
        for (e1, s1), c1 in a.terms.items():
            for (e2, s2), c2 in b.terms.items():
                key = (exps_add(e1, e2), s1, s2)
                v = terms.get(key, Fraction(0)) + c1 * c2
                if v:
                    terms[key] = v
                else:
                    terms.pop(key, None)
        return cls(a.ambient, terms)

    def __add__(self, other: "TensorElt") -> "TensorElt":
        if not isinstance(other, TensorElt):
            return NotImplemented
        if self.ambient != other.ambient:
            raise ValueError("mixed ambients")
        terms = dict(self.terms)
        for key, c in other.terms.items():
            v = terms.get(key, Fraction(0)) + c
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
        return TensorElt(self.ambient, terms)

    def __neg__(self) -> "TensorElt":
        return TensorElt(self.ambient, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElt") -> "TensorElt":
        if not isinstance(other, TensorElt):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "TensorElt":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TensorElt(self.ambient, {k: c * v for k, v in self.terms.items()})
        if not isinstance(other, TensorElt):
            return NotImplemented
        return tensor_multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElt):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        def slot(subset: tuple[int, ...]) -> str:
            return "/\\".join(self.ambient.gens[j] for j in subset) or "1"

        pieces = []
        for (exps, left, right) in sorted(self.terms, key=lambda k: (len(k[1]), k[1], k[2], k[0])):
            c = self.terms[(exps, left, right)]
            mag = abs(c)
            mono = monomial_str(self.ambient.vars, exps)
            prefix = "*".join(s for s in (str(mag) if mag != 1 else "", mono) if s)
            body = f"{slot(left)} (x) {slot(right)}"
            if prefix:
                body = f"{prefix}*{body}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"TensorElt({str(self)!r})"


def comultiply(a: ExtElt) -> TensorElt:
    """Signed sum over all two-block splits of each wedge monomial."""
    terms: dict[TensorKey, Fraction] = {}
    for (exps, subset), c in a.terms.items():
        for r in range(len(subset) + 1):
            for left in combinations(subset, r):
                right = tuple(j for j in subset if j not in left)
                sign, _ = merge_sign(left, right)
                key = (exps, left, right)
                v = terms.get(key, Fraction(0)) + sign * c
                if v:
                    terms[key] = v
                else:
                    terms.pop(key, None)
    return TensorElt(a.ambient, terms)


def counit(a: ExtElt) -> Poly:
    """Projection onto wedge degree zero."""
    return a.scalar_part()


def antipode(a: ExtElt) -> ExtElt:
    """(-1)^p on wedge degree p; an algebra map because 2-cycles cancel."""
    return ExtElt(a.ambient, {(exps, subset): (c if len(subset) % 2 == 0 else -c)
                              for (exps, subset), c in a.terms.items()})


def coaction(complex: KoszulComplex, a: ExtElt) -> TensorElt:
    """Coaction of the bare coalgebra on a Koszul complex element."""
    if a.ambient != complex.ambient:
        raise ValueError("element does not live on the complex")
    return comultiply(a)


def tensor_multiply(s: TensorElt, t: TensorElt) -> TensorElt:
    """Slotwise wedge with the sign rule (a (x) b)(c (x) d) = (-1)^(|b||c|) ac (x) bd."""
    if s.ambient != t.ambient:
        raise ValueError("mixed ambients")
    terms: dict[TensorKey, Fraction] = {}
    for (e1, u1, v1), c1 in s.terms.items():
        for (e2, u2, v2), c2 in t.terms.items():
            cross = -1 if (len(v1) * len(u2)) % 2 else 1
            su, mu = merge_sign(u1, u2)
            if su == 0:
                continue
            sv, mv = merge_sign(v1, v2)
            if sv == 0:
                continue
            key = (exps_add(e1, e2), mu, mv)
            v = terms.get(key, Fraction(0)) + cross * su * sv * c1 * c2
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
    return TensorElt(s.ambient, terms)


def tensor_flip(t: TensorElt) -> TensorElt:
    """Graded flip a (x) b -> (-1)^(|a||b|) b (x) a."""
    terms: dict[TensorKey, Fraction] = {}
    for (exps, left, right), c in t.terms.items():
        sign = -1 if (len(left) * len(right)) % 2 else 1
        terms[(exps, right, left)] = sign * c
    return TensorElt(t.ambient, terms)


def tensor_collapse(t: TensorElt) -> ExtElt:
    """Multiply the two slots back together."""
    terms: dict = {}
    for (exps, left, right), c in t.terms.items():
        sign, merged = merge_sign(left, right)
        if sign == 0:
            continue
        key = (exps, merged)
        v = terms.get(key, Fraction(0)) + sign * c
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
    return ExtElt(t.ambient, terms)


def _slot_map(t: TensorElt, fn: Callable[[ExtElt], ExtElt], slot: int) -> TensorElt:
    """Apply an even R-linear map to one slot (no crossing signs arise)."""
    out = TensorElt.zero(t.ambient)
    nvars = len(t.ambient.vars)
    for (exps, left, right), c in t.terms.items():
        target = left if slot == 0 else right
        image = fn(ExtElt.monomial(t.ambient, exps, target, c))
        for (iexps, isub), ic in image.terms.items():
            key = (iexps, isub, right) if slot == 0 else (iexps, left, isub)
            out = out + TensorElt(t.ambient, {key: ic})
    return out


def tensor_map_first(t: TensorElt, fn: Callable[[ExtElt], ExtElt]) -> TensorElt:
    return _slot_map(t, fn, 0)


def tensor_map_second(t: TensorElt, fn: Callable[[ExtElt], ExtElt]) -> TensorElt:
    return _slot_map(t, fn, 1)


def tensor_counit_first(t: TensorElt) -> ExtElt:
    """(counit otimes id), landing back in the exterior algebra."""
    terms = {}
    for (exps, left, right), c in t.terms.items():
        if left == ():
            key = (exps, right)
            terms[key] = terms.get(key, Fraction(0)) + c
    return ExtElt(t.ambient, {k: v for k, v in terms.items() if v})


def tensor_counit_second(t: TensorElt) -> ExtElt:
    terms = {}
    for (exps, left, right), c in t.terms.items():
        if right == ():
            key = (exps, left)
            terms[key] = terms.get(key, Fraction(0)) + c
    return ExtElt(t.ambient, {k: v for k, v in terms.items() if v})


def tensor_d_first(t: TensorElt, section: Section) -> TensorElt:
    """(d otimes id) for the contraction differential; acts on the left slot."""
    if section.ambient != t.ambient:
        raise ValueError("section lives on a different ambient")
    terms: dict[TensorKey, Fraction] = {}
    for (exps, left, right), c in t.terms.items():
        for k0, j in enumerate(left):
            sign = -1 if k0 % 2 == 0 else 1
            rest = left[:k0] + left[k0 + 1:]
            for sexps, sc in section.components[j].terms.items():
                key = (exps_add(exps, sexps), rest, right)
                v = terms.get(key, Fraction(0)) + sign * sc * c
                if v:
                    terms[key] = v
                else:
                    terms.pop(key, None)
    return TensorElt(t.ambient, terms)


class Tensor3:
    """Triple tensors, only as far as coassociativity needs them."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Mapping[tuple, Fraction]):
        clean = {}
        for key, c in terms.items():
            c = Fraction(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Tensor3 is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"Tensor3({len(self.terms)} terms)"


def _split_terms(subset: tuple[int, ...]):
    for r in range(len(subset) + 1):
        for left in combinations(subset, r):
            right = tuple(j for j in subset if j not in left)
            sign, _ = merge_sign(left, right)
            yield left, right, sign


def comultiply_first(t: TensorElt) -> Tensor3:
    """(comultiply otimes id); comultiplication is even, so no extra signs."""
    terms: dict[tuple, Fraction] = {}
    for (exps, left, right), c in t.terms.items():
        for a, b, sign in _split_terms(left):
            key = (exps, a, b, right)
            v = terms.get(key, Fraction(0)) + sign * c
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
    return Tensor3(t.ambient, terms)


def comultiply_second(t: TensorElt) -> Tensor3:
    """(id otimes comultiply)."""
    terms: dict[tuple, Fraction] = {}
    for (exps, left, right), c in t.terms.items():
        for a, b, sign in _split_terms(right):
            key = (exps, left, a, b)
            v = terms.get(key, Fraction(0)) + sign * c
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
    return Tensor3(t.ambient, terms)


def check_coalgebra(rank: int, trials: int = 200, seed: int = 0,
                    vars: Sequence[str] = ("x", "y"), max_deg: int = 2) -> CheckReport:
    """Coassociativity, counit, cocommutativity, antipode, compatibility.

    Runs on random (not necessarily homogeneous) elements, with random
    sections driving the chain-map probe; sections may have zero or
    inhomogeneous components, since the coaction does not care.
    """
    vs = tuple(vars)
    amb = Ambient(vs, tuple(f"e{j + 1}" for j in range(rank)))
    rng = Random(seed)
    ran = 0
    for _ in range(trials):
        ran += 1
        a = rand_mixed(rng, amb, max_deg)
        b = rand_mixed(rng, amb, max_deg)
        section = rand_section(rng, amb, max_deg)
        complex = KoszulComplex(section)

        def coassoc_fails(a):
            d = comultiply(a)
            return comultiply_first(d) != comultiply_second(d)

        def counit_fails(a):
            d = comultiply(a)
            return tensor_counit_first(d) != a or tensor_counit_second(d) != a

        def cocomm_fails(a):
            d = comultiply(a)
            return tensor_flip(d) != d

        def antipode_fails(a):
            d = comultiply(a)
            target = ExtElt.from_poly(amb, counit(a))
            return (tensor_collapse(tensor_map_first(d, antipode)) != target
                    or tensor_collapse(tensor_map_second(d, antipode)) != target)

        def algebra_map_fails(a, b):
            return comultiply(wedge(a, b)) != tensor_multiply(comultiply(a), comultiply(b))

        def chain_map_fails(a):
            lhs = tensor_d_first(coaction(complex, a), section)
            rhs = coaction(complex, contract(section, a))
            return lhs != rhs

        single = [("coassociativity", coassoc_fails), ("counit", counit_fails),
                  ("cocommutativity", cocomm_fails), ("antipode", antipode_fails),
                  ("chain_map", chain_map_fails)]
        for name, fails in single:
            if fails(a):
                small = shrink_elements(fails, [a])
                ce = {"identity": name, "a": str(small[0])}
                if name == "chain_map":
                    ce["section"] = str(section)
                return CheckReport("coalgebra", "fail", ran, ce, {"rank": rank})
        if algebra_map_fails(a, b):
            small = shrink_elements(algebra_map_fails, [a, b])
            ce = {"identity": "algebra_map", "a": str(small[0]), "b": str(small[1])}
            return CheckReport("coalgebra", "fail", ran, ce, {"rank": rank})
    return CheckReport("coalgebra", "pass", ran, None, {"rank": rank})
