"""Exterior algebra over a polynomial ring, with contraction.

Elements live in R otimes Lambda(e_1, ..., e_m) for R = Q[vars]: sparse maps
from (exponent vector, strictly increasing generator subset) to nonzero
rational coefficients.  The generator in slot j of a wedge monomial is
e_{j}; a subset is a tuple of 0-based generator indices.  Wedge degree p
sits in cohomological degree -p, so contraction along a section raises
cohomological degree by one.

Sign conventions (the single source of truth for every complex built here):

  * e_S wedge e_T = sign(S, T) * e_{S union T}, where sign(S, T) is the
    parity of the number of pairs (s, t) in S x T with s > t, and zero
    when the subsets overlap.
  * contraction along s = (s_1, ..., s_m) sends e_{j_1} ^ ... ^ e_{j_p}
    (j_1 < ... < j_p) to sum_k (-1)^k s_{j_k} e_{j_1} ^ ... omit k ... ^ e_{j_p}
    with k counted from 1.  In particular contract(s, e_j) = -s_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .poly import Exponents, Poly, degrevlex_key, exps_add, monomial_str

Scalar = Union[int, Fraction]
TermKey = tuple[Exponents, tuple[int, ...]]


@dataclass(frozen=True)
class Ambient:
    """A polynomial ring together with named exterior generators."""

    vars: tuple[str, ...]
    gens: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.gens)

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("generator names must be distinct")


def merge_sign(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Merge two strictly increasing index tuples, tracking the Koszul sign.

    Returns (sign, merged) where sign is (-1)**inversions for the shuffle
    sorting left + right, or (0, ()) when the tuples overlap.
    """
    inv = 0
    merged: list[int] = []
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] == right[j]:
            return 0, ()
        if left[i] < right[j]:
            merged.append(left[i])
            i += 1
        else:
            inv += len(left) - i
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return (1 if inv % 2 == 0 else -1), tuple(merged)


class ExtElt:
    """Immutable element of the exterior algebra over an Ambient."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Mapping[TermKey, Scalar]):
        n = len(ambient.vars)
        clean: dict[TermKey, Fraction] = {}
        for (exps, subset), c in terms.items():
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps!r} does not match {n} variables")
            if list(subset) != sorted(set(subset)):
                raise ValueError(f"subset {subset!r} must be strictly increasing")
            if subset and subset[-1] >= ambient.rank:
                raise ValueError(f"generator index out of range in {subset!r}")
            c = Fraction(c)
            if c:
                clean[(tuple(exps), tuple(subset))] = c
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExtElt is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ambient: Ambient) -> "ExtElt":
        return cls(ambient, {})

    @classmethod
    def one(cls, ambient: Ambient) -> "ExtElt":
        return cls(ambient, {((0,) * len(ambient.vars), ()): Fraction(1)})

    @classmethod
    def from_poly(cls, ambient: Ambient, p: Poly) -> "ExtElt":
        if p.vars != ambient.vars:
            raise ValueError("polynomial lives over different variables")
        return cls(ambient, {(exps, ()): c for exps, c in p.terms.items()})

    @classmethod
    def generator(cls, ambient: Ambient, j: int) -> "ExtElt":
        if not 0 <= j < ambient.rank:
            raise ValueError(f"no generator with index {j}")
        return cls(ambient, {((0,) * len(ambient.vars), (j,)): Fraction(1)})

    @classmethod
    def monomial(cls, ambient: Ambient, exps: Exponents, subset: Sequence[int], c: Scalar = 1) -> "ExtElt":
        return cls(ambient, {(tuple(exps), tuple(subset)): Fraction(c)})

    @classmethod
    def wedge_monomial(cls, ambient: Ambient, p: Poly, subset: Sequence[int]) -> "ExtElt":
        """p * e_{subset} for a polynomial coefficient p."""
        if p.vars != ambient.vars:
            raise ValueError("polynomial lives over different variables")
        sub = tuple(subset)
        return cls(ambient, {(exps, sub): c for exps, c in p.terms.items()})

    # -- additive structure --------------------------------------------------

    def _check(self, other: "ExtElt") -> None:
        if self.ambient != other.ambient:
            raise ValueError("mixed ambients")

    def __add__(self, other) -> "ExtElt":
        if isinstance(other, (int, Fraction)):
            other = ExtElt.from_poly(self.ambient, Poly.constant(self.ambient.vars, other))
        if isinstance(other, Poly):
            other = ExtElt.from_poly(self.ambient, other)
        if not isinstance(other, ExtElt):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, Fraction(0)) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return ExtElt(self.ambient, terms)

    __radd__ = __add__

    def __neg__(self) -> "ExtElt":
        return ExtElt(self.ambient, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "ExtElt":
        if isinstance(other, (int, Fraction, Poly)):
            return self + (-(self.__class__.from_poly(self.ambient, other) if isinstance(other, Poly)
                             else ExtElt.from_poly(self.ambient, Poly.constant(self.ambient.vars, other))))
        if not isinstance(other, ExtElt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ExtElt":
        return (-self) + other

    # -- multiplicative structure -------------------------------------------

    def __mul__(self, other) -> "ExtElt":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return ExtElt(self.ambient, {k: c * v for k, v in self.terms.items()})
        if isinstance(other, Poly):
            other = ExtElt.from_poly(self.ambient, other)
        if not isinstance(other, ExtElt):
            return NotImplemented
        return wedge(self, other)

    def __rmul__(self, other) -> "ExtElt":
        if isinstance(other, (int, Fraction)):
            return self * other
        if isinstance(other, Poly):
            return ExtElt.from_poly(self.ambient, other) * self
        return NotImplemented

    def __pow__(self, n: int) -> "ExtElt":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ExtElt.one(self.ambient)
        for _ in range(n):
            result = wedge(result, self)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExtElt.from_poly(self.ambient, Poly.constant(self.ambient.vars, other))
        if isinstance(other, Poly):
            other = ExtElt.from_poly(self.ambient, other)
        if not isinstance(other, ExtElt):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def scalar_part(self) -> Poly:
        """The wedge-degree-zero component, as a polynomial."""
        return self.coefficient_poly(())

    def coefficient_poly(self, subset: Sequence[int]) -> Poly:
        sub = tuple(subset)
        return Poly(self.ambient.vars,
                    {exps: c for (exps, s), c in self.terms.items() if s == sub})

    def subsets(self) -> set[tuple[int, ...]]:
        return {s for (_, s) in self.terms}

    def homogeneous_components(self) -> dict[int, "ExtElt"]:
        """Split by cohomological degree (wedge degree p lives in degree -p)."""
        buckets: dict[int, dict[TermKey, Fraction]] = {}
        for (exps, subset), c in self.terms.items():
            buckets.setdefault(-len(subset), {})[(exps, subset)] = c
        return {d: ExtElt(self.ambient, t) for d, t in buckets.items()}

    def is_homogeneous(self) -> bool:
        return len({len(s) for (_, s) in self.terms}) <= 1

    def degree(self) -> int:
        """Cohomological degree; zero elements report 0, mixed ones raise."""
        sizes = {len(s) for (_, s) in self.terms}
        if not sizes:
            return 0
        if len(sizes) > 1:
            raise ValueError("element is not homogeneous")
        return -sizes.pop()

    def map_coefficients(self, fn: Callable[[Poly], Poly]) -> "ExtElt":
        """Apply an R-linear map to each wedge monomial's polynomial coefficient."""
        out: dict[TermKey, Fraction] = {}
        for subset in self.subsets():
            img = fn(self.coefficient_poly(subset))
            for exps, c in img.terms.items():
                key = (exps, subset)
                s = out.get(key, Fraction(0)) + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return ExtElt(self.ambient, out)

    # -- printing --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: degrevlex_key(k[0]), reverse=True)
        keys.sort(key=lambda k: (len(k[1]), k[1]))
        pieces = []
        for exps, subset in keys:
            c = self.terms[(exps, subset)]
            mag = abs(c)
            mono = monomial_str(self.ambient.vars, exps)
            scalar_parts = []
            if mag != 1 or (not mono and not subset):
                scalar_parts.append(str(mag))
            if mono:
                scalar_parts.append(mono)
            gen_part = "/\\".join(self.ambient.gens[j] for j in subset)
            body = "*".join(scalar_parts)
            if gen_part:
                body = f"{body}*{gen_part}" if body else gen_part
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"ExtElt({str(self)!r})"


@dataclass(frozen=True)
class Section:
    """An m-tuple of polynomials pairing against the exterior generators."""

    ambient: Ambient
    components: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.components) != self.ambient.rank:
            raise ValueError(f"expected {self.ambient.rank} components, got {len(self.components)}")
        for p in self.components:
            if p.vars != self.ambient.vars:
                raise ValueError("section component lives over different variables")

    @classmethod
    def zero(cls, ambient: Ambient) -> "Section":
        return cls(ambient, tuple(Poly.zero(ambient.vars) for _ in range(ambient.rank)))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.components) + ")"


def wedge(a: ExtElt, b: ExtElt) -> ExtElt:
    """Graded-commutative product."""
    a._check(b)
    terms: dict[TermKey, Fraction] = {}
    for (e1, s1), c1 in a.terms.items():
        for (e2, s2), c2 in b.terms.items():
            sign, merged = merge_sign(s1, s2)
            if sign == 0:
                continue
            key = (exps_add(e1, e2), merged)
            s = terms.get(key, Fraction(0)) + sign * c1 * c2
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    return ExtElt(a.ambient, terms)


def contract(s: Section, a: ExtElt) -> ExtElt:
    """Contraction of a along the section s; cohomological degree +1.

    On a wedge monomial e_{j_1} ^ ... ^ e_{j_p} the value is
    sum_k (-1)^k s_{j_k} e_{j_1} ^ ... omit k ... ^ e_{j_p}, k from 1.
    Squares to zero; a graded derivation up to the sign of the left factor.
    """
    if s.ambient != a.ambient:
        raise ValueError("section and element live in different ambients")
    terms: dict[TermKey, Fraction] = {}
    for (exps, subset), c in a.terms.items():
        for k0, j in enumerate(subset):
            sign = -1 if k0 % 2 == 0 else 1
            rest = subset[:k0] + subset[k0 + 1:]
            for sexps, sc in s.components[j].terms.items():
                key = (exps_add(exps, sexps), rest)
                v = terms.get(key, Fraction(0)) + sign * c * sc
                if v:
                    terms[key] = v
                else:
                    terms.pop(key, None)
    return ExtElt(a.ambient, terms)
