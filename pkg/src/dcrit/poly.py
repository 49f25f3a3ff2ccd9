"""Exact multivariate polynomial arithmetic over the rationals.

A polynomial is a sparse map from exponent vectors to nonzero Fraction
coefficients, canonical by construction: two polynomials are equal exactly
when their variable tuples and term maps are equal.  No floating point is
used anywhere.  The monomial order for printing and leading-term extraction
is degree-reverse-lexicographic with respect to the declared variable order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]

# weighted_degree() sentinels: the zero polynomial is homogeneous of every
# weight, and a mixed-weight polynomial has no weight at all.
ANY_DEGREE = "any"
INHOMOGENEOUS = "inhomogeneous"


class UnknownVariableError(ValueError):
    pass


def degrevlex_key(exps: Exponents) -> tuple:
    """Sort key for exponent vectors: larger key = larger monomial.

    Degrevlex compares total degree first; ties go to the vector whose
    rightmost nonzero entry of the difference is negative, which is the
    same as comparing the reversed negated tuple lexicographically.
    """
    return (sum(exps), tuple(-e for e in reversed(exps)))


def exps_add(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Immutable sparse polynomial over Q in a fixed tuple of variables.

    Instances must not be mutated after construction; every operation
    returns a fresh polynomial, so values can be shared freely.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponents, Scalar]):
        vs = tuple(vars)
        n = len(vs)
        clean: dict[Exponents, Fraction] = {}
        for exps, c in terms.items():
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps!r} does not match {n} variables")
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls(vars, {})

    @classmethod
    def one(cls, vars: Sequence[str]) -> "Poly":
        return cls(vars, {(0,) * len(vars): Fraction(1)})

    @classmethod
    def constant(cls, vars: Sequence[str], c: Scalar) -> "Poly":
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Poly":
        vs = tuple(vars)
        if name not in vs:
            raise UnknownVariableError(f"unknown variable {name!r} (have {', '.join(vs) or 'none'})")
        i = vs.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(vs)))
        return cls(vs, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, vars: Sequence[str], exps: Exponents, c: Scalar = 1) -> "Poly":
        return cls(vars, {tuple(exps): Fraction(c)})

    # -- ring operations ---------------------------------------------------

    def _check_same_ring(self, other: "Poly") -> None:
        if self.vars != other.vars:
            raise ValueError(f"mixed variable tuples {self.vars} vs {other.vars}")

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_ring(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Poly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly(self.vars, {e: c * v for e, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_ring(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exps_add(e1, e2)
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Poly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.one(self.vars)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None  # mutable-looking API; not intended as a dict key

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        """Coefficient of the constant monomial (the whole value if constant)."""
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading(self) -> tuple[Exponents, Fraction]:
        """Leading (exponents, coefficient) under degrevlex; error on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=degrevlex_key)
        return e, self.terms[e]

    def diff(self, var: str) -> "Poly":
        """Formal partial derivative with respect to one variable."""
        if var not in self.vars:
            raise UnknownVariableError(f"unknown variable {var!r}")
        i = self.vars.index(var)
        terms: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            k = exps[i]
            if k:
                e = exps[:i] + (k - 1,) + exps[i + 1:]
                terms[e] = terms.get(e, Fraction(0)) + c * k
        return Poly(self.vars, terms)

    def weighted_degree(self, weights):
        """Weight of a quasi-homogeneous polynomial.

        weights: positive weights per variable, as a sequence aligned with
        self.vars or a mapping from names.  Returns the common weighted
        degree, or ANY_DEGREE for zero, or INHOMOGENEOUS if terms disagree.
        """
        ws = normalize_weights(self.vars, weights)
        if not self.terms:
            return ANY_DEGREE
        degs = {sum(w * e for w, e in zip(ws, exps)) for exps in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return INHOMOGENEOUS

    def substitute(self, images: Mapping[str, "Poly"], vars_out: Sequence[str] | None = None) -> "Poly":
        """Ring map sending each variable to a polynomial.

        Variables missing from `images` map to the same-named variable of
        the target ring.  All images must live in one target ring; when
        every variable is defaulted, vars_out picks the target.
        """
        if images:
            target = next(iter(images.values())).vars
        elif vars_out is not None:
            target = tuple(vars_out)
        else:
            target = self.vars
        if vars_out is not None and tuple(vars_out) != target:
            raise ValueError("images do not live in the requested target ring")
        imgs: list[Poly] = []
        for v in self.vars:
            if v in images:
                img = images[v]
                if img.vars != target:
                    raise ValueError("images live in different rings")
                imgs.append(img)
            else:
                imgs.append(Poly.variable(target, v))
        result = Poly.zero(target)
        for exps, c in self.terms.items():
            part = Poly.constant(target, c)
            for i, k in enumerate(exps):
                for _ in range(k):
                    part = part * imgs[i]
            result = result + part
        return result

    # -- printing ----------------------------------------------------------

    def _monomial_str(self, exps: Exponents) -> str:
        return monomial_str(self.vars, exps)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, key=degrevlex_key, reverse=True):
            c = self.terms[exps]
            mono = self._monomial_str(exps)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def monomial_str(vars: Sequence[str], exps: Exponents) -> str:
    """Render an exponent vector as 'x^2*y'; the empty product renders as ''."""
    parts = []
    for v, e in zip(vars, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def normalize_weights(vars: Sequence[str], weights) -> tuple[int, ...]:
    """Accept weights as a per-variable sequence or a name-keyed mapping."""
    vs = tuple(vars)
    if isinstance(weights, Mapping):
        missing = [v for v in vs if v not in weights]
        if missing:
            raise ValueError(f"missing weights for {missing}")
        ws = tuple(int(weights[v]) for v in vs)
    else:
        ws = tuple(int(w) for w in weights)
        if len(ws) != len(vs):
            raise ValueError(f"expected {len(vs)} weights, got {len(ws)}")
    if any(w <= 0 for w in ws):
        raise ValueError("weights must be positive")
    return ws


def gradient(f: Poly) -> tuple[Poly, ...]:
    """All partial derivatives of f, in variable order."""
    return tuple(f.diff(v) for v in f.vars)


def monomials_of_weight(weights: Sequence[int], w: int) -> list[Exponents]:
    """All exponent vectors of the given weighted degree, degrevlex-sorted.

    Weights must be positive, so each slice is finite.  With no variables
    the answer is [()] at weight 0 and empty otherwise.
    """
    ws = tuple(int(x) for x in weights)
    if any(x <= 0 for x in ws):
        raise ValueError("weights must be positive")
    out: list[Exponents] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if i == len(ws):
            if remaining == 0:
                out.append(prefix)
            return
        if i == len(ws) - 1:
            q, r = divmod(remaining, ws[i])
            if r == 0:
                out.append(prefix + (q,))
            return
        for k in range(remaining // ws[i] + 1):
            rec(i + 1, remaining - k * ws[i], prefix + (k,))

    if w >= 0:
        rec(0, w, ())
    return sorted(out, key=degrevlex_key)
