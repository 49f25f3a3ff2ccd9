"""Polyvector fields: the odd bracket, the divergence operator, and forms.

Polyvector fields on affine n-space are exterior elements over the ambient
with one odd generator @x_i per coordinate (wedge degree p in cohomological
degree -p).  One convention ties everything in this module together, and the
randomized identity suites in `check_*` are the normative statement of it:

  * the bracket of a vector field and a function is the directional
    derivative, and on vector fields it is the Lie bracket;
  * the divergence operator `bv_delta` sends f*@x to df/dx, squares to
    zero, and corresponds to the de Rham differential under contraction
    with a constant volume form;
  * the bracket measures exactly the failure of `bv_delta` to be a
    derivation (the generating relation below).

Closed formula used here, for a of pure wedge degree p (extended linearly):

    [[a, b]] = (-1)^(p+1) * sum_i od_i(a) ^ d_i(b)  -  sum_i d_i(a) ^ od_i(b)

where od_i is the left odd derivative along @x_i and d_i differentiates the
polynomial coefficients along x_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Sequence, Union

from .checks import (CheckReport, rand_homogeneous, rand_mixed, rand_poly,
                     shrink_elements, var_names)
from .exterior import Ambient, ExtElt, Section, contract, merge_sign, wedge
from .poly import Poly, gradient

Scalar = Union[int, Fraction]


def polyvector_ambient(vars: Sequence[str]) -> Ambient:
    vs = tuple(vars)
    return Ambient(vs, tuple("@" + v for v in vs))


def form_ambient(vars: Sequence[str]) -> Ambient:
    vs = tuple(vars)
    return Ambient(vs, tuple("d_" + v for v in vs))


def _require_polyvector(a: ExtElt) -> None:
    amb = a.ambient
    if amb.gens != tuple("@" + v for v in amb.vars):
        raise ValueError("expected an element of the polyvector ambient")


# -- one-forms ----------------------------------------------------------------


@dataclass(frozen=True)
class OneForm:
    """A 1-form sum a_i d_x_i, stored by components."""

    vars: tuple[str, ...]
    components: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.components) != len(self.vars):
            raise ValueError("need one component per variable")
        for p in self.components:
            if p.vars != self.vars:
                raise ValueError("component lives over different variables")

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "OneForm":
        vs = tuple(vars)
        return cls(vs, tuple(Poly.zero(vs) for _ in vs))

    @classmethod
    def differential_of(cls, f: Poly) -> "OneForm":
        return cls(f.vars, gradient(f))

    def closedness_witness(self) -> dict | None:
        """None when closed, else the first failing pair of partials."""
        n = len(self.vars)
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.components[j].diff(self.vars[i])
                rhs = self.components[i].diff(self.vars[j])
                if lhs != rhs:
                    return {
                        "pair": (self.vars[i], self.vars[j]),
                        "d_" + self.vars[i] + "(a_" + self.vars[j] + ")": str(lhs),
                        "d_" + self.vars[j] + "(a_" + self.vars[i] + ")": str(rhs),
                    }
        return None

    def is_closed(self) -> bool:
        return self.closedness_witness() is None

    def as_section(self, ambient: Ambient) -> Section:
        """The pairing against @-generators: component i pairs with @x_i."""
        if ambient != polyvector_ambient(self.vars):
            raise ValueError("ambient does not match this form's variables")
        return Section(ambient, self.components)

    def to_ext(self) -> ExtElt:
        amb = form_ambient(self.vars)
        out = ExtElt.zero(amb)
        for i, p in enumerate(self.components):
            out = out + ExtElt.wedge_monomial(amb, p, (i,))
        return out

    def __str__(self) -> str:
        return str(self.to_ext())


def d_alpha(alpha: OneForm, a: ExtElt) -> ExtElt:
    """Contraction of a polyvector field along a 1-form; degree +1."""
    _require_polyvector(a)
    if a.ambient.vars != alpha.vars:
        raise ValueError("form and field live over different variables")
    return contract(alpha.as_section(a.ambient), a)


def apply_vector(X: ExtElt, f: Poly) -> Poly:
    """Directional derivative X(f) of a vector field."""
    _require_polyvector(X)
    if any(len(s) != 1 for s in X.subsets()):
        raise ValueError("expected a vector field (pure wedge degree one)")
    vs = X.ambient.vars
    out = Poly.zero(vs)
    for i, v in enumerate(vs):
        xi = X.coefficient_poly((i,))
        if not xi.is_zero():
            out = out + xi * f.diff(v)
    return out


def alpha_of_vector(alpha: OneForm, X: ExtElt) -> Poly:
    """Evaluation alpha(X) = sum a_i X^i."""
    _require_polyvector(X)
    if X.ambient.vars != alpha.vars:
        raise ValueError("form and field live over different variables")
    out = Poly.zero(alpha.vars)
    for i in range(len(alpha.vars)):
        xi = X.coefficient_poly((i,))
        if not xi.is_zero():
            out = out + alpha.components[i] * xi
    return out


# -- derivatives and the bracket ----------------------------------------------


def odd_derivative(a: ExtElt, i: int) -> ExtElt:
    """Left derivative along the i-th odd generator."""
    terms: dict = {}
    for (exps, subset), c in a.terms.items():
        if i not in subset:
            continue
        k0 = subset.index(i)
        sign = 1 if k0 % 2 == 0 else -1
        key = (exps, subset[:k0] + subset[k0 + 1:])
        v = terms.get(key, Fraction(0)) + sign * c
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
    return ExtElt(a.ambient, terms)


def coeff_derivative(a: ExtElt, i: int) -> ExtElt:
    """Partial derivative of the polynomial coefficients along x_i."""
    var = a.ambient.vars[i]
    return a.map_coefficients(lambda p: p.diff(var))


def schouten(a: ExtElt, b: ExtElt) -> ExtElt:
    """The odd bracket of polyvector fields (degree +1 in each slot)."""
    _require_polyvector(a)
    if a.ambient != b.ambient:
        raise ValueError("mixed ambients")
    n = len(a.ambient.vars)
    result = ExtElt.zero(a.ambient)
    for deg, comp in a.homogeneous_components().items():
        p = -deg
        front = 1 if (p + 1) % 2 == 0 else -1
        for i in range(n):
            da = odd_derivative(comp, i)
            if not da.is_zero():
                db = coeff_derivative(b, i)
                if not db.is_zero():
                    result = result + front * wedge(da, db)
            xa = coeff_derivative(comp, i)
            if not xa.is_zero():
                ob = odd_derivative(b, i)
                if not ob.is_zero():
                    result = result - wedge(xa, ob)
    return result


# -- volume forms, contraction, de Rham, divergence ----------------------------


@dataclass(frozen=True)
class VolumeForm:
    """A constant multiple of dx_1 ^ ... ^ dx_n."""

    vars: tuple[str, ...]
    density: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "density", Fraction(self.density))
        if self.density == 0:
            raise ValueError("volume density must be nonzero")


def _complement(subset: tuple[int, ...], n: int) -> tuple[int, ...]:
    inside = set(subset)
    return tuple(i for i in range(n) if i not in inside)


def _vol_factor(subset: tuple[int, ...], n: int, density: Fraction) -> Fraction:
    p = len(subset)
    tau = 1 if (p * (p - 1) // 2) % 2 == 0 else -1
    sign, _ = merge_sign(subset, _complement(subset, n))
    return tau * sign * density


def vol_contract(vol: VolumeForm, a: ExtElt) -> ExtElt:
    """Contraction into the volume form: wedge degree p to form degree n-p."""
    _require_polyvector(a)
    if a.ambient.vars != vol.vars:
        raise ValueError("volume form lives over different variables")
    n = len(vol.vars)
    amb = form_ambient(vol.vars)
    terms: dict = {}
    for (exps, subset), c in a.terms.items():
        key = (exps, _complement(subset, n))
        terms[key] = terms.get(key, Fraction(0)) + c * _vol_factor(subset, n, vol.density)
    return ExtElt(amb, {k: v for k, v in terms.items() if v})


def vol_contract_inv(vol: VolumeForm, w: ExtElt) -> ExtElt:
    """Inverse of vol_contract (the contraction is a bijection on bases)."""
    if w.ambient != form_ambient(vol.vars):
        raise ValueError("expected an element of the form ambient")
    n = len(vol.vars)
    amb = polyvector_ambient(vol.vars)
    terms: dict = {}
    for (exps, subset), c in w.terms.items():
        src = _complement(subset, n)
        factor = _vol_factor(src, n, vol.density)
        key = (exps, src)
        terms[key] = terms.get(key, Fraction(0)) + c / factor
    return ExtElt(amb, {k: v for k, v in terms.items() if v})


def de_rham(w: ExtElt) -> ExtElt:
    """Exterior derivative on polynomial differential forms."""
    amb = w.ambient
    if amb.gens != tuple("d_" + v for v in amb.vars):
        raise ValueError("expected an element of the form ambient")
    n = len(amb.vars)
    terms: dict = {}
    for (exps, subset), c in w.terms.items():
        for i in range(n):
            k = exps[i]
            if k == 0 or i in subset:
                continue
            sign, merged = merge_sign((i,), subset)
            key = (exps[:i] + (k - 1,) + exps[i + 1:], merged)
            v = terms.get(key, Fraction(0)) + c * k * sign
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
    return ExtElt(amb, terms)


def bv_delta(vol: VolumeForm, a: ExtElt) -> ExtElt:
    """Divergence operator: sum_i d/dx_i applied after the odd derivative.

    Any constant density gives the same operator; the volume form argument
    records which contraction identifies it with the de Rham differential.
    """
    _require_polyvector(a)
    if a.ambient.vars != vol.vars:
        raise ValueError("volume form lives over different variables")
    out = ExtElt.zero(a.ambient)
    for i in range(len(vol.vars)):
        out = out + coeff_derivative(odd_derivative(a, i), i)
    return out


# -- randomized identity suites -------------------------------------------------


def _shifted_sign(a: ExtElt, b: ExtElt) -> int:
    """(-1)^((|a|+1)(|b|+1)) for homogeneous a, b."""
    e = (a.degree() + 1) * (b.degree() + 1)
    return 1 if e % 2 == 0 else -1


def check_gerstenhaber(n: int, trials: int = 200, seed: int = 0, max_deg: int = 3) -> CheckReport:
    """Antisymmetry, Jacobi, and Leibniz for the odd bracket, randomized."""
    vars = var_names(n)
    amb = polyvector_ambient(vars)
    rng = Random(seed)
    ran = 0
    for _ in range(trials):
        a = rand_homogeneous(rng, amb, max_deg)
        b = rand_homogeneous(rng, amb, max_deg)
        c = rand_homogeneous(rng, amb, max_deg)
        ran += 1

        def anti_fails(a, b):
            return schouten(a, b) != -_shifted_sign(a, b) * schouten(b, a)

        def jacobi_fails(a, b, c):
            lhs = schouten(a, schouten(b, c))
            rhs = schouten(schouten(a, b), c) + _shifted_sign(a, b) * schouten(b, schouten(a, c))
            return lhs != rhs

        def leibniz_fails(a, b, c):
            sign = 1 if ((a.degree() + 1) * b.degree()) % 2 == 0 else -1
            lhs = schouten(a, wedge(b, c))
            rhs = wedge(schouten(a, b), c) + sign * wedge(b, schouten(a, c))
            return lhs != rhs

        for name, fails, elts in (("antisymmetry", anti_fails, [a, b]),
                                  ("jacobi", jacobi_fails, [a, b, c]),
                                  ("leibniz", leibniz_fails, [a, b, c])):
            if fails(*elts):
                small = shrink_elements(fails, elts)
                ce = {"identity": name}
                for label, e in zip("abc", small):
                    ce[label] = str(e)
                return CheckReport("gerstenhaber", "fail", ran, ce, {"n": n})
    return CheckReport("gerstenhaber", "pass", ran, None, {"n": n})


def check_bracket_compat(alpha: OneForm, trials: int = 50, seed: int = 0,
                         max_deg: int = 2) -> CheckReport:
    """Compatibility of contraction along alpha with the bracket.

    Two probe families: the scalar identity
        alpha([X, Y]) = -Y(alpha(X)) + X(alpha(Y))
    over all coordinate pairs and random vector fields, and the derivation
    identity
        d_alpha [[a, b]] = [[d_alpha a, b]] + (-1)^(|a|+1) [[a, d_alpha b]]
    on random homogeneous fields.  Both hold exactly when alpha is closed;
    for a non-closed form the coordinate sweep finds a counterexample, and
    the report carries it with its discrepancy (probe value minus
    alpha([X, Y])).
    """
    vars = alpha.vars
    amb = polyvector_ambient(vars)
    rng = Random(seed)
    closed = alpha.is_closed()
    details = {"alpha": str(alpha), "closed": closed}
    n = len(vars)
    ran = 0

    def scalar_probe(X: ExtElt, Y: ExtElt) -> dict | None:
        lie = schouten(X, Y)
        lhs = alpha_of_vector(alpha, lie)
        rhs = -apply_vector(Y, alpha_of_vector(alpha, X)) + apply_vector(X, alpha_of_vector(alpha, Y))
        if lhs == rhs:
            return None
        return {"identity": "scalar", "X": str(X), "Y": str(Y),
                "alpha_of_bracket": str(lhs), "probe_value": str(rhs),
                "discrepancy": str(rhs - lhs)}

    for i in range(n):
        for j in range(i + 1, n):
            ran += 1
            ce = scalar_probe(ExtElt.generator(amb, i), ExtElt.generator(amb, j))
            if ce is not None:
                return CheckReport("bracket_compat", "fail", ran, ce, details)
    for _ in range(trials):
        ran += 1
        X = rand_homogeneous(rng, amb, max_deg, wedge_degree=1)
        Y = rand_homogeneous(rng, amb, max_deg, wedge_degree=1)
        ce = scalar_probe(X, Y)
        if ce is not None:
            return CheckReport("bracket_compat", "fail", ran, ce, details)

        a = rand_homogeneous(rng, amb, max_deg)
        b = rand_homogeneous(rng, amb, max_deg)

        def derivation_fails(a, b):
            sign = 1 if (a.degree() + 1) % 2 == 0 else -1
            lhs = d_alpha(alpha, schouten(a, b))
            rhs = schouten(d_alpha(alpha, a), b) + sign * schouten(a, d_alpha(alpha, b))
            return lhs != rhs

        if derivation_fails(a, b):
            small = shrink_elements(derivation_fails, [a, b])
            ce = {"identity": "derivation", "a": str(small[0]), "b": str(small[1])}
            return CheckReport("bracket_compat", "fail", ran, ce, details)
    return CheckReport("bracket_compat", "pass", ran, None, details)


def check_bv(n: int, trials: int = 200, seed: int = 0, max_deg: int = 3) -> CheckReport:
    """The divergence operator: square zero, generating relation, de Rham.

    Also hunts for a witness that the operator is not a derivation (one must
    exist for n >= 1), and records whether it anticommutes with contraction
    along exact 1-forms on the inputs tried.
    """
    vars = var_names(n)
    amb = polyvector_ambient(vars)
    rng = Random(seed)
    vol = VolumeForm(vars)
    vol2 = VolumeForm(vars, Fraction(rng.randint(2, 7), rng.randint(1, 3)))
    details: dict = {"n": n, "densities": [str(vol.density), str(vol2.density)]}

    x1 = Poly.variable(vars, vars[0])
    if bv_delta(vol, ExtElt.wedge_monomial(amb, x1, (0,))) != ExtElt.one(amb):
        return CheckReport("bv", "fail", 0,
                           {"identity": "normalization", "input": f"{vars[0]}*@{vars[0]}"},
                           details)

    def deviation(a: ExtElt, b: ExtElt) -> ExtElt:
        sign = 1 if (-a.degree()) % 2 == 0 else -1
        return bv_delta(vol, wedge(a, b)) - wedge(bv_delta(vol, a), b) - sign * wedge(a, bv_delta(vol, b))

    witness = None
    candidates = [(ExtElt.wedge_monomial(amb, x1, (0,)), ExtElt.from_poly(amb, x1))]
    if n >= 2:
        x2 = Poly.variable(vars, vars[1])
        candidates.append((ExtElt.wedge_monomial(amb, x2, (0,)),
                           ExtElt.wedge_monomial(amb, x1, (1,))))
    for a, b in candidates:
        dev = deviation(a, b)
        if not dev.is_zero():
            witness = {"a": str(a), "b": str(b), "deviation": str(dev)}
            break

    anticommute = True
    ran = 0
    for _ in range(trials):
        ran += 1
        v = rand_mixed(rng, amb, max_deg)
        a = rand_homogeneous(rng, amb, max_deg)
        b = rand_mixed(rng, amb, max_deg)

        def square_fails(v):
            return not bv_delta(vol, bv_delta(vol, v)).is_zero()

        if square_fails(v):
            small = shrink_elements(square_fails, [v])
            return CheckReport("bv", "fail", ran,
                               {"identity": "square_zero", "input": str(small[0])}, details)

        def generating_fails(a, b):
            p = -a.degree()
            front = 1 if (p + 1) % 2 == 0 else -1
            return schouten(a, b) != front * deviation(a, b)

        if generating_fails(a, b):
            small = shrink_elements(generating_fails, [a, b])
            return CheckReport("bv", "fail", ran,
                               {"identity": "generating_relation",
                                "a": str(small[0]), "b": str(small[1])}, details)

        def intertwine_fails(v):
            return any(vol_contract(vf, bv_delta(vf, v)) != de_rham(vol_contract(vf, v))
                       for vf in (vol, vol2))

        if intertwine_fails(v):
            small = shrink_elements(intertwine_fails, [v])
            return CheckReport("bv", "fail", ran,
                               {"identity": "volume_intertwine", "input": str(small[0])}, details)

        if witness is None:
            dev = deviation(a, b)
            if not dev.is_zero():
                witness = {"a": str(a), "b": str(b), "deviation": str(dev)}

        f = rand_poly(rng, vars, max_deg)
        alpha = OneForm.differential_of(f)
        if bv_delta(vol, d_alpha(alpha, v)) + d_alpha(alpha, bv_delta(vol, v)) != ExtElt.zero(amb):
            anticommute = False

    details["delta_d_alpha_anticommute"] = "holds on all trials" if anticommute else "violated"
    if witness is None:
        return CheckReport("bv", "fail", ran,
                           {"identity": "non_derivation",
                            "reason": "no witness found, but one must exist"}, details)
    details["non_derivation_witness"] = witness
    return CheckReport("bv", "pass", ran, None, details)
