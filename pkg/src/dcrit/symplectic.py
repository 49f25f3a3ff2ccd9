"""Two-term tangent complexes of critical loci and their shifted pairing.

For f in Q[x_1..x_n], the critical locus carries the two-term complex
T^0 -> T^1 (both free of rank n) with differential the Hessian of f.  The
symmetry of that matrix is exactly what makes the degree -1 pairing of the
complex with itself well defined, and the pairing is perfect levelwise
(the duality map is the identity on the chosen bases).  Intersections of
graph Lagrangians reduce to Koszul complexes of differences of closed
1-forms, with the same Hessian-style pairing attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import INFINITE, jacobian_ideal, standard_monomials
from .koszul import KoszulComplex, build_koszul
from .linalg import rank_rows
from .poly import Poly, gradient
from .polyvec import OneForm, polyvector_ambient


def hessian(f: Poly) -> list[list[Poly]]:
    """Matrix of second partials, in variable order."""
    vs = f.vars
    grads = gradient(f)
    return [[grads[i].diff(vs[j]) for j in range(len(vs))] for i in range(len(vs))]


def matrix_transpose(m: list[list[Poly]]) -> list[list[Poly]]:
    return [list(row) for row in zip(*m)] if m else []


def is_symmetric(m: list[list[Poly]]) -> bool:
    return m == matrix_transpose(m)


@dataclass(frozen=True)
class TwoTermComplex:
    """Free modules in degrees 0 and 1 with a square polynomial matrix."""

    vars: tuple[str, ...]
    matrix: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        for row in self.matrix:
            if len(row) != n:
                raise ValueError("differential matrix must be square")
            for p in row:
                if p.vars != self.vars:
                    raise ValueError("matrix entry lives over different variables")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def degrees(self) -> tuple[int, ...]:
        return (0,)

    def differential_matrix(self, p: int) -> list[list[Poly]]:
        if p == 0:
            return [list(row) for row in self.matrix]
        return []


def tangent_complex(f: Poly) -> TwoTermComplex:
    return TwoTermComplex(f.vars, tuple(tuple(row) for row in hessian(f)))


@dataclass(frozen=True)
class PairingReport:
    """The degree -1 pairing data attached to a two-term complex."""

    matrix: tuple[tuple[Poly, ...], ...]
    symmetric: bool
    nondegenerate: bool
    duality_map: str

    def to_json(self) -> dict:
        flat = [str(p) for row in self.matrix for p in row]
        return {"hessian": flat, "symmetric": self.symmetric,
                "nondegenerate": self.nondegenerate}


def pairing_report(complex: TwoTermComplex) -> PairingReport:
    """Symmetry decides everything: an asymmetric matrix admits no pairing.

    When the matrix is symmetric the pairing is perfect levelwise, with the
    identity matrix as duality map on the chosen bases.
    """
    sym = is_symmetric([list(r) for r in complex.matrix])
    duality = ("identity on the chosen bases (perfect levelwise)" if sym
               else "none: differential is not self-adjoint")
    return PairingReport(complex.matrix, sym, sym, duality)


def minus_one_pairing(f: Poly) -> PairingReport:
    return pairing_report(tangent_complex(f))


@dataclass(frozen=True)
class ObstructionReport:
    """The tangent complex restricted to the critical locus.

    quotient_dim is dim_Q of R modulo the partials (INFINITE when the
    critical locus is not isolated, in which case the restricted ranks are
    not computed and the remaining fields are None).  h0 and h1 are the
    kernel and cokernel dimensions of the Hessian acting on the quotient.
    """

    hessian: tuple[tuple[Poly, ...], ...]
    symmetric: bool
    quotient_dim: object  # int or INFINITE
    h0: int | None = None
    h1: int | None = None
    hessian_invertible: bool | None = None

    def to_json(self) -> dict:
        flat = [str(p) for row in self.hessian for p in row]
        return {"hessian": flat, "symmetric": self.symmetric,
                "quotient_dim": self.quotient_dim,
                "h0": self.h0, "h1": self.h1,
                "hessian_invertible": self.hessian_invertible}


def obstruction_theory(f: Poly) -> ObstructionReport:
    """Restrict the Hessian to the critical quotient and measure exactness."""
    h = hessian(f)
    sym = is_symmetric(h)
    gb = jacobian_ideal(f)
    monos = standard_monomials(gb)
    if monos is None:
        return ObstructionReport(tuple(tuple(r) for r in h), sym, INFINITE)
    mu = len(monos)
    n = len(f.vars)
    index = {m: k for k, m in enumerate(monos)}
    rows: list[dict[int, Fraction]] = [dict() for _ in range(n * mu)]
    for j in range(n):
        for col_m, mono in enumerate(monos):
            col = j * mu + col_m
            basis_poly = Poly.monomial(f.vars, mono)
            for i in range(n):
                if h[i][j].is_zero():
                    continue
                reduced = gb.normal_form(h[i][j] * basis_poly)
                for exps, c in reduced.terms.items():
                    rows[i * mu + index[exps]][col] = \
                        rows[i * mu + index[exps]].get(col, Fraction(0)) + c
    rank = rank_rows(rows)
    return ObstructionReport(tuple(tuple(r) for r in h), sym, mu,
                             h0=n * mu - rank, h1=n * mu - rank,
                             hessian_invertible=(rank == n * mu))


class NotClosedError(ValueError):
    """A graph Lagrangian needs a closed 1-form; carries the witness."""

    def __init__(self, label: str, witness: dict):
        self.label = label
        self.witness = witness
        pair = witness.get("pair")
        super().__init__(f"1-form {label} is not closed: mixed partials differ on {pair}: "
                         + ", ".join(f"{k}={v}" for k, v in witness.items() if k != "pair"))


@dataclass(frozen=True)
class LagrangianIntersection:
    """Koszul complex of the difference form, plus its pairing."""

    complex: KoszulComplex
    pairing: PairingReport


def intersect_graph_lagrangians(alpha: OneForm, beta: OneForm) -> LagrangianIntersection:
    """Derived intersection of the graphs of two closed 1-forms.

    Rejects non-closed input with a NotClosedError naming the offending
    form and the failing pair of partials.  The complex is the Koszul
    complex of alpha - beta on polyvector generators; the pairing matrix
    is the Jacobian of the difference, symmetric because both forms are
    closed.
    """
    if alpha.vars != beta.vars:
        raise ValueError("forms live over different variables")
    for label, form in (("alpha", alpha), ("beta", beta)):
        w = form.closedness_witness()
        if w is not None:
            raise NotClosedError(label, w)
    vs = alpha.vars
    diff = tuple(a - b for a, b in zip(alpha.components, beta.components))
    amb = polyvector_ambient(vs)
    complex = build_koszul(vs, diff, gens=amb.gens)
    jac = tuple(tuple(diff[i].diff(vs[j]) for j in range(len(vs))) for i in range(len(vs)))
    sym = is_symmetric([list(r) for r in jac])
    duality = ("identity on the chosen bases (perfect levelwise)" if sym
               else "none: differential is not self-adjoint")
    return LagrangianIntersection(complex, PairingReport(jac, sym, sym, duality))
