"""Cohomology of Koszul complexes through finite weight slices.

For a quasi-homogeneous section, every differential preserves weighted
degree once each exterior generator is assigned the weight of its section
component, so the complex splits into finite-dimensional slices; each slice
is handled by exact rank computation.  Degree-zero results can be
cross-checked against the Groebner quotient dimension, which is an
independent route to the same number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence, Union

from .groebner import INFINITE, buchberger, quotient_dimension
from .koszul import KoszulComplex, TautologicalKoszul
from .linalg import rank_rows
from .poly import (ANY_DEGREE, INHOMOGENEOUS, Exponents, Poly, exps_add,
                   monomials_of_weight, normalize_weights)

ComplexLike = Union[KoszulComplex, TautologicalKoszul]


class InhomogeneousSectionError(ValueError):
    """A section component mixes weighted degrees, so slicing is unavailable."""

    def __init__(self, component: int, polynomial: Poly):
        super().__init__(
            f"section component {component + 1} ({polynomial}) is not quasi-homogeneous "
            "for the given weights")
        self.component = component
        self.polynomial = polynomial


def as_koszul(c: ComplexLike) -> KoszulComplex:
    return getattr(c, "complex", c)


def generator_degrees(complex_like: ComplexLike, weights) -> tuple[int, ...]:
    """Weight of each exterior generator: that of its section component.

    Zero components put no constraint on their generator; they inherit the
    common weight of the nonzero components when there is one, else 1.
    """
    c = as_koszul(complex_like)
    ws = normalize_weights(c.ambient.vars, weights)
    raw = []
    for j, p in enumerate(c.section.components):
        d = p.weighted_degree(ws)
        if d == INHOMOGENEOUS:
            raise InhomogeneousSectionError(j, p)
        raw.append(d)
    seen = {d for d in raw if d != ANY_DEGREE}
    default = seen.pop() if len(seen) == 1 else 1
    return tuple(default if d == ANY_DEGREE else d for d in raw)


def slice_basis(complex_like: ComplexLike, weights, p: int, w: int) -> list[tuple[Exponents, tuple[int, ...]]]:
    """Basis of the weight-w part of cohomological degree p."""
    c = as_koszul(complex_like)
    ws = normalize_weights(c.ambient.vars, weights)
    gd = generator_degrees(c, ws)
    return _slice_basis(c, ws, gd, p, w)


def _slice_basis(c: KoszulComplex, ws, gd, p: int, w: int):
    if not -c.rank <= p <= 0:
        return []
    out = []
    for subset in combinations(range(c.rank), -p):
        rem = w - sum(gd[j] for j in subset)
        if rem < 0:
            continue
        for exps in monomials_of_weight(ws, rem):
            out.append((exps, subset))
    return out


def _slice_ranks(c: KoszulComplex, ws, gd, w: int) -> tuple[dict[int, int], dict[int, int]]:
    """Per-degree slice dimensions and ranks of the outgoing differentials."""
    m = c.rank
    bases = {p: _slice_basis(c, ws, gd, p, w) for p in range(-m, 1)}
    dims = {p: len(b) for p, b in bases.items()}
    section_terms = [list(comp.terms.items()) for comp in c.section.components]
    ranks: dict[int, int] = {}
    for p in range(-m, 0):
        source = bases[p]
        if not source or not bases[p + 1]:
            ranks[p] = 0
            continue
        index = {key: i for i, key in enumerate(bases[p + 1])}
        cols = []
        for exps, subset in source:
            col: dict[int, Fraction] = {}
            for k0, j in enumerate(subset):
                sign = -1 if k0 % 2 == 0 else 1
                rest = subset[:k0] + subset[k0 + 1:]
                for sexps, sc in section_terms[j]:
                    key = (exps_add(exps, sexps), rest)
                    i = index[key]  # contraction preserves the slice
                    v = col.get(i, Fraction(0)) + sign * sc
                    if v:
                        col[i] = v
                    else:
                        col.pop(i, None)
            cols.append(col)
        ranks[p] = rank_rows(cols)
    return dims, ranks


def slice_cohomology(complex_like: ComplexLike, weights, w: int) -> dict[int, int]:
    """Cohomology dimensions of one weight slice, by cohomological degree."""
    c = as_koszul(complex_like)
    ws = normalize_weights(c.ambient.vars, weights)
    gd = generator_degrees(c, ws)
    dims, ranks = _slice_ranks(c, ws, gd, w)
    out: dict[int, int] = {}
    for p in dims:
        h = dims[p] - ranks.get(p, 0) - ranks.get(p - 1, 0)
        if h < 0:
            raise AssertionError(
                f"negative cohomology dimension at degree {p}, weight {w}; "
                "the differential does not square to zero on this slice")
        out[p] = h
    return out


@dataclass(frozen=True)
class HilbertTable:
    """Slice-by-slice cohomology dimensions up to a weight cutoff.

    rows[p][w] is dim H^p in weight w.  complete[p] is True only when an
    independent oracle certifies that every weight above the cutoff
    contributes nothing; currently that exists for degree zero (finite
    Groebner quotient whose dimension the row already accounts for).
    """

    weights: tuple[int, ...]
    cutoff: int
    rows: Mapping[int, tuple[int, ...]]
    complete: Mapping[int, bool]

    def total(self, p: int) -> int:
        return sum(self.rows.get(p, ()))

    def degrees(self) -> list[int]:
        return sorted(self.rows)


def hilbert_table(complex_like: ComplexLike, weights, cutoff: int) -> HilbertTable:
    """Tabulate slice cohomology for all weights up to the cutoff."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    c = as_koszul(complex_like)
    ws = normalize_weights(c.ambient.vars, weights)
    gd = generator_degrees(c, ws)
    m = c.rank
    rows = {p: [] for p in range(-m, 1)}
    for w in range(cutoff + 1):
        dims, ranks = _slice_ranks(c, ws, gd, w)
        for p in range(-m, 1):
            h = dims[p] - ranks.get(p, 0) - ranks.get(p - 1, 0)
            if h < 0:
                raise AssertionError(
                    f"negative cohomology dimension at degree {p}, weight {w}")
            rows[p].append(h)
    complete = {p: False for p in range(-m, 1)}
    qd = quotient_dimension(buchberger(list(c.section.components)))
    if qd != INFINITE and sum(rows[0]) == qd:
        complete[0] = True
    return HilbertTable(ws, cutoff, {p: tuple(r) for p, r in rows.items()}, complete)


@dataclass(frozen=True)
class RegularSequenceReport:
    """Vanishing of negative Koszul cohomology, certified up to a cutoff."""

    regular: bool
    cutoff: int
    first_failure: tuple[int, int] | None = None  # (degree, weight)

    def __bool__(self) -> bool:
        return self.regular


def is_regular_sequence(complex_like: ComplexLike, weights, cutoff: int) -> RegularSequenceReport:
    """Check H^p = 0 for all p < 0 in every weight slice up to the cutoff.

    A nonzero slice is a definitive failure; an all-zero sweep certifies
    regularity only up to the cutoff, which the report records.
    """
    c = as_koszul(complex_like)
    ws = normalize_weights(c.ambient.vars, weights)
    gd = generator_degrees(c, ws)
    for w in range(cutoff + 1):
        dims, ranks = _slice_ranks(c, ws, gd, w)
        for p in range(-c.rank, 0):
            h = dims[p] - ranks.get(p, 0) - ranks.get(p - 1, 0)
            if h:
                return RegularSequenceReport(False, cutoff, (p, w))
    return RegularSequenceReport(True, cutoff, None)


@dataclass(frozen=True)
class ResolutionCertificate:
    """Evidence that a tautological complex resolves its base ring.

    Checks, slice by slice up to the cutoff, that negative-degree cohomology
    vanishes and that dim H^0 in weight w equals the number of base-ring
    monomials of weight w.
    """

    ok: bool
    cutoff: int
    h0_matches: bool
    negatives_vanish: bool
    first_mismatch: dict | None = None


def resolution_certificate(taut: TautologicalKoszul, cutoff: int,
                           base_weights: Sequence[int] | None = None) -> ResolutionCertificate:
    base = taut.base_vars
    bws = normalize_weights(base, base_weights) if base_weights is not None else (1,) * len(base)
    # fiber coordinates get weight 1; they are the section, so the slicing
    # is automatically consistent
    ws = bws + (1,) * taut.rank
    table = hilbert_table(taut, ws, cutoff)
    h0_matches = True
    negatives_vanish = True
    mismatch = None
    for w in range(cutoff + 1):
        expected = len(monomials_of_weight(bws, w))
        got = table.rows[0][w]
        if got != expected:
            h0_matches = False
            mismatch = {"degree": 0, "weight": w, "expected": expected, "got": got}
            break
    for p in range(-taut.rank, 0):
        row = table.rows[p]
        for w, h in enumerate(row):
            if h:
                negatives_vanish = False
                if mismatch is None:
                    mismatch = {"degree": p, "weight": w, "expected": 0, "got": h}
                break
    return ResolutionCertificate(h0_matches and negatives_vanish, cutoff,
                                 h0_matches, negatives_vanish, mismatch)
