"""Koszul complexes of sections, and the tautological complex they come from.

For a rank-m free module over R = Q[vars] with a section s, the complex
lives on the exterior algebra of the dual basis (wedge degree p in
cohomological degree -p) with differential the contraction along s.  The
same construction applied over the total space Sym(dual), with the fiber
coordinates themselves as the section, gives the tautological complex;
substituting a concrete section for the fiber coordinates recovers the
usual Koszul complex on the nose, and `base_change_compare` checks that
entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from itertools import combinations

from .exterior import Ambient, ExtElt, Section, contract
from .groebner import GroebnerBasis, buchberger, quotient_dimension
from .poly import Poly


def default_gens(m: int) -> tuple[str, ...]:
    return tuple(f"e{j + 1}" for j in range(m))


class KoszulComplex:
    """The contraction differential on the exterior algebra of a section."""

    def __init__(self, section: Section):
        self.section = section
        self.ambient = section.ambient

    @property
    def rank(self) -> int:
        return self.ambient.rank

    @property
    def degrees(self) -> range:
        """Source degrees p for which the differential out of degree p is defined."""
        return range(-self.rank, 1)

    def basis(self, p: int) -> list[tuple[int, ...]]:
        """Wedge-monomial subsets spanning cohomological degree p over R."""
        if not -self.rank <= p <= 0:
            return []
        return list(combinations(range(self.rank), -p))

    def differential(self, a: ExtElt) -> ExtElt:
        return contract(self.section, a)

    def differential_matrix(self, p: int) -> list[list[Poly]]:
        """Matrix of d: degree p to degree p+1; rows target basis, columns source."""
        if p not in self.degrees:
            raise ValueError(f"no differential out of degree {p}")
        source = self.basis(p)
        target = self.basis(p + 1)
        index = {s: i for i, s in enumerate(target)}
        zero = Poly.zero(self.ambient.vars)
        matrix = [[zero for _ in source] for _ in target]
        nvars = len(self.ambient.vars)
        for j, subset in enumerate(source):
            image = self.differential(ExtElt.monomial(self.ambient, (0,) * nvars, subset))
            for t in image.subsets():
                matrix[index[t]][j] = image.coefficient_poly(t)
        return matrix

    def __str__(self) -> str:
        return f"Koszul complex of {self.section} (rank {self.rank})"


def build_koszul(vars: Sequence[str], components: Sequence[Poly], gens: Sequence[str] | None = None) -> KoszulComplex:
    """Koszul complex of the section with the given polynomial components."""
    vs = tuple(vars)
    comps = tuple(components)
    names = tuple(gens) if gens is not None else default_gens(len(comps))
    ambient = Ambient(vs, names)
    return KoszulComplex(Section(ambient, comps))


class TautologicalKoszul:
    """Koszul complex over the total space, against the tautological section.

    Base ring Q[vars], fiber coordinates one per generator; the section is
    the tuple of fiber coordinates, so each differential entry is linear in
    them.  Substituting an actual section for the fiber coordinates must
    reproduce the ordinary Koszul complex entry by entry.
    """

    def __init__(self, base_vars: Sequence[str], rank: int, fiber_prefix: str = "xi"):
        base = tuple(base_vars)
        if rank < 1:
            raise ValueError("rank must be at least 1")
        fiber = tuple(f"{fiber_prefix}{j + 1}" for j in range(rank))
        clash = set(base) & set(fiber)
        if clash:
            raise ValueError(f"fiber coordinate names collide with base variables: {sorted(clash)}")
        total = base + fiber
        ambient = Ambient(total, default_gens(rank))
        section = Section(ambient, tuple(Poly.variable(total, v) for v in fiber))
        self.base_vars = base
        self.fiber_vars = fiber
        self.complex = KoszulComplex(section)

    @property
    def rank(self) -> int:
        return self.complex.rank

    @property
    def degrees(self) -> range:
        return self.complex.degrees

    def basis(self, p: int):
        return self.complex.basis(p)

    def differential(self, a: ExtElt) -> ExtElt:
        return self.complex.differential(a)

    def differential_matrix(self, p: int) -> list[list[Poly]]:
        return self.complex.differential_matrix(p)

    def specialize_entry(self, entry: Poly, components: Sequence[Poly]) -> Poly:
        """Substitute the given section for the fiber coordinates of one entry."""
        images = {v: comp for v, comp in zip(self.fiber_vars, components)}
        return entry.substitute(images, vars_out=components[0].vars if components else self.base_vars)


def build_tautological_koszul(vars: Sequence[str], rank: int, fiber_prefix: str = "xi") -> TautologicalKoszul:
    return TautologicalKoszul(vars, rank, fiber_prefix)


@dataclass(frozen=True)
class BaseChangeReport:
    equal: bool
    witness: dict | None = None


def base_change_compare(taut: TautologicalKoszul, components: Sequence[Poly]) -> BaseChangeReport:
    """Compare the specialized tautological complex with the direct one.

    components: the section over the base ring.  Checks every matrix entry
    in every degree; on the first mismatch returns a witness naming the
    degree, row, column, and both entries.
    """
    comps = tuple(components)
    if len(comps) != taut.rank:
        raise ValueError(f"expected {taut.rank} components, got {len(comps)}")
    for p in comps:
        if p.vars != taut.base_vars:
            raise ValueError("section components must live over the base variables")
    direct = build_koszul(taut.base_vars, comps)
    for p in taut.degrees:
        fancy_matrix = taut.differential_matrix(p)
        direct_matrix = direct.differential_matrix(p)
        for i, (frow, drow) in enumerate(zip(fancy_matrix, direct_matrix)):
            for j, (fe, de) in enumerate(zip(frow, drow)):
                specialized = taut.specialize_entry(fe, comps)
                if specialized != de:
                    return BaseChangeReport(False, {
                        "degree": p, "row": i, "col": j,
                        "specialized": str(specialized), "direct": str(de),
                    })
    return BaseChangeReport(True, None)


@dataclass(frozen=True)
class MatrixComplex:
    """A complex given by raw matrices; used to exercise d*d checks.

    matrices maps a source degree p to the matrix of the map out of p.
    Absent degrees carry the zero map.
    """

    vars: tuple[str, ...]
    matrices: Mapping[int, list[list[Poly]]]

    @property
    def degrees(self) -> list[int]:
        return sorted(self.matrices)

    def differential_matrix(self, p: int) -> list[list[Poly]]:
        return self.matrices.get(p, [])


def poly_mat_mul(a: list[list[Poly]], b: list[list[Poly]], vars: Sequence[str]) -> list[list[Poly]]:
    if not a or not b:
        return []
    zero = Poly.zero(tuple(vars))
    out = []
    for row in a:
        orow = []
        for j in range(len(b[0])):
            acc = zero
            for k, coeff in enumerate(row):
                if coeff.is_zero() or b[k][j].is_zero():
                    continue
                acc = acc + coeff * b[k][j]
            orow.append(acc)
        out.append(orow)
    return out


def check_d_squared(complex_like) -> bool:
    """True when consecutive differentials compose to zero, degree by degree."""
    c = getattr(complex_like, "complex", complex_like)
    degrees = list(c.degrees)
    vars = getattr(c, "vars", None)
    if vars is None:
        vars = c.ambient.vars
    for p in degrees:
        if p + 1 not in degrees:
            continue
        second = c.differential_matrix(p + 1)
        first = c.differential_matrix(p)
        if not second or not first:
            continue
        if len(second[0]) != len(first):
            raise ValueError(f"matrices at degrees {p} and {p + 1} do not compose")
        prod = poly_mat_mul(second, first, vars)
        for row in prod:
            for entry in row:
                if not entry.is_zero():
                    return False
    return True


@dataclass(frozen=True)
class Augmentation:
    """Projection of a Koszul complex onto its degree-zero cohomology.

    The target is R modulo the section's components; `project` sends a
    degree-zero element to its canonical normal form there.
    """

    complex: KoszulComplex
    basis: GroebnerBasis

    def project(self, p: Union[Poly, ExtElt]) -> Poly:
        if isinstance(p, ExtElt):
            if any(s for s in p.subsets() if s):
                raise ValueError("only degree-zero elements project to the quotient")
            p = p.scalar_part()
        return self.basis.normal_form(p)

    def target_dimension(self):
        """dim_Q of the quotient, or INFINITE."""
        return quotient_dimension(self.basis)


def augmentation(complex: KoszulComplex) -> Augmentation:
    comps = list(complex.section.components)
    if not comps:
        raise ValueError("rank-zero complex has nothing to augment")
    return Augmentation(complex, buchberger(comps))
