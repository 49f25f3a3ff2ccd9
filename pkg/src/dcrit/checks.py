"""Shared infrastructure for randomized identity checks.

Every check runs a deterministic RNG from an explicit seed, tries a fixed
budget of random instances, and reports a CheckReport.  Failing instances
are shrunk by greedily deleting terms while the failure persists, so
counterexamples stay readable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Callable, Sequence

from .exterior import Ambient, ExtElt, Section
from .poly import Poly


@dataclass
class CheckReport:
    """Outcome of one randomized check."""

    name: str
    status: str  # "pass" or "fail"
    trials: int
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status, "trials": self.trials}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.details:
            out["details"] = self.details
        return out


def var_names(n: int) -> tuple[str, ...]:
    if n <= 4:
        return ("x", "y", "z", "w")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def rand_coeff(rng: Random) -> Fraction:
    c = 0
    while c == 0:
        c = rng.randint(-3, 3)
    if rng.random() < 0.2:
        return Fraction(c, rng.randint(2, 3))
    return Fraction(c)


def rand_exps(rng: Random, nvars: int, max_deg: int) -> tuple[int, ...]:
    deg = rng.randint(0, max_deg)
    exps = [0] * nvars
    for _ in range(deg):
        if nvars:
            exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def rand_poly(rng: Random, vars: Sequence[str], max_deg: int, max_terms: int = 3) -> Poly:
    vs = tuple(vars)
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = rand_exps(rng, len(vs), max_deg)
        terms[exps] = terms.get(exps, Fraction(0)) + rand_coeff(rng)
    return Poly(vs, terms)


def rand_homogeneous(rng: Random, ambient: Ambient, max_deg: int,
                     wedge_degree: int | None = None, max_terms: int = 3) -> ExtElt:
    """Random element concentrated in a single wedge degree."""
    m = ambient.rank
    p = rng.randint(0, m) if wedge_degree is None else wedge_degree
    pool = list(range(m))
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        subset = tuple(sorted(rng.sample(pool, p)))
        exps = rand_exps(rng, len(ambient.vars), max_deg)
        key = (exps, subset)
        terms[key] = terms.get(key, Fraction(0)) + rand_coeff(rng)
    return ExtElt(ambient, terms)


def rand_mixed(rng: Random, ambient: Ambient, max_deg: int, max_terms: int = 4) -> ExtElt:
    """Random element with no homogeneity constraint."""
    m = ambient.rank
    pool = list(range(m))
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        p = rng.randint(0, m)
        subset = tuple(sorted(rng.sample(pool, p)))
        exps = rand_exps(rng, len(ambient.vars), max_deg)
        key = (exps, subset)
        terms[key] = terms.get(key, Fraction(0)) + rand_coeff(rng)
    return ExtElt(ambient, terms)


def rand_section(rng: Random, ambient: Ambient, max_deg: int, zero_chance: float = 0.15) -> Section:
    comps = []
    for _ in range(ambient.rank):
        if rng.random() < zero_chance:
            comps.append(Poly.zero(ambient.vars))
        else:
            comps.append(rand_poly(rng, ambient.vars, max_deg))
    return Section(ambient, tuple(comps))


def shrink_elements(fails: Callable[..., bool], elts: Sequence[ExtElt]) -> list[ExtElt]:
    """Greedily delete terms from each element while the failure persists."""
    current = list(elts)
    changed = True
    while changed:
        changed = False
        for i, e in enumerate(current):
            for key in list(e.terms):
                smaller = ExtElt(e.ambient, {k: c for k, c in e.terms.items() if k != key})
                trial = current[:i] + [smaller] + current[i + 1:]
                try:
                    if fails(*trial):
                        current = trial
                        changed = True
                        break
                except (ValueError, ZeroDivisionError):
                    continue
            if changed:
                break
    return current
