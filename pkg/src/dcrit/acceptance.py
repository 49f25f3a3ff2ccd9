"""The acceptance suite: every release-gating property in one runnable list.

Each criterion is a function returning a CriterionResult; `run_all` executes
them in order.  Determinism of the CLI's JSON output (the eleventh gate) is
exercised in the test suite by invoking the CLI twice, since the suite
cannot usefully re-run itself from within.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from .checks import rand_poly, var_names
from .cohomology import hilbert_table, is_regular_sequence, resolution_certificate
from .groebner import INFINITE, quotient_dimension
from .koszul import (base_change_compare, build_koszul, build_tautological_koszul,
                     check_d_squared)
from .parsing import parse_one_form, parse_poly
from .poly import Poly, gradient, normalize_weights
from .polyvec import OneForm, check_bracket_compat, check_bv, check_gerstenhaber
from .symplectic import (NotClosedError, hessian, intersect_graph_lagrangians,
                         is_symmetric)
from .coalgebra import check_coalgebra

#: quasi-homogeneous corpus used by several criteria: source and variables
CORPUS = (
    ("x^2", ("x",)),
    ("x^3", ("x",)),
    ("x^3 + y^3", ("x", "y")),
    ("x^2 + y^2", ("x", "y")),
    ("x^4 + y^4", ("x", "y")),
    ("x^3 + y^3 + z^3", ("x", "y", "z")),
)


@dataclass
class CriterionResult:
    name: str
    passed: bool
    elapsed: float
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self, with_timing: bool = False) -> dict:
        out: dict = {"name": self.name, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.details:
            out["details"] = self.details
        if with_timing:
            out["seconds"] = round(self.elapsed, 3)
        return out


def _run(name: str, body) -> CriterionResult:
    start = time.perf_counter()
    try:
        details, counterexample = body()
        passed = counterexample is None
    except Exception as exc:  # a crash is a failure, not an abort
        details = {"error": f"{type(exc).__name__}: {exc}"}
        counterexample = None
        passed = False
    return CriterionResult(name, passed, time.perf_counter() - start, details, counterexample)


def criterion_tautological_resolution(seed: int = 0) -> CriterionResult:
    """Slices of the tautological complex: H^{<0} = 0 and H^0 counts base monomials."""

    def body():
        for n in range(0, 4):
            for m in range(1, 4):
                taut = build_tautological_koszul(var_names(n), m)
                cert = resolution_certificate(taut, 8)
                if not cert.ok:
                    return {}, {"n": n, "m": m, **(cert.first_mismatch or {})}
        return {"cases": "n in 0..3, m in 1..3, cutoff 8"}, None

    return _run("tautological_resolution", body)


def criterion_dual_numbers(seed: int = 0) -> CriterionResult:
    """Rank-1 zero section over the empty base: one dimension each in degrees 0, -1."""

    def body():
        complex = build_koszul((), [Poly.zero(())])
        table = hilbert_table(complex, (), 4)
        got = {"0": table.total(0), "-1": table.total(-1)}
        if got != {"0": 1, "-1": 1}:
            return {}, {"expected": {"0": 1, "-1": 1}, "got": got}
        return {"dims": got}, None

    return _run("dual_numbers", body)


def criterion_base_change(seed: int = 0) -> CriterionResult:
    """Specializing the tautological complex equals the direct Koszul complex."""

    def body():
        rng = Random(seed)
        for k in range(100):
            n = rng.randint(1, 3)
            m = rng.randint(1, 3)
            vs = var_names(n)
            comps = [Poly.zero(vs) if rng.random() < 0.1 else rand_poly(rng, vs, 3)
                     for _ in range(m)]
            report = base_change_compare(build_tautological_koszul(vs, m), comps)
            if not report.equal:
                return {}, {"trial": k, "n": n, "m": m,
                            "section": [str(c) for c in comps], **(report.witness or {})}
        return {"sections": 100}, None

    return _run("base_change", body)


def _closed_form_milnor(f: Poly, weights) -> int:
    """Product formula for the Milnor number of a quasi-homogeneous polynomial."""
    ws = normalize_weights(f.vars, weights)
    d = f.weighted_degree(ws)
    value = Fraction(1)
    for w in ws:
        value *= Fraction(d - w, w)
    if value.denominator != 1:
        raise ValueError(f"closed form is not an integer for {f}")
    return int(value)


def criterion_milnor_oracles(seed: int = 0) -> CriterionResult:
    """Slice H^0 total, Groebner quotient dimension, and the product formula agree."""

    def body():
        rows = {}
        for src, vs in CORPUS:
            f = parse_poly(src, vs)
            ws = (1,) * len(vs)
            grads = list(gradient(f))
            cutoff = len(vs) * (f.total_degree() - 2) + 2
            table = hilbert_table(build_koszul(vs, grads), ws, cutoff)
            slice_total = table.total(0)
            quotient = quotient_dimension(grads)
            closed = _closed_form_milnor(f, ws)
            rows[src] = {"slices": slice_total, "groebner": quotient, "product": closed}
            if not (slice_total == quotient == closed):
                return {}, {"f": src, **rows[src]}
        return {"corpus": rows}, None

    return _run("milnor_oracles", body)


def criterion_regular_sequences(seed: int = 0) -> CriterionResult:
    """Coordinate sections are regular up to the cutoff; (x, x) is not."""

    def body():
        for n in range(1, 4):
            vs = var_names(n)
            complex = build_koszul(vs, [Poly.variable(vs, v) for v in vs])
            report = is_regular_sequence(complex, (1,) * n, 8)
            if not report.regular:
                return {}, {"section": "coordinates", "n": n,
                            "first_failure": report.first_failure}
        x = Poly.variable(("x",), "x")
        degenerate = is_regular_sequence(build_koszul(("x",), [x, x]), (1,), 8)
        if degenerate.regular or degenerate.first_failure != (-1, 1):
            return {}, {"section": "(x, x)", "regular": degenerate.regular,
                        "first_failure": degenerate.first_failure}
        return {"regular": "coordinates n=1..3", "witness": {"section": "(x, x)",
                "first_failure": [-1, 1]}}, None

    return _run("regular_sequences", body)


def criterion_gerstenhaber(seed: int = 0) -> CriterionResult:
    """Antisymmetry, Jacobi, Leibniz on 220 random homogeneous triples."""

    def body():
        total = 0
        for n, trials in ((1, 20), (2, 100), (3, 100)):
            report = check_gerstenhaber(n, trials=trials, seed=seed)
            total += report.trials
            if not report.passed:
                return {}, {"n": n, **(report.counterexample or {})}
        return {"trials": total}, None

    return _run("gerstenhaber", body)


def criterion_bracket_compat(seed: int = 0) -> CriterionResult:
    """Contraction compatibility holds for exact forms; y d_x is falsified."""

    def body():
        for src, vs in CORPUS:
            alpha = OneForm.differential_of(parse_poly(src, vs))
            report = check_bracket_compat(alpha, trials=20, seed=seed)
            if not (report.passed and report.details["closed"]):
                return {}, {"alpha": f"d({src})", **(report.counterexample or {})}
        bad = parse_one_form("y*d_x", ("x", "y"))
        report = check_bracket_compat(bad, trials=5, seed=seed)
        ce = report.counterexample or {}
        expected = {"X": "@x", "Y": "@y", "discrepancy": "-1"}
        if report.passed or any(ce.get(k) != v for k, v in expected.items()):
            return {}, {"alpha": "y*d_x", "expected": expected, "got": ce}
        return {"exact_forms": len(CORPUS), "falsification": ce}, None

    return _run("bracket_compat", body)


def criterion_bv(seed: int = 0) -> CriterionResult:
    """Square-zero, generating relation, de Rham intertwining, non-derivation."""

    def body():
        total = 0
        witness = None
        for n, trials in ((2, 120), (3, 80)):
            report = check_bv(n, trials=trials, seed=seed)
            total += report.trials
            if not report.passed:
                return {}, {"n": n, **(report.counterexample or {})}
            witness = report.details.get("non_derivation_witness")
        return {"trials": total, "non_derivation_witness": witness}, None

    return _run("bv_divergence", body)


def criterion_hessian_pairing(seed: int = 0) -> CriterionResult:
    """Hessian symmetry, graph-intersection consistency, closedness rejection."""

    def body():
        rng = Random(seed)
        for k in range(100):
            n = rng.randint(1, 3)
            vs = var_names(n)
            f = rand_poly(rng, vs, 4, max_terms=4)
            if not is_symmetric(hessian(f)):
                return {}, {"trial": k, "f": str(f), "issue": "hessian not symmetric"}
        for src, vs in CORPUS:
            f = parse_poly(src, vs)
            li = intersect_graph_lagrangians(OneForm.differential_of(f), OneForm.zero(vs))
            direct = build_koszul(vs, list(gradient(f)), gens=li.complex.ambient.gens)
            for p in direct.degrees:
                if li.complex.differential_matrix(p) != direct.differential_matrix(p):
                    return {}, {"f": src, "degree": p, "issue": "matrices differ"}
            if not (li.pairing.symmetric and li.pairing.nondegenerate):
                return {}, {"f": src, "issue": "pairing not symmetric"}
        try:
            intersect_graph_lagrangians(parse_one_form("y*d_x", ("x", "y")),
                                        OneForm.zero(("x", "y")))
            return {}, {"issue": "non-closed form was accepted"}
        except NotClosedError as e:
            witness = e.witness
        return {"random_hessians": 100, "rejection_witness": witness}, None

    return _run("hessian_pairing", body)


def criterion_coalgebra(seed: int = 0) -> CriterionResult:
    """Coalgebra axioms and the coaction chain map, ranks 1 through 4."""

    def body():
        total = 0
        for m in (1, 2, 3, 4):
            report = check_coalgebra(m, trials=50, seed=seed)
            total += report.trials
            if not report.passed:
                return {}, {"rank": m, **(report.counterexample or {})}
        return {"trials": total}, None

    return _run("coalgebra", body)


ALL_CRITERIA = (
    criterion_tautological_resolution,
    criterion_dual_numbers,
    criterion_base_change,
    criterion_milnor_oracles,
    criterion_regular_sequences,
    criterion_gerstenhaber,
    criterion_bracket_compat,
    criterion_bv,
    criterion_hessian_pairing,
    criterion_coalgebra,
)


def run_all(seed: int = 0) -> list[CriterionResult]:
    return [fn(seed) for fn in ALL_CRITERIA]
