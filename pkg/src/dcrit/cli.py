"""Command line entry point.

Subcommands:
    zero   - Koszul complex of a section: d^2 check, H^0 dimension, slice table
    fancy  - tautological complex over a chosen base, with resolution certificate
    crit   - critical locus of a potential: milnor, pairing, obstruction, slices
    check  - randomized identity suites (gerstenhaber, bv, coalgebra, compat, d2)
    lagr   - derived intersection of two graph Lagrangians
    suite  - the full acceptance run

Exit codes: 0 when the requested computation succeeded and no check that was
expected to hold failed, 1 when a check failed (for `check` only together
with --expect-holds; falsification runs are reportable successes), 2 on
input errors such as syntax or unknown variables.

All output is deterministic for fixed inputs; --no-timing removes the only
wall-clock field so that repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .acceptance import run_all
from .checks import CheckReport, var_names
from .coalgebra import check_coalgebra
from .cohomology import InhomogeneousSectionError, hilbert_table, resolution_certificate
from .groebner import quotient_dimension
from .koszul import build_koszul, build_tautological_koszul, check_d_squared
from .parsing import ParseError, parse_one_form, parse_poly, parse_section
from .poly import Poly, UnknownVariableError, gradient
from .polyvec import OneForm, check_bracket_compat, check_bv, check_gerstenhaber
from .symplectic import (intersect_graph_lagrangians, minus_one_pairing,
                         obstruction_theory)


@dataclass
class Report:
    """Everything one invocation computed, in serialization-stable form."""

    command: str
    inputs: dict
    results: dict
    version: str = __version__
    timing: dict | None = None

    def to_json(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs,
               "results": self.results, "version": self.version}
        if self.timing is not None:
            out["timing"] = self.timing
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Report":
        return cls(command=data["command"], inputs=data["inputs"],
                   results=data["results"], version=data["version"],
                   timing=data.get("timing"))


def _plain(value):
    """Coerce nested report values to JSON primitives (round-trip safe)."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Poly):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    return str(value)


def _parse_vars(spec: str) -> tuple[str, ...]:
    if spec.strip() == "":
        return ()
    names = tuple(part.strip() for part in spec.split(","))
    for name in names:
        if not name.isidentifier():
            raise ValueError(f"invalid variable name: {name!r}")
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {spec!r}")
    return names


def _parse_weights(spec: str, nvars: int) -> tuple[int, ...]:
    parts = [part.strip() for part in spec.split(",")]
    try:
        ws = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"weights must be integers, got {spec!r}")
    if len(ws) != nvars:
        raise ValueError(f"expected {nvars} weights, got {len(ws)}")
    if any(w <= 0 for w in ws):
        raise ValueError("weights must be positive")
    return ws


def _matrix_json(matrix) -> dict:
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    return {"rows": rows, "cols": cols,
            "entries": [str(entry) for row in matrix for entry in row]}


def _hilbert_json(table) -> dict:
    return {str(p): list(table.rows[p]) for p in sorted(table.degrees(), reverse=True)}


def _hilbert_lines(table) -> list[str]:
    lines = []
    for p in sorted(table.degrees(), reverse=True):
        row = " ".join(str(d) for d in table.rows[p])
        mark = "  [complete]" if table.complete.get(p, False) else ""
        lines.append(f"H^{p} (w = 0..{table.cutoff}): {row}{mark}")
    return lines


def _check_lines(entry: dict) -> list[str]:
    label = entry["name"]
    trials = f" ({entry['trials']} trials)" if "trials" in entry else ""
    lines = [f"{label}: {entry['status']}{trials}"]
    if "counterexample" in entry:
        lines.append("  counterexample:")
        lines.extend(f"    {k} = {v}" for k, v in entry["counterexample"].items())
    return lines


def _ring(vars) -> str:
    return "Q[" + ", ".join(vars) + "]" if vars else "Q"


# one handler per subcommand; each returns (Report, human lines, exit code)

def _cmd_zero(args):
    vars = _parse_vars(args.vars)
    components = parse_section(args.section, vars)
    weights = _parse_weights(args.weights, len(vars)) if args.weights else (1,) * len(vars)
    complex = build_koszul(vars, list(components))
    d2 = check_d_squared(complex)
    h0 = quotient_dimension(list(components))
    checks = [{"name": "d_squared", "status": "pass" if d2 else "fail"}]
    results: dict = {"checks": checks, "h0_dimension": h0}
    lines = [f"zero locus of ({', '.join(str(c) for c in components)}) over {_ring(vars)}",
             f"d^2 = 0: {checks[0]['status']}",
             f"H^0 dimension: {h0}"]
    try:
        table = hilbert_table(complex, weights, args.cutoff)
        results["hilbert"] = _hilbert_json(table)
        lines.extend(_hilbert_lines(table))
    except InhomogeneousSectionError as e:
        if args.weights:
            raise
        results["hilbert"] = None
        lines.append(f"slice table unavailable: {e}")
    inputs = {"vars": list(vars), "section": [str(c) for c in components],
              "weights": list(weights), "cutoff": args.cutoff}
    return Report("zero", inputs, _plain(results)), lines, (0 if d2 else 1)


def _cmd_fancy(args):
    vars = _parse_vars(args.vars)
    taut = build_tautological_koszul(vars, args.rank)
    cert = resolution_certificate(taut, args.cutoff)
    all_vars = taut.complex.ambient.vars
    table = hilbert_table(taut.complex, (1,) * len(all_vars), args.cutoff)
    status = "pass" if cert.ok else "fail"
    results = {"checks": [{"name": "resolution_certificate", "status": status}],
               "hilbert": _hilbert_json(table)}
    if not cert.ok:
        results["checks"][0]["counterexample"] = cert.first_mismatch
    fiber = all_vars[len(vars):]
    lines = [f"tautological complex over {_ring(vars)}, fiber ({', '.join(fiber)})",
             f"resolution certificate (cutoff {args.cutoff}): {status}"]
    lines.extend(_hilbert_lines(table))
    inputs = {"vars": list(vars), "rank": args.rank, "cutoff": args.cutoff}
    return Report("fancy", inputs, _plain(results)), lines, (0 if cert.ok else 1)


def _cmd_crit(args):
    vars = _parse_vars(args.vars)
    f = parse_poly(args.function, vars)
    weights = _parse_weights(args.weights, len(vars)) if args.weights else (1,) * len(vars)
    want_all = not (args.milnor or args.pairing or args.obstruction or args.hilbert)
    results: dict = {}
    lines = [f"f = {f} over {_ring(vars)}"]
    grads = list(gradient(f))
    if args.milnor or want_all:
        mu = quotient_dimension(grads)
        results["milnor"] = mu
        lines.append(f"milnor = {mu}")
    if args.pairing or want_all:
        pairing = minus_one_pairing(f)
        results["pairing"] = pairing.to_json()
        flat = ", ".join(results["pairing"]["hessian"])
        lines.append(f"pairing: hessian = [{flat}], "
                     f"symmetric = {str(pairing.symmetric).lower()}, "
                     f"nondegenerate = {str(pairing.nondegenerate).lower()}")
    if args.obstruction or want_all:
        report = obstruction_theory(f)
        results["obstruction"] = report.to_json()
        lines.append(f"obstruction: quotient_dim = {report.quotient_dim}, "
                     f"h0 = {report.h0}, h1 = {report.h1}, "
                     f"hessian_invertible = {str(report.hessian_invertible).lower()}")
    if args.hilbert or want_all:
        try:
            table = hilbert_table(build_koszul(vars, grads), weights, args.cutoff)
            results["hilbert"] = _hilbert_json(table)
            lines.extend(_hilbert_lines(table))
        except InhomogeneousSectionError as e:
            if args.weights:
                raise
            results["hilbert"] = None
            lines.append(f"slice table unavailable: {e}")
    inputs = {"vars": list(vars), "f": str(f), "weights": list(weights),
              "cutoff": args.cutoff}
    return Report("crit", inputs, _plain(results)), lines, 0


def _cmd_check(args):
    inputs: dict = {"which": args.which, "trials": args.trials, "seed": args.seed,
                    "expect_holds": args.expect_holds}
    if args.which == "gerstenhaber":
        inputs["n"] = args.n
        report = check_gerstenhaber(args.n, trials=args.trials, seed=args.seed,
                                    max_deg=args.max_deg or 3)
    elif args.which == "bv":
        inputs["n"] = args.n
        report = check_bv(args.n, trials=args.trials, seed=args.seed,
                          max_deg=args.max_deg or 3)
    elif args.which == "coalgebra":
        vars = _parse_vars(args.vars) if args.vars else ("x", "y")
        inputs["rank"] = args.rank
        inputs["vars"] = list(vars)
        report = check_coalgebra(args.rank, trials=args.trials, seed=args.seed,
                                 vars=vars, max_deg=args.max_deg or 2)
    elif args.which == "compat":
        if args.vars is None or args.alpha is None:
            raise ValueError("check compat needs --vars and --alpha")
        vars = _parse_vars(args.vars)
        alpha = parse_one_form(args.alpha, vars)
        inputs["vars"] = list(vars)
        inputs["alpha"] = str(alpha)
        report = check_bracket_compat(alpha, trials=args.trials, seed=args.seed,
                                      max_deg=args.max_deg or 2)
    elif args.which == "d2":
        if args.vars is None or args.section is None:
            raise ValueError("check d2 needs --vars and --section")
        vars = _parse_vars(args.vars)
        components = parse_section(args.section, vars)
        inputs["vars"] = list(vars)
        inputs["section"] = [str(c) for c in components]
        ok = check_d_squared(build_koszul(vars, list(components)))
        report = CheckReport("d_squared", "pass" if ok else "fail", 1)
    else:  # argparse choices make this unreachable
        raise ValueError(f"unknown check: {args.which}")
    entry = report.to_json()
    results = {"checks": [entry], "holds": report.passed}
    lines = _check_lines(entry)
    code = 1 if (args.expect_holds and not report.passed) else 0
    return Report("check", inputs, _plain(results)), lines, code


def _cmd_lagr(args):
    vars = _parse_vars(args.vars)
    alpha = parse_one_form(args.alpha, vars)
    beta = parse_one_form(args.beta, vars)
    li = intersect_graph_lagrangians(alpha, beta)
    matrices = {str(p): _matrix_json(li.complex.differential_matrix(p))
                for p in sorted(li.complex.degrees, reverse=True) if p < 0}
    results = {"pairing": li.pairing.to_json(), "complex": matrices}
    lines = [f"graph intersection of ({alpha}) and ({beta}) over {_ring(vars)}"]
    for p, mat in matrices.items():
        rows = [", ".join(mat["entries"][r * mat["cols"]:(r + 1) * mat["cols"]])
                for r in range(mat["rows"])]
        lines.append(f"d_{p}: [" + "; ".join(rows) + "]")
    flat = ", ".join(results["pairing"]["hessian"])
    lines.append(f"pairing: hessian = [{flat}], "
                 f"symmetric = {str(li.pairing.symmetric).lower()}, "
                 f"nondegenerate = {str(li.pairing.nondegenerate).lower()}")
    inputs = {"vars": list(vars), "alpha": str(alpha), "beta": str(beta)}
    return Report("lagr", inputs, _plain(results)), lines, 0


def _cmd_suite(args):
    outcomes = run_all(args.seed)
    with_timing = not args.no_timing
    results = {"checks": [r.to_json(with_timing=with_timing) for r in outcomes]}
    lines = []
    for r in outcomes:
        stamp = f" ({r.elapsed:.2f}s)" if with_timing else ""
        lines.append(f"[{r.status.upper()}] {r.name}{stamp}")
        if r.counterexample:
            lines.extend(f"    {k} = {v}" for k, v in r.counterexample.items())
    passed = sum(1 for r in outcomes if r.passed)
    lines.append(f"suite: {passed}/{len(outcomes)} passed")
    inputs = {"seed": args.seed}
    code = 0 if passed == len(outcomes) else 1
    return Report("suite", inputs, _plain(results)), lines, code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcrit",
        description="Exact Koszul complexes and derived critical loci.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--no-timing", action="store_true",
                       help="omit wall-clock fields for byte-stable output")

    p = sub.add_parser("zero", help="Koszul complex of a section")
    p.add_argument("--vars", required=True, help="comma-separated base variables")
    p.add_argument("--section", required=True, help="comma-separated section components")
    p.add_argument("--weights", help="comma-separated positive variable weights")
    p.add_argument("--cutoff", type=int, default=12, help="largest slice weight")
    common(p)
    p.set_defaults(handler=_cmd_zero)

    p = sub.add_parser("fancy", help="tautological complex with generic section")
    p.add_argument("--vars", default="", help="comma-separated base variables")
    p.add_argument("--rank", type=int, required=True, help="number of fiber generators")
    p.add_argument("--cutoff", type=int, default=12, help="largest slice weight")
    common(p)
    p.set_defaults(handler=_cmd_fancy)

    p = sub.add_parser("crit", help="critical locus of a potential")
    p.add_argument("--vars", required=True, help="comma-separated base variables")
    p.add_argument("-f", "--function", required=True, help="the potential")
    p.add_argument("--milnor", action="store_true", help="critical quotient dimension")
    p.add_argument("--pairing", action="store_true", help="degree -1 pairing data")
    p.add_argument("--obstruction", action="store_true",
                   help="Hessian ranks on the critical quotient")
    p.add_argument("--hilbert", action="store_true", help="slice dimension table")
    p.add_argument("--weights", help="comma-separated positive variable weights")
    p.add_argument("--cutoff", type=int, default=12, help="largest slice weight")
    common(p)
    p.set_defaults(handler=_cmd_crit)

    p = sub.add_parser("check", help="randomized identity suites")
    p.add_argument("which", choices=("gerstenhaber", "bv", "coalgebra", "compat", "d2"))
    p.add_argument("--n", type=int, default=2, help="number of base variables")
    p.add_argument("--rank", type=int, default=2, help="exterior rank (coalgebra)")
    p.add_argument("--vars", help="comma-separated base variables")
    p.add_argument("--alpha", help="1-form for the compat check")
    p.add_argument("--section", help="section components for the d2 check")
    p.add_argument("--trials", type=int, default=200, help="random trials")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--max-deg", type=int, help="degree bound for random inputs")
    p.add_argument("--expect-holds", action="store_true",
                   help="exit nonzero when the identity fails")
    common(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("lagr", help="derived intersection of graph Lagrangians")
    p.add_argument("--vars", required=True, help="comma-separated base variables")
    p.add_argument("--alpha", required=True, help="first closed 1-form")
    p.add_argument("--beta", default="0", help="second closed 1-form (default 0)")
    common(p)
    p.set_defaults(handler=_cmd_lagr)

    p = sub.add_parser("suite", help="run every acceptance criterion")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    common(p)
    p.set_defaults(handler=_cmd_suite)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    start = time.perf_counter()
    try:
        report, lines, code = args.handler(args)
    except (ParseError, UnknownVariableError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if not args.no_timing:
        report.timing = {"seconds": round(time.perf_counter() - start, 3)}
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
