"""The release gate: every criterion runs at its stated budget.

Each test prints one `[PASS] criterion N: name (t)` line; `pytest -v` adds
its own verdict line per criterion.  Budgets are wall-clock upper bounds.
"""

import json
import time

from dcrit.acceptance import (criterion_base_change, criterion_bracket_compat,
                              criterion_bv, criterion_coalgebra,
                              criterion_dual_numbers, criterion_gerstenhaber,
                              criterion_hessian_pairing,
                              criterion_milnor_oracles,
                              criterion_regular_sequences,
                              criterion_tautological_resolution)
from dcrit.cli import main

SEED = 0


def report(number, result, budget):
    line = (f"[{result.status.upper()}] criterion {number}: {result.name} "
            f"({result.elapsed:.2f}s, budget {budget:.0f}s)")
    print(line)
    assert result.passed, (result.details, result.counterexample)
    assert result.elapsed < budget, line


def test_criterion_01_tautological_resolution():
    report(1, criterion_tautological_resolution(SEED), 10.0)


def test_criterion_02_dual_numbers():
    report(2, criterion_dual_numbers(SEED), 1.0)


def test_criterion_03_base_change():
    result = criterion_base_change(SEED)
    assert result.details.get("sections") == 100 or not result.passed
    report(3, result, 10.0)


def test_criterion_04_milnor_oracles():
    result = criterion_milnor_oracles(SEED)
    if result.passed:
        corpus = result.details["corpus"]
        assert len(corpus) == 6
        assert corpus["x^3 + y^3"] == {"slices": 4, "groebner": 4, "product": 4}
        assert corpus["x^4 + y^4"]["product"] == 9
        assert corpus["x^3 + y^3 + z^3"]["product"] == 8
    report(4, result, 20.0)


def test_criterion_05_regular_sequences():
    report(5, criterion_regular_sequences(SEED), 5.0)


def test_criterion_06_gerstenhaber():
    result = criterion_gerstenhaber(SEED)
    if result.passed:
        assert result.details["trials"] >= 200
    report(6, result, 30.0)


def test_criterion_07_bracket_compat():
    result = criterion_bracket_compat(SEED)
    if result.passed:
        falsification = result.details["falsification"]
        assert falsification["X"] == "@x"
        assert falsification["Y"] == "@y"
        assert falsification["discrepancy"] == "-1"
    report(7, result, 5.0)


def test_criterion_08_bv():
    result = criterion_bv(SEED)
    if result.passed:
        assert result.details["trials"] >= 200
        assert result.details["non_derivation_witness"] is not None
    report(8, result, 30.0)


def test_criterion_09_hessian_pairing():
    result = criterion_hessian_pairing(SEED)
    if result.passed:
        assert result.details["random_hessians"] == 100
        assert result.details["rejection_witness"]["pair"] == ("x", "y")
    report(9, result, 10.0)


def test_criterion_10_coalgebra():
    result = criterion_coalgebra(SEED)
    if result.passed:
        assert result.details["trials"] >= 200
    report(10, result, 30.0)


def test_criterion_11_determinism(capsys):
    argv = ["suite", "--seed", "0", "--json", "--no-timing"]
    start = time.perf_counter()
    code1 = main(list(argv))
    first = capsys.readouterr().out
    code2 = main(list(argv))
    second = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    assert code1 == code2 == 0
    assert first == second  # byte-identical
    doc = json.loads(first)
    assert [c["status"] for c in doc["results"]["checks"]] == ["pass"] * 10
    print(f"[PASS] criterion 11: determinism ({elapsed:.2f}s)")
