"""Command line behavior: output shapes, exit codes, determinism."""

import json

import pytest

from dcrit import __version__
from dcrit.cli import Report, main
from dcrit.parsing import parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json", "--no-timing")
    return code, json.loads(out), err


def test_milnor_line(capsys):
    code, out, _ = run(capsys, "crit", "--vars", "x,y", "-f", "x^3 + y^3",
                       "--milnor")
    assert code == 0
    assert "milnor = 4" in out


def test_crit_json_schema(capsys):
    code, doc, _ = run_json(capsys, "crit", "--vars", "x,y", "-f", "x^3 + y^3")
    assert code == 0
    assert list(doc) == ["command", "inputs", "results", "version"]
    assert doc["command"] == "crit"
    assert doc["version"] == __version__
    assert doc["results"]["milnor"] == 4
    assert doc["results"]["pairing"] == {"hessian": ["6*x", "0", "0", "6*y"],
                                         "symmetric": True,
                                         "nondegenerate": True}
    assert doc["results"]["hilbert"]["0"][:4] == [1, 2, 1, 0]
    assert doc["results"]["obstruction"]["quotient_dim"] == 4


def test_crit_infinite_milnor(capsys):
    code, doc, _ = run_json(capsys, "crit", "--vars", "x,y", "-f", "x^2*y^2",
                            "--milnor")
    assert code == 0
    assert doc["results"]["milnor"] == "infinite"


def test_printed_polynomials_reparse(capsys):
    _, doc, _ = run_json(capsys, "crit", "--vars", "x,y", "-f", "x^3 + y^3",
                         "--pairing")
    entries = [parse_poly(s, ("x", "y")) for s in doc["results"]["pairing"]["hessian"]]
    f = parse_poly("x^3 + y^3", ("x", "y"))
    assert entries == [f.diff("x").diff("x"), f.diff("x").diff("y"),
                       f.diff("y").diff("x"), f.diff("y").diff("y")]


def test_zero_subcommand(capsys):
    code, doc, _ = run_json(capsys, "zero", "--vars", "x,y", "--section",
                            "x^2, y", "--cutoff", "6")
    assert code == 0
    assert doc["results"]["checks"] == [{"name": "d_squared", "status": "pass"}]
    assert doc["results"]["h0_dimension"] == 2
    assert doc["results"]["hilbert"]["0"] == [1, 1, 0, 0, 0, 0, 0]
    assert doc["inputs"]["weights"] == [1, 1]


def test_zero_inhomogeneous_without_weights_is_reported(capsys):
    code, doc, _ = run_json(capsys, "zero", "--vars", "x", "--section",
                            "x + x^2")
    assert code == 0
    assert doc["results"]["hilbert"] is None
    assert doc["results"]["h0_dimension"] == 2


def test_zero_inhomogeneous_with_weights_is_an_input_error(capsys):
    code, out, err = run(capsys, "zero", "--vars", "x", "--section", "x + x^2",
                         "--weights", "2")
    assert code == 2
    assert out == ""
    assert "not quasi-homogeneous" in err


def test_syntax_error_position(capsys):
    code, out, err = run(capsys, "zero", "--vars", "x", "--section", "x +* 2")
    assert code == 2
    assert "position 3" in err


def test_unknown_variable_is_an_input_error(capsys):
    code, _, err = run(capsys, "crit", "--vars", "x", "-f", "q + 1")
    assert code == 2
    assert "unknown name" in err


def test_fancy_subcommand(capsys):
    code, doc, _ = run_json(capsys, "fancy", "--vars", "x", "--rank", "2",
                            "--cutoff", "5")
    assert code == 0
    assert doc["results"]["checks"][0] == {"name": "resolution_certificate",
                                           "status": "pass"}
    assert doc["results"]["hilbert"]["0"] == [1, 1, 1, 1, 1, 1]
    assert doc["results"]["hilbert"]["-1"] == [0, 0, 0, 0, 0, 0]


def test_check_compat_records_failure_but_exits_zero(capsys):
    code, doc, _ = run_json(capsys, "check", "compat", "--vars", "x,y",
                            "--alpha", "y*d_x", "--trials", "5")
    assert code == 0
    assert doc["results"]["holds"] is False
    entry = doc["results"]["checks"][0]
    assert entry["status"] == "fail"
    assert entry["counterexample"]["X"] == "@x"
    assert entry["counterexample"]["Y"] == "@y"
    assert entry["counterexample"]["discrepancy"] == "-1"


def test_check_compat_expect_holds_fails_loudly(capsys):
    code, _, _ = run_json(capsys, "check", "compat", "--vars", "x,y",
                          "--alpha", "y*d_x", "--trials", "5", "--expect-holds")
    assert code == 1


def test_check_compat_on_exact_form(capsys):
    code, doc, _ = run_json(capsys, "check", "compat", "--vars", "x,y",
                            "--alpha", "3*x^2*d_x + 3*y^2*d_y", "--trials", "10")
    assert code == 0
    assert doc["results"]["holds"] is True


def test_check_gerstenhaber(capsys):
    code, doc, _ = run_json(capsys, "check", "gerstenhaber", "--n", "2",
                            "--trials", "15")
    assert code == 0
    assert doc["results"]["checks"][0]["status"] == "pass"


def test_check_d2(capsys):
    code, doc, _ = run_json(capsys, "check", "d2", "--vars", "x,y",
                            "--section", "x*y, x - y")
    assert code == 0
    assert doc["results"]["checks"][0]["name"] == "d_squared"


def test_check_missing_argument(capsys):
    code, _, err = run(capsys, "check", "compat", "--vars", "x,y")
    assert code == 2
    assert "alpha" in err


def test_lagr_subcommand(capsys):
    code, doc, _ = run_json(capsys, "lagr", "--vars", "x,y", "--alpha",
                            "x*d_x")
    assert code == 0
    assert doc["results"]["pairing"]["hessian"] == ["1", "0", "0", "0"]
    assert doc["results"]["complex"]["-1"] == {"rows": 1, "cols": 2,
                                               "entries": ["-x", "0"]}


def test_lagr_non_closed_is_an_input_error(capsys):
    code, _, err = run(capsys, "lagr", "--vars", "x,y", "--alpha", "y*d_x")
    assert code == 2
    assert "not closed" in err


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_report_round_trip(capsys):
    _, doc, _ = run_json(capsys, "zero", "--vars", "x", "--section", "x^3")
    report = Report.from_json(doc)
    assert report.to_json() == doc
    assert Report.from_json(report.to_json()) == report


def test_timing_is_present_unless_suppressed(capsys):
    code, out, _ = run(capsys, "crit", "--vars", "x", "-f", "x^2", "--milnor",
                       "--json")
    doc = json.loads(out)
    assert code == 0
    assert "timing" in doc and "seconds" in doc["timing"]
    _, doc2, _ = run_json(capsys, "crit", "--vars", "x", "-f", "x^2",
                          "--milnor")
    assert "timing" not in doc2
