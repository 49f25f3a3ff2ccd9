"""Weight-slice cohomology, Hilbert tables, and resolution certificates."""

import pytest

from dcrit.cohomology import (InhomogeneousSectionError, hilbert_table,
                              is_regular_sequence, resolution_certificate,
                              slice_cohomology)
from dcrit.koszul import build_koszul, build_tautological_koszul
from dcrit.parsing import parse_poly
from dcrit.poly import Poly, gradient

VS = ("x", "y")


def P(src, vars=VS):
    return parse_poly(src, vars)


def test_dual_numbers_slices():
    # rank-1 zero section over the empty base: one class in degree 0 and -1
    K = build_koszul((), [Poly.zero(())])
    table = hilbert_table(K, (), 4)
    assert table.rows[0] == (1, 0, 0, 0, 0)
    assert table.rows[-1] == (0, 1, 0, 0, 0)


def test_cusp_critical_slices():
    K = build_koszul(VS, list(gradient(P("x^3 + y^3"))))
    table = hilbert_table(K, (1, 1), 5)
    assert table.rows[0] == (1, 2, 1, 0, 0, 0)
    assert table.rows[-1] == (0,) * 6
    assert table.rows[-2] == (0,) * 6
    assert table.total(0) == 4
    assert table.complete[0] is True


def test_weighted_slices_match_weighted_milnor():
    # f = x^3 + y^2 with weights (2, 3) is quasi-homogeneous of weight 6
    f = parse_poly("x^3 + y^2", VS)
    K = build_koszul(VS, list(gradient(f)))
    table = hilbert_table(K, (2, 3), 6)
    assert table.rows[0] == (1, 0, 1, 0, 0, 0, 0)  # classes 1 and x
    assert table.total(0) == 2
    assert table.complete[0] is True


def test_single_slice_call():
    K = build_koszul(VS, [P("x"), P("y")])
    assert slice_cohomology(K, (1, 1), 0) == {0: 1, -1: 0, -2: 0}
    assert slice_cohomology(K, (1, 1), 2) == {0: 0, -1: 0, -2: 0}


def test_zero_component_inherits_the_section_weight():
    # section (x, 0): the free rank-1 summand shows up in H^-1 at weight 1
    K = build_koszul(("x",), [parse_poly("x", ("x",)), parse_poly("0", ("x",))])
    table = hilbert_table(K, (1,), 4)
    assert table.rows[0] == (1, 0, 0, 0, 0)
    assert table.rows[-1] == (0, 1, 0, 0, 0)
    assert table.rows[-2] == (0,) * 5


def test_inhomogeneous_section_raises():
    K = build_koszul(("x",), [parse_poly("x + x^2", ("x",))])
    with pytest.raises(InhomogeneousSectionError) as e:
        hilbert_table(K, (1,), 3)
    assert "not quasi-homogeneous" in str(e.value)


def test_regular_sequence_reports():
    K = build_koszul(VS, [P("x"), P("y")])
    report = is_regular_sequence(K, (1, 1), 8)
    assert report.regular and bool(report) and report.first_failure is None

    x = parse_poly("x", ("x",))
    degenerate = is_regular_sequence(build_koszul(("x",), [x, x]), (1,), 8)
    assert not degenerate.regular
    assert degenerate.first_failure == (-1, 1)


def test_resolution_certificate_small():
    cert = resolution_certificate(build_tautological_koszul(("x",), 2), 6)
    assert cert.ok and cert.h0_matches and cert.negatives_vanish
    assert cert.first_mismatch is None
    assert cert.cutoff == 6


def test_resolution_certificate_weighted_base():
    cert = resolution_certificate(build_tautological_koszul(VS, 1), 5,
                                  base_weights=(1, 2))
    assert cert.ok
