"""Koszul complexes: matrices, d^2, base change, augmentation."""

from random import Random

import pytest

from dcrit.checks import rand_poly, var_names
from dcrit.koszul import (MatrixComplex, augmentation, base_change_compare,
                          build_koszul, build_tautological_koszul,
                          check_d_squared)
from dcrit.parsing import parse_poly, parse_section
from dcrit.poly import Poly, gradient

VS = ("x", "y")


def P(src, vars=VS):
    return parse_poly(src, vars)


def coordinate_complex():
    return build_koszul(VS, [P("x"), P("y")])


def test_differential_matrices_are_pinned():
    K = coordinate_complex()
    assert K.differential_matrix(-1) == [[P("-x"), P("-y")]]
    assert K.differential_matrix(-2) == [[P("y")], [P("-x")]]
    assert K.basis(0) == [()]
    assert K.basis(-1) == [(0,), (1,)]
    assert K.basis(-2) == [(0, 1)]
    assert K.basis(-3) == []
    assert list(K.degrees) == [-2, -1, 0]


def test_d_squared_on_random_sections():
    rng = Random(3)
    for _ in range(25):
        n = rng.randint(1, 3)
        m = rng.randint(1, 3)
        vs = var_names(n)
        comps = [rand_poly(rng, vs, 3) for _ in range(m)]
        assert check_d_squared(build_koszul(vs, comps))


def test_corrupted_complex_is_caught():
    bad = MatrixComplex(("x",), {-2: [[Poly.one(("x",))]], -1: [[P("x", ("x",))]]})
    assert check_d_squared(bad) is False
    good = MatrixComplex(("x",), {-2: [[P("x", ("x",))]], -1: [[Poly.zero(("x",))]]})
    assert check_d_squared(good) is True


def test_shape_mismatch_is_rejected():
    bad = MatrixComplex(("x",), {-2: [[Poly.one(("x",))], [Poly.one(("x",))]],
                                 -1: [[P("x", ("x",))]]})
    with pytest.raises(ValueError):
        check_d_squared(bad)


def test_tautological_complex_shape():
    taut = build_tautological_koszul(("x",), 2)
    assert taut.complex.ambient.vars == ("x", "xi1", "xi2")
    assert check_d_squared(taut)
    # the section is the fiber coordinates themselves
    comps = taut.complex.section.components
    assert comps == parse_section("xi1, xi2", ("x", "xi1", "xi2"))


def test_fiber_name_collision_is_rejected():
    with pytest.raises(ValueError):
        build_tautological_koszul(("x", "xi1"), 2)


def test_base_change_matches_direct_koszul():
    rng = Random(4)
    for _ in range(20):
        n = rng.randint(1, 3)
        m = rng.randint(1, 3)
        vs = var_names(n)
        comps = [Poly.zero(vs) if rng.random() < 0.2 else rand_poly(rng, vs, 3)
                 for _ in range(m)]
        report = base_change_compare(build_tautological_koszul(vs, m), comps)
        assert report.equal and report.witness is None


def test_augmentation_projects_to_the_critical_quotient():
    K = build_koszul(VS, list(gradient(P("x^3 + y^3"))))
    aug = augmentation(K)
    assert aug.target_dimension() == 4
    assert aug.project(P("x^2")) == Poly.zero(VS)
    assert aug.project(P("x*y + 7")) == P("x*y + 7")
    assert aug.project(P("x^4 + x")) == P("x")


def test_zero_rank_and_empty_base():
    K = build_koszul((), [])
    assert list(K.degrees) == [0]
    assert check_d_squared(K)
