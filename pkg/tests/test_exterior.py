"""Wedge algebra, merge signs, and the contraction differential."""

from fractions import Fraction
from random import Random

import pytest

from dcrit.checks import rand_mixed, rand_section
from dcrit.exterior import Ambient, ExtElt, Section, contract, merge_sign, wedge
from dcrit.parsing import parse_poly
from dcrit.poly import Poly

VS = ("x", "y")
AMB = Ambient(VS, ("e1", "e2", "e3"))


def gen(i):
    return ExtElt.generator(AMB, i)


def test_merge_sign():
    assert merge_sign((0,), (1,)) == (1, (0, 1))
    assert merge_sign((1,), (0,)) == (-1, (0, 1))
    assert merge_sign((), (0, 2)) == (1, (0, 2))
    assert merge_sign((0, 2), (1,)) == (-1, (0, 1, 2))
    assert merge_sign((0, 1), (1,)) == (0, ())  # overlap kills the term


def test_ambient_validation():
    with pytest.raises(ValueError):
        Ambient(VS, ("e1", "e1"))


def test_wedge_anticommutes_on_generators():
    assert gen(0) * gen(1) == -(gen(1) * gen(0))
    assert (gen(0) * gen(0)).terms == {}


def test_graded_commutativity():
    rng = Random(7)
    for _ in range(40):
        a = rand_mixed(rng, AMB, 2)
        b = rand_mixed(rng, AMB, 2)
        for p, ap in a.homogeneous_components().items():
            for q, bq in b.homogeneous_components().items():
                sign = -1 if (p * q) % 2 else 1
                assert ap * bq == sign * (bq * ap)


def test_wedge_associativity():
    rng = Random(8)
    for _ in range(30):
        a, b, c = (rand_mixed(rng, AMB, 2) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_poly_coefficients_multiply_through():
    x = parse_poly("x", VS)
    a = x * gen(0)
    assert a == gen(0) * x
    assert a.coefficient_poly((0,)) == x
    assert a.scalar_part() == Poly.zero(VS)


def test_contraction_signs_are_pinned():
    # rank 1, s = (x): contracting the generator yields minus the component
    amb1 = Ambient(("x",), ("e1",))
    s = Section(amb1, (parse_poly("x", ("x",)),))
    assert contract(s, ExtElt.generator(amb1, 0)) == ExtElt.from_poly(
        amb1, -parse_poly("x", ("x",)))
    # rank 2, s = (1, 0): d(e1 /\ e2) = -e2
    amb2 = Ambient(VS, ("e1", "e2"))
    s2 = Section(amb2, (Poly.one(VS), Poly.zero(VS)))
    e12 = ExtElt.generator(amb2, 0) * ExtElt.generator(amb2, 1)
    assert contract(s2, e12) == -ExtElt.generator(amb2, 1)


def test_contraction_is_an_odd_derivation():
    rng = Random(9)
    for _ in range(40):
        s = rand_section(rng, AMB, 2)
        a = rand_mixed(rng, AMB, 2)
        b = rand_mixed(rng, AMB, 2)
        for p, ap in a.homogeneous_components().items():
            sign = -1 if p % 2 else 1
            lhs = contract(s, ap * b)
            rhs = contract(s, ap) * b + sign * (ap * contract(s, b))
            assert lhs == rhs


def test_contraction_squares_to_zero():
    rng = Random(10)
    for _ in range(40):
        s = rand_section(rng, AMB, 2)
        a = rand_mixed(rng, AMB, 2)
        assert contract(s, contract(s, a)).terms == {}


def test_homogeneous_components_and_degree():
    a = gen(0) * gen(1) + gen(2) + ExtElt.one(AMB)
    comps = a.homogeneous_components()
    assert sorted(comps) == [-2, -1, 0]
    assert comps[-2] == gen(0) * gen(1)
    assert not a.is_homogeneous()
    with pytest.raises(ValueError):
        a.degree()
    assert (gen(0) * gen(1)).degree() == -2
    assert ExtElt.zero(AMB).degree() == 0


def test_str_formats():
    x = parse_poly("x", VS)
    a = 2 * x * gen(0) * gen(1)
    assert str(a) == "2*x*e1/\\e2"
    assert str(ExtElt.zero(AMB)) == "0"
    assert str(ExtElt.one(AMB) + gen(0)) == "1 + e1"


def test_section_validation():
    with pytest.raises(ValueError):
        Section(AMB, (Poly.one(VS),))  # wrong arity
    with pytest.raises(ValueError):
        Section(AMB, (Poly.one(VS), Poly.one(("x",)), Poly.one(VS)))


def test_wedge_helper_matches_mul():
    rng = Random(11)
    a = rand_mixed(rng, AMB, 2)
    b = rand_mixed(rng, AMB, 2)
    assert wedge(a, b) == a * b
