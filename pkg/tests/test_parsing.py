"""Grammar coverage and error positions for the expression parsers."""

import pytest

from dcrit.parsing import (ParseError, parse_one_form, parse_poly,
                           parse_polyvector, parse_section)
from dcrit.poly import Poly

VS = ("x", "y")


def test_rationals_and_precedence():
    f = parse_poly("3/4*x + x*y^2", VS)
    assert str(f) == "x*y^2 + 3/4*x"
    assert parse_poly("2*x^2", VS) == parse_poly("2*(x^2)", VS)
    assert parse_poly("(x + y)^2", VS) == parse_poly("x^2 + 2*x*y + y^2", VS)
    assert parse_poly("-x + x", VS) == Poly.zero(VS)
    assert parse_poly("0", VS) == Poly.zero(VS)


def test_whitespace_insignificant():
    assert parse_poly(" x +  2* y ", VS) == parse_poly("x+2*y", VS)


def test_error_positions():
    with pytest.raises(ParseError) as e:
        parse_poly("x +* 2", VS)
    assert e.value.pos == 3
    assert "position 3" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse_poly("q + 1", VS)
    assert e.value.pos == 0
    with pytest.raises(ParseError):
        parse_poly("(x", VS)
    with pytest.raises(ParseError):
        parse_poly("x^", VS)
    with pytest.raises(ParseError):
        parse_poly("x y", VS)  # missing operator
    with pytest.raises(ParseError):
        parse_poly("1/0", VS)
    with pytest.raises(ParseError):
        parse_poly("", VS)


def test_parse_section():
    comps = parse_section("x^2, y", VS)
    assert comps == (parse_poly("x^2", VS), parse_poly("y", VS))
    with pytest.raises(ParseError):
        parse_section("x^2, ", VS)


def test_parse_one_form():
    alpha = parse_one_form("x*d_x + 2*y*d_y", VS)
    assert alpha.components == (parse_poly("x", VS), parse_poly("2*y", VS))
    zero = parse_one_form("0", VS)
    assert zero.components == (Poly.zero(VS), Poly.zero(VS))
    with pytest.raises(ParseError):
        parse_one_form("x", VS)  # scalar term, no d_ factor
    with pytest.raises(ParseError):
        parse_one_form("d_x/\\d_y", VS)  # two odd factors in one term


def test_parse_polyvector():
    a = parse_polyvector("(x*y)*@x/\\@y", VS)
    assert str(a) == "x*y*@x/\\@y"
    assert parse_polyvector("@y/\\@x", VS) == -parse_polyvector("@x/\\@y", VS)
    assert parse_polyvector("@x/\\@x", VS).terms == {}
    assert parse_polyvector("0", VS).terms == {}


def test_polyvector_round_trip():
    for src in ("x*@x - y*@y", "@x/\\@y + 1", "2/3*x^2*@y", "x*y - 1"):
        a = parse_polyvector(src, VS)
        assert parse_polyvector(str(a), VS) == a
