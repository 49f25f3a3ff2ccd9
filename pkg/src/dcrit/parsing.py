"""Parsers for polynomials, sections, one-forms, and polyvector fields.

One grammar drives all four readers:

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor (('*' | '/\\') factor)*
    factor  := primary ('^' nat)*
    primary := rational | name | '(' expr ')'
    rational:= nat ('/' nat)?

Names resolve to ring variables, and (depending on the reader) to basis
generators: '@x' for the vector field dual to x, 'd_x' for its differential.
Errors carry the character position of the offending token.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .exterior import Ambient, ExtElt, Section
from .poly import Poly
from .polyvec import OneForm, form_ambient, polyvector_ambient

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+)
  | (?P<gen>@[A-Za-z_][A-Za-z_0-9]*)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<wedge>/\\)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    """Syntax or name error in an input expression, with its position."""

    def __init__(self, message: str, pos: int, src: str):
        super().__init__(f"{message} at position {pos}: {src!r}")
        self.pos = pos
        self.src = src


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos, src)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    """Recursive-descent reader producing ExtElt values over an ambient.

    Plain polynomials are parsed over the degree-zero part; generator
    tokens are only legal when `gens` maps them to basis indices.
    """

    def __init__(self, src: str, ambient: Ambient, gens: dict[str, int]):
        self.src = src
        self.ambient = ambient
        self.gens = gens
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'!r}", tok[2], self.src)
        return tok

    def parse(self) -> ExtElt:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2], self.src)
        return value

    def expr(self) -> ExtElt:
        negate = False
        if self.peek()[:2] == ("op", "-"):
            self.advance()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> ExtElt:
        value = self.factor()
        while self.peek()[0] == "wedge" or self.peek()[:2] == ("op", "*"):
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> ExtElt:
        value = self.primary()
        while self.peek()[:2] == ("op", "^"):
            self.advance()
            tok = self.expect("number")
            value = value ** int(tok[1])
        return value

    def primary(self) -> ExtElt:
        kind, text, pos = self.advance()
        if kind == "number":
            num = int(text)
            if self.peek()[:2] == ("op", "/"):
                self.advance()
                dtok = self.expect("number")
                den = int(dtok[1])
                if den == 0:
                    raise ParseError("zero denominator", dtok[2], self.src)
                return ExtElt.from_poly(self.ambient, Poly.constant(self.ambient.vars, Fraction(num, den)))
            return ExtElt.from_poly(self.ambient, Poly.constant(self.ambient.vars, num))
        if kind == "gen":
            if text not in self.gens:
                raise ParseError(f"unknown generator {text!r}", pos, self.src)
            return ExtElt.generator(self.ambient, self.gens[text])
        if kind == "name":
            if text in self.gens:
                return ExtElt.generator(self.ambient, self.gens[text])
            if text in self.ambient.vars:
                return ExtElt.from_poly(self.ambient, Poly.variable(self.ambient.vars, text))
            raise ParseError(f"unknown name {text!r}", pos, self.src)
        if (kind, text) == ("op", "("):
            value = self.expr()
            tok = self.advance()
            if tok[:2] != ("op", ")"):
                raise ParseError("expected ')'", tok[2], self.src)
            return value
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos, self.src)


def parse_poly(src: str, vars: Sequence[str]) -> Poly:
    """Parse a polynomial over the given variables."""
    ambient = Ambient(tuple(vars), ())
    elt = _Parser(src, ambient, {}).parse()
    return elt.scalar_part()


def parse_section(src: str, vars: Sequence[str]) -> tuple[Poly, ...]:
    """Parse a comma-separated list of polynomials."""
    parts = src.split(",")
    return tuple(parse_poly(part, vars) for part in parts)


def parse_one_form(src: str, vars: Sequence[str]) -> OneForm:
    """Parse 'a_1*d_x1 + ... + a_n*d_xn' into a OneForm.

    Every term must contain exactly one d_ generator; purely scalar or
    higher-wedge input is rejected.
    """
    vs = tuple(vars)
    ambient = form_ambient(vs)
    gens = {g: j for j, g in enumerate(ambient.gens)}
    elt = _Parser(src, ambient, gens).parse()
    for (exps, subset) in elt.terms:
        if len(subset) != 1:
            raise ParseError("expected a 1-form (every term needs exactly one d_ factor)", 0, src)
    components = [Poly.zero(vs) for _ in vs]
    for (exps, subset), c in elt.terms.items():
        components[subset[0]] = components[subset[0]] + Poly.monomial(vs, exps, c)
    return OneForm(vs, tuple(components))


def parse_polyvector(src: str, vars: Sequence[str]) -> ExtElt:
    """Parse a polyvector field written with @x generators and /\\ wedges."""
    vs = tuple(vars)
    ambient = polyvector_ambient(vs)
    gens = {g: j for j, g in enumerate(ambient.gens)}
    return _Parser(src, ambient, gens).parse()
