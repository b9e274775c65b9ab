"""Text input format.

    ring QQ[x,y,z];            # or GF(32003)[x,y,z]
    ideal x^2, x*y - 3z, z^2;  # '*' optional, '#' comments to end of line
    ideal x, y;                # later statements allowed (second operand etc.)

Whitespace-insensitive; parse errors carry line and column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ring import GF, QQ, GrevLex, Lex, PolynomialRing


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class Token:
    kind: str  # ident | nat | sym
    text: str
    line: int
    column: int


_SYMBOLS = set(";,^*+-()[]/")


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            start = i
            startcol = col
            while i < len(text) and text[i].isdigit():
                i += 1
                col += 1
            tokens.append(Token("nat", text[start:i], line, startcol))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            startcol = col
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
                col += 1
            tokens.append(Token("ident", text[start:i], line, startcol))
            continue
        if ch in _SYMBOLS:
            tokens.append(Token("sym", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    return tokens


class _Parser:
    def __init__(self, tokens, nvars_ident=None):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind=None, text=None):
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else Token("sym", "", 1, 1)
            raise ParseError("unexpected end of input", last.line, last.column)
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.text!r}", tok.line, tok.column)
        if text is not None and tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.line, tok.column)
        self.pos += 1
        return tok

    def at(self, kind, text=None):
        tok = self.peek()
        return tok is not None and tok.kind == kind and (text is None or tok.text == text)


# -- polynomial grammar -------------------------------------------------------
# expr   := ['-'] term (('+'|'-') term)*
# term   := factor (['*'] factor)*       (juxtaposition multiplies)
# factor := base ['^' nat]
# base   := nat ['/' nat] | ident | '(' expr ')'


def _parse_expr(p: _Parser, ring: PolynomialRing):
    negate = False
    if p.at("sym", "-"):
        p.take()
        negate = True
    acc = _parse_term(p, ring)
    if negate:
        acc = -acc
    while p.at("sym", "+") or p.at("sym", "-"):
        op = p.take().text
        term = _parse_term(p, ring)
        acc = acc + term if op == "+" else acc - term
    return acc


def _parse_term(p: _Parser, ring: PolynomialRing):
    acc = _parse_factor(p, ring)
    while True:
        if p.at("sym", "*"):
            p.take()
            acc = acc * _parse_factor(p, ring)
        elif p.at("ident") or p.at("nat") or p.at("sym", "("):
            acc = acc * _parse_factor(p, ring)
        else:
            return acc


def _parse_factor(p: _Parser, ring: PolynomialRing):
    base = _parse_base(p, ring)
    if p.at("sym", "^"):
        p.take()
        exp = int(p.take("nat").text)
        base = base**exp
    return base


def _parse_base(p: _Parser, ring: PolynomialRing):
    tok = p.peek()
    if tok is None:
        raise ParseError("unexpected end of polynomial", 1, 1)
    if tok.kind == "nat":
        p.take()
        value = Fraction(int(tok.text))
        if p.at("sym", "/"):
            p.take()
            den = p.take("nat")
            if int(den.text) == 0:
                raise ParseError("division by zero", den.line, den.column)
            value = value / int(den.text)
        return ring.constant(value)
    if tok.kind == "ident":
        p.take()
        if tok.text not in ring.variables:
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.column)
        return ring.gen(ring.variables.index(tok.text))
    if tok.kind == "sym" and tok.text == "(":
        p.take()
        inner = _parse_expr(p, ring)
        p.take("sym", ")")
        return inner
    raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.column)


def parse_polynomial(ring: PolynomialRing, text: str):
    p = _Parser(_tokenize(text))
    poly = _parse_expr(p, ring)
    tok = p.peek()
    if tok is not None:
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.column)
    return poly


# -- input files ---------------------------------------------------------------


@dataclass
class ParsedInput:
    ring: PolynomialRing
    ideals: list  # list[list[Polynomial]] in statement order


def parse_input(text: str, order=None) -> ParsedInput:
    """Parse `ring <field>[vars]; ideal f, g, ...; [ideal ...;]*`."""
    p = _Parser(_tokenize(text))
    kw = p.take("ident")
    if kw.text != "ring":
        raise ParseError("input must start with a ring statement", kw.line, kw.column)
    field_tok = p.take("ident")
    if field_tok.text == "QQ":
        field = QQ
    elif field_tok.text == "GF":
        p.take("sym", "(")
        char = p.take("nat")
        p.take("sym", ")")
        try:
            field = GF(int(char.text))
        except ValueError as exc:
            raise ParseError(str(exc), char.line, char.column) from None
    else:
        raise ParseError(f"unknown field {field_tok.text!r} (use QQ or GF(p))", field_tok.line, field_tok.column)
    p.take("sym", "[")
    names = [p.take("ident").text]
    while p.at("sym", ","):
        p.take()
        names.append(p.take("ident").text)
    p.take("sym", "]")
    p.take("sym", ";")
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names", field_tok.line, field_tok.column)
    ring = PolynomialRing(names, field, order)

    ideals = []
    while p.peek() is not None:
        kw = p.take("ident")
        if kw.text != "ideal":
            raise ParseError(f"expected 'ideal', found {kw.text!r}", kw.line, kw.column)
        gens = [_parse_expr(p, ring)]
        while p.at("sym", ","):
            p.take()
            gens.append(_parse_expr(p, ring))
        p.take("sym", ";")
        ideals.append(gens)
    if not ideals:
        tok = p.tokens[-1] if p.tokens else Token("sym", "", 1, 1)
        raise ParseError("at least one ideal statement required", tok.line, tok.column)
    return ParsedInput(ring, ideals)


def order_from_name(name: str):
    if name == "grevlex":
        return GrevLex()
    if name == "lex":
        return Lex()
    raise ValueError(f"unknown order {name!r}")
