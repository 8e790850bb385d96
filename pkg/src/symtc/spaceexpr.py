"""Recursive-descent parser for space expressions.

Grammar (whitespace insignificant, "x" left-associative, "^" tighter):

    Space := Term ("x" Term)*
    Term  := Leaf ("^" INT)*
    Leaf  := "S(" INT ")" | "SP(" INT "," Surf ")" | Surf
    Surf  := "M(" INT ")" | "N(" INT ")"

Parsing validates parameters and the coefficient-field convention; the
canonical printer is ``str(descriptor)`` and round-trips through the parser.
"""

from __future__ import annotations

from typing import Tuple

from .catalog import (
    NonOrientable,
    Orientable,
    Power,
    Product,
    SpaceDescriptor,
    Sphere,
    SymmetricProduct,
    field_of,
)
from .errors import ParseError


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise ParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def try_take(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _surface(sc: _Scanner):
    if sc.try_take("M"):
        sc.take("(")
        g = sc.integer()
        sc.take(")")
        if g < 0:
            raise ParseError("orientable genus must be >= 0", sc.pos)
        return Orientable(g)
    if sc.try_take("N"):
        sc.take("(")
        g = sc.integer()
        sc.take(")")
        if g < 1:
            raise ParseError("non-orientable genus must be >= 1", sc.pos)
        return NonOrientable(g)
    raise ParseError("expected a surface M(g) or N(g)", sc.pos)


def _leaf(sc: _Scanner) -> SpaceDescriptor:
    if sc.try_take("SP"):
        sc.take("(")
        n = sc.integer()
        if n < 1:
            raise ParseError("symmetric product exponent must be >= 1", sc.pos)
        sc.take(",")
        surf = _surface(sc)
        sc.take(")")
        return SymmetricProduct(n, surf)
    if sc.try_take("S"):
        sc.take("(")
        k = sc.integer()
        sc.take(")")
        if k < 1:
            raise ParseError("sphere dimension must be >= 1", sc.pos)
        return Sphere(k)
    return _surface(sc)


def _term(sc: _Scanner) -> SpaceDescriptor:
    node = _leaf(sc)
    while sc.try_take("^"):
        k = sc.integer()
        if k < 1:
            raise ParseError("power exponent must be >= 1", sc.pos)
        node = node if k == 1 else Power(node, k)
    return node


def parse_space(text: str) -> SpaceDescriptor:
    """Parse a space expression; raises ParseError with a position."""
    sc = _Scanner(text)
    parts = [_term(sc)]
    while sc.try_take("x"):
        parts.append(_term(sc))
    if not sc.at_end():
        raise ParseError("unexpected trailing input", sc.pos)
    space = parts[0] if len(parts) == 1 else Product(tuple(parts))
    field_of(space)  # reject mixed coefficient leaves early
    return space


def print_space(space: SpaceDescriptor) -> str:
    """Canonical printer; parse(print_space(parse(t))) == parse(t)."""
    return str(space)
