"""Parsing and rendering of ring and element literals.

Ring grammar:     Z   Z/9   M2(Z/3)   M3(Z)
Element grammar:  an integer for scalar rings, a row-major nested list such
                  as [[-2,3,2],[-2,3,2],[1,-1,-1]] for matrix rings.

Rendering uses the same grammar, so every emitted literal parses back to
the element it came from.  A Unicode minus sign is accepted as input.
"""

from __future__ import annotations

from .rings import Element, RingSpec, Z, matrix, modular


class ParseError(ValueError):
    """A literal failed to parse; carries the 0-based offending position."""

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} (at position {position} in {text!r})")
        self.text = text
        self.position = position


class _Cursor:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.text, self.pos)
        self.pos += 1

    def fail(self, message: str) -> "ParseError":
        return ParseError(message, self.text, self.pos)

    def unsigned_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", self.text, start)
        return int(self.text[start:self.pos])

    def signed_int(self) -> int:
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        return sign * self.unsigned_int()

    def expect_end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.text, self.pos)


def _normalize(text: str) -> str:
    return text.replace("−", "-")


def _parse_scalar_ring(cur: _Cursor) -> RingSpec:
    cur.skip_ws()
    if cur.peek() != "Z":
        raise cur.fail("expected a ring literal starting with 'Z' or 'M'")
    cur.take("Z")
    if cur.peek() == "/":
        cur.take("/")
        at = cur.pos
        n = cur.unsigned_int()
        if n < 2:
            raise ParseError("modulus must be at least 2", cur.text, at)
        return modular(n)
    return Z


def parse_ring(text: str) -> RingSpec:
    cur = _Cursor(_normalize(text))
    cur.skip_ws()
    if cur.peek() == "M":
        cur.take("M")
        at = cur.pos
        dim = cur.unsigned_int()
        if dim < 1:
            raise ParseError("matrix dimension must be at least 1", cur.text, at)
        cur.skip_ws()
        cur.take("(")
        base = _parse_scalar_ring(cur)
        cur.skip_ws()
        cur.take(")")
        ring = matrix(base, dim)
    else:
        ring = _parse_scalar_ring(cur)
    cur.expect_end()
    return ring


def _parse_row(cur: _Cursor) -> list[int]:
    cur.skip_ws()
    cur.take("[")
    row = []
    while True:
        cur.skip_ws()
        row.append(cur.signed_int())
        cur.skip_ws()
        if cur.peek() == ",":
            cur.take(",")
            continue
        cur.take("]")
        return row


def parse_element(ring: RingSpec, text: str) -> Element:
    """Parse an element literal in ``ring``; negatives reduce canonically."""
    cur = _Cursor(_normalize(text))
    cur.skip_ws()
    if not ring.is_matrix:
        if cur.peek() == "[":
            raise cur.fail(f"{ring} takes an integer literal, not a matrix")
        value = cur.signed_int()
        cur.expect_end()
        return ring.element(value)
    if cur.peek() != "[":
        raise cur.fail(f"{ring} takes a row-major matrix literal like [[0,1],[1,1]]")
    shape_at = cur.pos
    cur.take("[")
    rows = []
    while True:
        rows.append(_parse_row(cur))
        cur.skip_ws()
        if cur.peek() == ",":
            cur.take(",")
            continue
        cur.take("]")
        break
    cur.expect_end()
    k = ring.dim
    if len(rows) != k or any(len(row) != k for row in rows):
        raise ParseError(f"expected a {k}x{k} matrix", cur.text, shape_at)
    return ring.element(rows)


def render_ring(ring: RingSpec) -> str:
    return str(ring)


def render_element(x: Element) -> str:
    return str(x)
