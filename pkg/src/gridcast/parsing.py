"""Pattern text grammar used by the CLI and file I/O.

    pattern := "standard" d=<int> e=<int>
             | "lattice" u=(<int>,<int>) v=(<int>,<int>) offsets=(<int>,<int>)[;(<int>,<int>)]*

Whitespace-insensitive ASCII. Canonical serialization always emits the
"lattice" form after canonicalization, and parse/serialize round-trip.
"""

from __future__ import annotations

from gridcast.core import PeriodicPattern, Vertex, canonicalize, standard


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise PatternSyntaxError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise PatternSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])

    def pair(self) -> Vertex:
        self.expect("(")
        x = self.integer()
        self.expect(",")
        y = self.integer()
        self.expect(")")
        return (x, y)

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise PatternSyntaxError("unexpected trailing input", self.pos)


def parse_pattern(text: str) -> PeriodicPattern:
    """Parse the grammar above; the result is always canonicalized."""
    cur = _Cursor(text)
    if cur.peek("standard"):
        cur.expect("standard")
        cur.expect("d")
        cur.expect("=")
        d = cur.integer()
        cur.expect("e")
        cur.expect("=")
        e = cur.integer()
        cur.end()
        return canonicalize(standard(d, e))
    if cur.peek("lattice"):
        cur.expect("lattice")
        cur.expect("u")
        cur.expect("=")
        u = cur.pair()
        cur.expect("v")
        cur.expect("=")
        v = cur.pair()
        cur.expect("offsets")
        cur.expect("=")
        offsets = [cur.pair()]
        while cur.peek(";"):
            cur.expect(";")
            offsets.append(cur.pair())
        cur.end()
        return canonicalize(PeriodicPattern(u, v, tuple(offsets)))
    raise PatternSyntaxError("expected 'standard' or 'lattice'", cur.pos)


def serialize_pattern(p: PeriodicPattern) -> str:
    canon = canonicalize(p)
    off = ";".join(f"({x},{y})" for x, y in canon.offsets)
    ux, uy = canon.basis_u
    vx, vy = canon.basis_v
    return f"lattice u=({ux},{uy}) v=({vx},{vy}) offsets={off}"
