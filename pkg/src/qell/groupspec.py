"""Parser for the group-spec mini-language.

Grammar (whitespace-insensitive; positions reported against the stripped text):

    spec   := atom ("x" atom)*
    atom   := ("S" | "A" | "C" | "D") int
            | "perm:" int ":" gens
    gens   := cycles (";" cycles)*
    cycles := ("(" int ("," int)* ")")+

Points are 0-indexed.  "x" builds direct products, left-associatively.
"""

from __future__ import annotations

from .errors import ParseError
from .groups import FiniteGroup, builtin, direct_product, make_group
from .perm import from_cycles


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected integer", start)
        return int(self.text[start:self.pos])


def parse_group_spec(text: str) -> FiniteGroup:
    stripped = "".join(text.split())
    if not stripped:
        raise ParseError("empty group spec", 0)
    cur = _Cursor(stripped)
    group = _atom(cur)
    while cur.peek() == "x":
        cur.take()
        right = _atom(cur)
        group = direct_product(group, right,
                               spec=f"{group.spec}x{right.spec}")
    if cur.pos != len(stripped):
        raise ParseError(f"unexpected {cur.peek()!r}", cur.pos)
    return group


def _atom(cur: _Cursor) -> FiniteGroup:
    start = cur.pos
    if cur.text.startswith("perm:", cur.pos):
        cur.pos += len("perm:")
        degree = cur.integer()
        cur.expect(":")
        gens = [_cycles(cur, degree)]
        while cur.peek() == ";":
            cur.take()
            gens.append(_cycles(cur, degree))
        spec_text = cur.text[start:cur.pos]
        try:
            return make_group(degree, gens, name=spec_text, spec=spec_text)
        except Exception as exc:
            from .errors import GroupTooLargeError
            if isinstance(exc, GroupTooLargeError):
                raise
            raise ParseError(str(exc), start) from exc
    family = cur.peek()
    if family in "SACD":
        cur.take()
        n = cur.integer()
        try:
            return builtin(family, n)
        except Exception as exc:
            from .errors import GroupTooLargeError
            if isinstance(exc, GroupTooLargeError):
                raise
            raise ParseError(str(exc), start) from exc
    raise ParseError(f"expected a family letter or 'perm:', got {cur.peek()!r}",
                     cur.pos)


def _cycles(cur: _Cursor, degree: int):
    cycles = []
    if cur.peek() != "(":
        raise ParseError("expected '('", cur.pos)
    while cur.peek() == "(":
        cur.take()
        pts = [cur.integer()]
        while cur.peek() == ",":
            cur.take()
            pts.append(cur.integer())
        cur.expect(")")
        for pt in pts:
            if pt >= degree:
                raise ParseError(f"point {pt} exceeds degree {degree}", cur.pos - 1)
        cycles.append(tuple(pts))
    try:
        return from_cycles(degree, cycles)
    except Exception as exc:
        raise ParseError(str(exc), cur.pos) from exc
