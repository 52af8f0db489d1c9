"""Parser for the textual position grammar used by the CLI and the API.

    CS[t1,t2,...,tn]   circular game, n >= 3 comma-separated tip counts
    BS2[p,q]           two-cross game, p, q >= 3
    A+B+...            disjoint sum of positions

Whitespace may appear between any two tokens.  Errors report the offset of
the offending character.
"""

from __future__ import annotations

from .bs2 import Bs2Position
from .circular import CircularState

Component = "CircularState | Bs2Position"


class NotationError(ValueError):
    """Malformed position text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at offset {position})")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise NotationError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def peek_word(self) -> str:
        self.skip_ws()
        end = self.pos
        while end < len(self.text) and self.text[end].isalnum():
            end += 1
        return self.text[self.pos:end]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise NotationError("expected a non-negative integer", start)
        return int(self.text[start:self.pos])

    def int_list(self) -> tuple[list[int], int]:
        """Bracketed comma-separated integers; returns (values, bracket offset)."""
        self.skip_ws()
        bracket = self.pos
        self.expect("[")
        values = [self.integer()]
        while True:
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == ",":
                self.pos += 1
                values.append(self.integer())
            else:
                break
        self.expect("]")
        return values, bracket


def _parse_component(scanner: _Scanner):
    word = scanner.peek_word()
    if word == "CS":
        scanner.expect("CS")
        values, bracket = scanner.int_list()
        if len(values) < 3:
            raise NotationError("CS takes at least 3 tip counts", bracket)
        return CircularState(values)
    if word == "BS2":
        scanner.expect("BS2")
        values, bracket = scanner.int_list()
        if len(values) != 2:
            raise NotationError("BS2 takes exactly 2 tip counts", bracket)
        if min(values) < 3:
            raise NotationError("BS2 needs p, q >= 3", bracket)
        return Bs2Position.start(values[0], values[1])
    raise NotationError("expected 'CS[' or 'BS2['", scanner.pos)


def parse_position(text: str) -> list:
    """Parse a position string into its components.

    Returns a list whose entries are :class:`CircularState` or opening
    :class:`Bs2Position` objects, one per '+'-joined term.
    """
    scanner = _Scanner(text)
    if scanner.done():
        raise NotationError("empty position string", scanner.pos)
    components = [_parse_component(scanner)]
    while not scanner.done():
        scanner.expect("+")
        components.append(_parse_component(scanner))
    return components


def format_position(components) -> str:
    """Inverse of :func:`parse_position` (no whitespace)."""
    return "+".join(c.notation() for c in components)
