"""Text grammar for polynomials.

    poly     := ['+'|'-'] term (('+'|'-') term)*
    term     := [rational] factor*          (at least one of the two)
    rational := int | int '/' int
    factor   := 'x' int ['^' int]           (an optional '*' may separate factors)

Whitespace is ignored everywhere. Several polynomials are separated by
newlines or ``;``; blank entries and ``#`` comments are skipped.
"""

from __future__ import annotations

from typing import Sequence

from gmpy2 import mpq

from .algebra import Polynomial
from .errors import ParseError


class _Cursor:
    def __init__(self, text: str, line: int):
        self.chars = []
        self.cols = []
        for col, ch in enumerate(text, start=1):
            if not ch.isspace():
                self.chars.append(ch)
                self.cols.append(col)
        self.i = 0
        self.line = line
        self.end_col = len(text) + 1

    def peek(self) -> str:
        return self.chars[self.i] if self.i < len(self.chars) else ""

    def col(self) -> int:
        return self.cols[self.i] if self.i < len(self.cols) else self.end_col

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.line, self.col())

    def take_int(self) -> int:
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        if start == self.i:
            raise self.error(f"expected an integer, found {self.peek() or 'end of input'!r}")
        return int("".join(self.chars[start:self.i]))


def _parse_term(cur: _Cursor, sign: int) -> tuple[mpq, dict]:
    coeff = mpq(sign)
    seen = False
    if cur.peek().isdigit():
        num = cur.take_int()
        den = 1
        if cur.peek() == "/":
            cur.i += 1
            col = cur.col()
            den = cur.take_int()
            if den == 0:
                raise ParseError("zero denominator", cur.line, col)
        coeff *= mpq(num, den)
        seen = True
    powers: dict = {}
    while True:
        if cur.peek() == "*" and seen:
            cur.i += 1
            if cur.peek() != "x":
                raise cur.error("expected a variable after '*'")
        if cur.peek() != "x":
            break
        cur.i += 1
        col = cur.col()
        idx = cur.take_int()
        if idx < 1:
            raise ParseError("variable indices start at x1", cur.line, col)
        e = 1
        if cur.peek() == "^":
            cur.i += 1
            e = cur.take_int()
        powers[idx] = powers.get(idx, 0) + e
        seen = True
    if not seen:
        raise cur.error(f"expected a term, found {cur.peek() or 'end of input'!r}")
    return coeff, powers


def _parse_raw(text: str, line: int) -> list[tuple[mpq, dict]]:
    cur = _Cursor(text, line)
    terms = []
    sign = 1
    if cur.peek() in "+-" and cur.peek():
        sign = -1 if cur.peek() == "-" else 1
        cur.i += 1
    terms.append(_parse_term(cur, sign))
    while cur.peek():
        ch = cur.peek()
        if ch not in "+-":
            raise cur.error(f"unexpected {ch!r}")
        cur.i += 1
        terms.append(_parse_term(cur, -1 if ch == "-" else 1))
    return terms


def _build(raw, n: int, line: int) -> Polynomial:
    acc: dict = {}
    for c, powers in raw:
        if any(i > n for i in powers):
            raise ParseError(f"variable x{max(powers)} outside x1..x{n}", line, 1)
        e = [0] * n
        for i, p in powers.items():
            e[i - 1] += p
        m = tuple(e)
        acc[m] = acc.get(m, 0) + c
    return Polynomial(acc, n)


def parse_polynomial(text: str, n: int | None = None, line: int = 1) -> Polynomial:
    raw = _parse_raw(text, line)
    if n is None:
        n = max((i for _, p in raw for i in p), default=1)
    return _build(raw, n, line)


def split_entries(text: str) -> list[tuple[int, str]]:
    """(line number, entry) pairs from newline/``;`` separated text."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        for part in line.split(";"):
            if part.strip():
                out.append((lineno, part))
    return out


def parse_polynomials(text: str, n: int | None = None, homogeneous: bool = False) -> list[Polynomial]:
    """Parse a list of polynomials; ``n`` defaults to the largest variable index.

    With ``homogeneous=True`` non-homogeneous entries are rejected.
    """
    entries = split_entries(text)
    if not entries:
        raise ParseError("no polynomials given", 1, 1)
    raws = [(line, _parse_raw(t, line)) for line, t in entries]
    if n is None:
        n = max((i for _, raw in raws for _, p in raw for i in p), default=1)
    polys = []
    for line, raw in raws:
        f = _build(raw, n, line)
        if homogeneous and not f.is_homogeneous():
            raise ParseError(f"polynomial {f} is not homogeneous", line, 1)
        if f.is_zero():
            raise ParseError("polynomial is zero", line, 1)
        polys.append(f)
    return polys


def format_polynomials(polys: Sequence[Polynomial]) -> str:
    return "; ".join(str(p) for p in polys)
