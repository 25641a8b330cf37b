"""Parsers: Laurent expressions and the two on-disk matrix formats.

Expression grammar (whitespace is insignificant everywhere)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := rational ('*'? atom)? | atom
    atom     := 't' ('^' integer)?
    rational := integer ('/' positive-integer)?

so ``3/2*t^2 - t^-3``, ``t + t^-1 - 2`` and ``-t + 1`` all parse.  Syntax
errors raise ParseError carrying the byte offset; writing a fraction in an
exponent is caught specially because it is the easiest mistake to make.

File formats, both line-oriented with ``#`` comments:

* Seifert matrix: a header ``seifert n`` followed by n rows of n
  space-separated integers.
* Linking matrix: a header ``linking 3`` followed by 3 rows of 3
  comma-separated Laurent expressions.
"""

from __future__ import annotations

from fractions import Fraction

from .contraction import LinkingMatrix
from .laurent import LaurentPoly
from .seifert import SeifertMatrix


class ParseError(ValueError):
    """Syntax error in a Laurent expression; offset is the byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class FileFormatError(ValueError):
    """Malformed matrix file; line numbers are 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def digits(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected {what}", start)
        return int(self.text[start:self.pos])

    def integer(self, what: str) -> int:
        self.skip_ws()
        sign = 1
        if self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -1
        return sign * self.digits(what)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse an expression like ``t + t^-1 - 2`` into a LaurentPoly."""
    sc = _Scanner(text)
    sc.skip_ws()
    if sc.pos == len(text):
        raise ParseError("empty expression", sc.pos)
    coeffs: dict[int, Fraction] = {}
    sign = 1
    if sc.peek() in ("+", "-"):
        if sc.take() == "-":
            sign = -1
    while True:
        coeff, exp = _term(sc)
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coeff
        sc.skip_ws()
        if sc.pos == len(text):
            break
        ch = sc.take()
        if ch == "+":
            sign = 1
        elif ch == "-":
            sign = -1
        else:
            raise ParseError(f"expected '+' or '-', found {ch!r}", sc.pos - 1)
    return LaurentPoly(coeffs)


def _term(sc: _Scanner) -> tuple[Fraction, int]:
    sc.skip_ws()
    if sc.peek() == "t":
        return Fraction(1), _atom_exponent(sc)
    coeff = _rational(sc)
    sc.skip_ws()
    if sc.peek() == "*":
        sc.take()
        sc.skip_ws()
        if sc.peek() != "t":
            raise ParseError("expected 't' after '*'", sc.pos)
        return coeff, _atom_exponent(sc)
    if sc.peek() == "t":
        return coeff, _atom_exponent(sc)
    return coeff, 0


def _atom_exponent(sc: _Scanner) -> int:
    sc.take()  # the 't'
    sc.skip_ws()
    if sc.peek() != "^":
        return 1
    sc.take()
    exp = sc.integer("an exponent after '^'")
    sc.skip_ws()
    if sc.peek() == "/":
        raise ParseError("exponents must be integers, not fractions", sc.pos)
    return exp


def _rational(sc: _Scanner) -> Fraction:
    num = sc.integer("a number or 't'")
    sc.skip_ws()
    if sc.peek() != "/":
        return Fraction(num)
    sc.take()
    at = sc.pos
    den = sc.digits("a positive denominator")
    if den == 0:
        raise ParseError("zero denominator", at)
    return Fraction(num, den)


# -- file formats ---------------------------------------------------------------


def _content_lines(text: str):
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _read(path) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def load_seifert(path) -> SeifertMatrix:
    """Read a Seifert matrix file; validation errors propagate as ValueError."""
    lines = _content_lines(_read(path))
    if not lines:
        raise FileFormatError("missing 'seifert n' header", 1)
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 2 or fields[0] != "seifert":
        raise FileFormatError("expected header 'seifert n'", lineno)
    try:
        n = int(fields[1])
    except ValueError:
        raise FileFormatError(f"bad size {fields[1]!r}", lineno) from None
    if n < 0:
        raise FileFormatError(f"bad size {n}", lineno)
    body = lines[1:]
    if len(body) != n:
        where = body[-1][0] if body else lineno
        raise FileFormatError(f"expected {n} rows, found {len(body)}", where)
    rows = []
    for lineno, line in body:
        fields = line.split()
        if len(fields) != n:
            raise FileFormatError(f"expected {n} entries, found {len(fields)}", lineno)
        try:
            rows.append([int(f) for f in fields])
        except ValueError:
            raise FileFormatError(f"non-integer entry in {line!r}", lineno) from None
    return SeifertMatrix(rows)


def load_linking(path) -> LinkingMatrix:
    """Read a linking matrix file of Laurent expressions."""
    lines = _content_lines(_read(path))
    if not lines:
        raise FileFormatError("missing 'linking 3' header", 1)
    lineno, header = lines[0]
    if header.split() != ["linking", "3"]:
        raise FileFormatError("expected header 'linking 3'", lineno)
    body = lines[1:]
    if len(body) != 3:
        where = body[-1][0] if body else lineno
        raise FileFormatError(f"expected 3 rows, found {len(body)}", where)
    rows = []
    for lineno, line in body:
        cells = line.split(",")
        if len(cells) != 3:
            raise FileFormatError(f"expected 3 comma-separated entries, found {len(cells)}",
                                  lineno)
        try:
            rows.append([parse_laurent(c) for c in cells])
        except ParseError as exc:
            raise FileFormatError(str(exc), lineno) from None
    return LinkingMatrix(rows)
