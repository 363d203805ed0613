"""Parsing and printing of super-polynomial expressions.

Grammar::

    expr   := term (('+'|'-') term)*
    term   := coeff? factor ('*'? factor)*
    factor := evenvar ('^' nat)? | oddvar | '(' expr ')' ('^' nat)?
    coeff  := nat ('/' nat)?

A leading sign is allowed, a bare coefficient is a term, and '*' may follow
the coefficient.  Names matching ``t<digits>`` are odd unless a ring says
otherwise; every other identifier is even.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from .superring import RingSpec, SuperPolynomial, odd_indices

_ODD_NAME = re.compile(r"t\d+\Z")
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class ParseError(ValueError):
    """Syntax error with a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


def is_odd_name(name: str) -> bool:
    return bool(_ODD_NAME.match(name))


def _name_key(name: str):
    m = re.match(r"([A-Za-z_]*?)(\d*)\Z", name)
    stem, digits = m.group(1), m.group(2)
    return (stem, int(digits) if digits else -1, name)


def _tokenize(text: str, line: int):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


def variables_in(text: str, line: int = 1) -> List[str]:
    return [v for kind, v, _ in _tokenize(text, line) if kind == "name"]


def infer_ring(texts: Iterable[str]) -> RingSpec:
    """Smallest ring containing every variable mentioned in ``texts``."""
    names = set()
    for i, text in enumerate(texts):
        names.update(variables_in(text, i + 1))
    even = sorted((v for v in names if not is_odd_name(v)), key=_name_key)
    odd = sorted((v for v in names if is_odd_name(v)), key=_name_key)
    return RingSpec(tuple(even), tuple(odd))


class _Parser:
    def __init__(self, text: str, ring: RingSpec, line: int):
        self.tokens = _tokenize(text, line)
        self.i = 0
        self.ring = ring
        self.line = line

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def expect(self, value):
        tok = self.next()
        if tok[1] != value or tok[0] == "end":
            self.error(f"expected {value!r}", tok)
        return tok

    def parse(self) -> SuperPolynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return result

    def expr(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.next()[1] == "-" else 1
        total = self.term() * sign
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def number(self):
        tok = self.next()
        value = Fraction(int(tok[1]))
        if self.peek()[1] == "/" and self.peek()[0] == "op":
            self.next()
            den = self.next()
            if den[0] != "num":
                self.error("expected a denominator", den)
            if int(den[1]) == 0:
                self.error("zero denominator", den)
            value /= int(den[1])
        return value

    def starts_factor(self):
        kind, val, _ = self.peek()
        return kind in ("name", "num") or (kind == "op" and val == "(")

    def term(self):
        if not self.starts_factor():
            self.error("expected a term")
        result = self.ring.one()
        if self.peek()[0] == "num":
            result = self.ring.const(self.number())
            if self.peek()[1] == "*" and self.peek()[0] == "op":
                self.next()
            elif not self.starts_factor():
                return result
        result = result * self.factor()
        while True:
            if self.peek()[0] == "op" and self.peek()[1] == "*":
                self.next()
                result = result * self.factor()
            elif self.starts_factor():
                result = result * self.factor()
            else:
                return result

    def exponent(self):
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.next()
            tok = self.next()
            if tok[0] != "num":
                self.error("expected a natural-number exponent", tok)
            return int(tok[1])
        return None

    def factor(self):
        kind, val, col = self.peek()
        if kind == "num":
            return self.ring.const(self.number())
        if kind == "name":
            self.next()
            try:
                base = self.ring.var(val)
            except KeyError:
                self.error(f"unknown variable {val!r}", (kind, val, col))
            k = self.exponent()
            if k is None:
                return base
            if val in self.ring.odd_vars:
                self.error(f"odd variable {val!r} cannot carry an exponent", (kind, val, col))
            return base**k
        if kind == "op" and val == "(":
            self.next()
            inner = self.expr()
            self.expect(")")
            k = self.exponent()
            return inner if k is None else inner**k
        self.error("expected a variable, number or '('")


def parse_poly(text: str, ring: Optional[RingSpec] = None, line: int = 1) -> SuperPolynomial:
    """Parse ``text`` into a :class:`SuperPolynomial`.

    >>> str(parse_poly("t2*t1 + x"))
    '-t1*t2 + x'
    """
    if ring is None:
        ring = infer_ring([text])
    return _Parser(text, ring, line).parse()


def parse_many(texts: Sequence[str], ring: Optional[RingSpec] = None) -> List[SuperPolynomial]:
    """Parse several expressions into one common ring; ``line`` is the position in ``texts``."""
    if ring is None:
        ring = infer_ring(texts)
    return [parse_poly(t, ring, line=i + 1) for i, t in enumerate(texts)]


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(ring: RingSpec, mono) -> str:
    exps, mask = mono
    parts = []
    for name, k in zip(ring.even_vars, exps):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    parts.extend(ring.odd_vars[j] for j in odd_indices(mask))
    return "*".join(parts)


def format_poly(p: SuperPolynomial) -> str:
    """Canonical text: terms by decreasing graded-lex order, odd factors ascending."""
    if p.is_zero():
        return "0"
    out = []
    for mono, c in p.sorted_terms():
        body = format_monomial(p.ring, mono)
        mag = abs(c)
        if not body:
            text = _format_coeff(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{_format_coeff(mag)}*{body}"
        if not out:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(("- " if c < 0 else "+ ") + text)
    return " ".join(out)
