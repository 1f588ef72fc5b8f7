"""Text grammar for forms and points.

Grammar (whitespace is insignificant)::

    expr   := [sign] term (sign term)*
    term   := factor ('*' factor)*
    factor := INT ['/' INT] | 'x' INT ['^' INT]

Examples: ``x0^4 + x1^4 + x2^4``, ``3/2*x0^2*x1 - x2^3``.  Points are
comma-separated rationals such as ``1,2,3`` or ``1/2,-1,0``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..errors import DomainError, ParseError
from .forms import HomogeneousForm

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|([-+*/^]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    raw = text.encode()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            offset = len(text[:pos].encode())
            raise ParseError("unexpected character", offset, text[pos])
        start = m.start(m.lastindex)
        kind = ("int", "var", "op")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), len(text[:start].encode())))
        pos = m.end()
    tokens.append(("end", "", len(raw)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_int(self, what: str) -> int:
        kind, val, off = self.take()
        if kind != "int":
            raise ParseError(f"expected {what}", off, val or "<end>")
        return int(val)

    def factor(self, coeff: Fraction, exps: Dict[int, int]) -> Fraction:
        kind, val, off = self.take()
        if kind == "int":
            num = int(val)
            if self.peek()[1] == "/":
                self.take()
                den_off = self.peek()[2]
                den = self.expect_int("denominator")
                if den == 0:
                    raise ParseError("zero denominator", den_off, "0")
                return coeff * Fraction(num, den)
            return coeff * num
        if kind == "var":
            idx = self.expect_int("variable index")
            e = 1
            if self.peek()[1] == "^":
                self.take()
                e = self.expect_int("exponent")
            exps[idx] = exps.get(idx, 0) + e
            return coeff
        raise ParseError("expected a number or variable", off, val or "<end>")

    def term(self) -> Tuple[Fraction, Dict[int, int]]:
        exps: Dict[int, int] = {}
        coeff = self.factor(Fraction(1), exps)
        while self.peek()[1] == "*":
            self.take()
            coeff = self.factor(coeff, exps)
        return coeff, exps

    def expr(self) -> List[Tuple[Fraction, Dict[int, int]]]:
        terms = []
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        while True:
            c, e = self.term()
            terms.append((sign * c, e))
            kind, val, off = self.peek()
            if kind == "end":
                return terms
            if val in ("+", "-"):
                self.take()
                sign = -1 if val == "-" else 1
                continue
            raise ParseError("expected '+' or '-'", off, val)


def parse_form(text: str, num_vars: Optional[int] = None) -> HomogeneousForm:
    """Parse a homogeneous form.

    The variable count defaults to one more than the largest index seen.
    """
    if not text.strip():
        raise ParseError("empty polynomial", 0, "")
    terms = _Parser(text).expr()
    top = max((i for _, e in terms for i in e), default=-1)
    n = top + 1 if num_vars is None else num_vars
    if top >= n:
        raise DomainError(f"variable x{top} exceeds the {n} declared variables")
    collected: Dict[Tuple[int, ...], Fraction] = {}
    for c, e in terms:
        exp = tuple(e.get(i, 0) for i in range(n))
        collected[exp] = collected.get(exp, Fraction(0)) + c
    return HomogeneousForm(n, collected)


def parse_point(text: str) -> Tuple[Fraction, ...]:
    """Parse comma-separated rationals, e.g. ``1,2,-3/4``."""
    coords = []
    offset = 0
    for piece in text.split(","):
        token = piece.strip()
        lead = offset + len(piece.encode()) - len(piece.lstrip().encode())
        if not re.fullmatch(r"[-+]?\d+(/\d+)?", token):
            raise ParseError("expected a rational coordinate", lead, token)
        if re.search(r"/0+$", token):
            raise ParseError("zero denominator", lead, token)
        value = Fraction(token)
        coords.append(value)
        offset += len(piece.encode()) + 1
    if all(c == 0 for c in coords):
        raise DomainError("projective point must have a nonzero coordinate")
    return tuple(coords)


def parse_ints(text: str) -> Tuple[int, ...]:
    """Parse comma-separated integers such as ``2,1,1``."""
    out = []
    offset = 0
    for piece in text.split(","):
        token = piece.strip()
        if not re.fullmatch(r"[-+]?\d+", token):
            lead = offset + len(piece.encode()) - len(piece.lstrip().encode())
            raise ParseError("expected an integer", lead, token)
        out.append(int(token))
        offset += len(piece.encode()) + 1
    return tuple(out)
