"""Recursive-descent parser for polynomial and curve expressions.

Grammar (whitespace insignificant between tokens)::

    poly  := term (('+' | '-') term)*
    term  := INT ['*'] [ 'x' ['^' UINT] ]  |  'x' ['^' UINT]
    curve := 'y' '^' UINT '=' poly 'mod' UINT

Coefficients are normalized into [0, p) at parse time, so structurally
different spellings of the same polynomial compare equal downstream.
Errors carry the byte offset of the offending token plus the expected
token set.
"""

from __future__ import annotations

import math

from .curve import InvalidCurveError, SuperellipticCurve
from .ff import FieldDescriptor, NonPrimeModulusError, make_field
from .poly import Polynomial

EXPONENT_LIMIT = 10**6


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected=()):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = tuple(expected)


class _Token:
    __slots__ = ("kind", "value", "offset")

    def __init__(self, kind, value, offset):
        self.kind = kind
        self.value = value
        self.offset = offset

    def __repr__(self):
        return f"{self.kind}({self.value!r}@{self.offset})"


_SINGLE = {"+": "PLUS", "-": "MINUS", "*": "STAR", "^": "CARET", "=": "EQ"}


def _tokenize(src: str):
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SINGLE:
            tokens.append(_Token(_SINGLE[ch], ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(_Token("INT", int(src[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and src[j].isalpha():
                j += 1
            word = src[i:j]
            if word in ("x", "y", "mod"):
                tokens.append(_Token(word.upper(), word, i))
                i = j
                continue
            raise ParseError(f"unknown word {word!r}", i, expected=("x", "y", "mod"))
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("END", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != kind:
            raise ParseError(
                f"expected {kind}, found {tok.kind}", tok.offset, expected=(kind,)
            )
        self.pos += 1
        return tok

    def accept(self, kind):
        if self.tokens[self.pos].kind == kind:
            self.pos += 1
            return True
        return False

    # term := INT ['*'] [x-part] | x-part
    def term(self):
        tok = self.peek()
        coeff = 1
        have_any = False
        if tok.kind == "INT":
            coeff = self.take("INT").value
            have_any = True
            self.accept("STAR")
        degree = 0
        if self.peek().kind == "X":
            self.take("X")
            have_any = True
            degree = 1
            if self.accept("CARET"):
                dtok = self.take("INT")
                degree = dtok.value
                if degree > EXPONENT_LIMIT:
                    raise ParseError(
                        f"exponent {degree} exceeds limit {EXPONENT_LIMIT}", dtok.offset
                    )
        if not have_any:
            raise ParseError(
                f"expected a term, found {tok.kind}", tok.offset, expected=("INT", "x")
            )
        return coeff, degree

    def poly_terms(self):
        terms = []
        sign = 1
        if self.accept("MINUS"):
            sign = -1
        elif self.accept("PLUS"):
            sign = 1
        c, d = self.term()
        terms.append((sign * c, d))
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = 1 if self.take(self.peek().kind).kind == "PLUS" else -1
            c, d = self.term()
            terms.append((sign * c, d))
        return terms


def parse_poly(src: str, field: FieldDescriptor) -> Polynomial:
    """Parse a polynomial expression over the given field."""
    if not src.strip():
        raise ParseError("empty polynomial expression", 0, expected=("INT", "x"))
    parser = _Parser(_tokenize(src))
    terms = parser.poly_terms()
    parser.take("END")
    return _terms_to_poly(terms, field)


def _terms_to_poly(terms, field) -> Polynomial:
    top = max(d for _, d in terms)
    coeffs = [0] * (top + 1)
    for c, d in terms:
        coeffs[d] += c
    return Polynomial(field, [c % field.p for c in coeffs])


def parse_curve(src: str) -> SuperellipticCurve:
    """Parse 'y^m = <poly> mod p' into a validated curve.

    The kind is inferred: m = 2 with squarefree f gives the hyperelliptic
    model; f = x^p - x with m | p+1 gives the Artin-Schreier quotient
    family; anything else is kind general.
    """
    parser = _Parser(_tokenize(src))
    parser.take("Y")
    parser.take("CARET")
    mtok = parser.take("INT")
    m = mtok.value
    parser.take("EQ")
    terms = parser.poly_terms()
    modtok = parser.take("MOD")
    ptok = parser.take("INT")
    parser.take("END")
    del modtok
    try:
        field = make_field(ptok.value, 1)
    except NonPrimeModulusError as exc:
        raise ParseError(str(exc), ptok.offset) from exc
    if m < 2:
        raise InvalidCurveError(f"exponent m must be >= 2, got {m}")
    if math.gcd(m, field.p) != 1:
        raise InvalidCurveError(
            f"gcd(m, p) = gcd({m}, {field.p}) != 1: the model y^m = f(x) "
            "is inseparable over characteristic p"
        )
    f = _terms_to_poly(terms, field)
    return SuperellipticCurve(m, f)


def render_poly(f: Polynomial) -> str:
    """Canonical string form, reparseable over the same prime field."""
    if f.field.k != 1:
        parts = " + ".join(
            f"{list(c.coeffs)}*x^{d}" for d, c in enumerate(f.coeffs) if not c.is_zero()
        )
        return parts or "0"
    if f.is_zero():
        return "0"
    pieces = []
    for d in range(f.degree, -1, -1):
        c = f.coeff(d).lift()
        if c == 0:
            continue
        if d == 0:
            pieces.append(str(c))
        elif d == 1:
            pieces.append("x" if c == 1 else f"{c}*x")
        else:
            pieces.append(f"x^{d}" if c == 1 else f"{c}*x^{d}")
    return " + ".join(pieces)
