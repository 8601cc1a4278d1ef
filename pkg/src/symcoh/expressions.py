"""Recursive-descent parser and canonical renderer for ring expressions.

Grammar (a leading sign on the first term is accepted so that rendered
normal forms always parse back):

    expr     := ["+" | "-"] term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := atom ("^" uint)?
    atom     := rational | "z" | "theta" | "e" uint | "(" expr ")"
    rational := uint ["/" uint]

A Unicode minus sign is normalized to the ASCII hyphen during lexing.
Rendering is canonical: terms are ordered by (degree, z-exponent, exterior
indices), rationals print as "p/q" with q >= 1 and as "p" when q = 1, and
render(parse(s)) == s for every rendered string, while parse(render(x)) == x
for every element.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .jacobian import theta_class
from .kernel import Element, Monomial, exterior_gen, z_gen


class ExpressionError(ValueError):
    """A parse failure, with enough context for a caret diagnostic."""

    def __init__(self, message: str, source: str, position: int):
        super().__init__(message)
        self.message = message
        self.source = source
        self.position = position

    def caret_message(self) -> str:
        return f"{self.source}\n{' ' * self.position}^ {self.message}"


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


_SINGLE = {"+": "PLUS", "-": "MINUS", "*": "STAR", "^": "CARET",
           "/": "SLASH", "(": "LPAREN", ")": "RPAREN"}


def tokenize(source: str) -> list[_Token]:
    text = source.replace("−", "-")
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SINGLE:
            tokens.append(_Token(_SINGLE[ch], ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalpha()):
                j += 1
            word = text[i:j]
            if word == "z":
                tokens.append(_Token("Z", word, i))
            elif word == "theta":
                tokens.append(_Token("THETA", word, i))
            elif word == "e":
                k = j
                while k < len(text) and text[k].isdigit():
                    k += 1
                if k == j:
                    raise ExpressionError("generator needs an index", source, i)
                tokens.append(_Token("EGEN", text[j:k], i))
                i = k
                continue
            else:
                raise ExpressionError(f"unknown symbol {word!r}", source, i)
            i = j
            continue
        raise ExpressionError(f"unexpected character {ch!r}", source, i)
    tokens.append(_Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, source: str, genus: int):
        self.source = source
        self.genus = genus
        self.tokens = tokenize(source)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ExpressionError(
                f"expected {kind.lower()}, found {tok.text or 'end of input'!r}",
                self.source,
                tok.position,
            )
        return self.advance()

    def parse(self) -> Element:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ExpressionError(
                f"unexpected trailing input {tok.text!r}", self.source, tok.position
            )
        return value

    def expr(self) -> Element:
        negate = False
        if self.peek().kind in ("PLUS", "MINUS"):
            negate = self.advance().kind == "MINUS"
        value = self.term()
        if negate:
            value = -value
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind == "PLUS" else value - rhs
        return value

    def term(self) -> Element:
        value = self.factor()
        while self.peek().kind == "STAR":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Element:
        value = self.atom()
        if self.peek().kind == "CARET":
            self.advance()
            tok = self.expect("INT")
            value = value ** int(tok.text)
        return value

    def atom(self) -> Element:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            numerator = int(tok.text)
            if self.peek().kind == "SLASH":
                self.advance()
                den = self.expect("INT")
                if int(den.text) == 0:
                    raise ExpressionError("zero denominator", self.source, den.position)
                return Element.unit(self.genus, Fraction(numerator, int(den.text)))
            return Element.unit(self.genus, numerator)
        if tok.kind == "Z":
            self.advance()
            return z_gen(self.genus)
        if tok.kind == "THETA":
            self.advance()
            return theta_class(self.genus)
        if tok.kind == "EGEN":
            self.advance()
            index = int(tok.text)
            if index < 1 or index > 2 * self.genus:
                raise ExpressionError(
                    f"generator index {index} out of range 1..{2 * self.genus}",
                    self.source,
                    tok.position,
                )
            return exterior_gen(self.genus, index)
        if tok.kind == "LPAREN":
            self.advance()
            value = self.expr()
            self.expect("RPAREN")
            return value
        raise ExpressionError(
            f"expected a value, found {tok.text or 'end of input'!r}",
            self.source,
            tok.position,
        )


def parse(source: str, genus: int) -> Element:
    return _Parser(source, genus).parse()


def render_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def render_monomial(mono: Monomial) -> str:
    parts = [f"e{i}" for i in mono.ext]
    if mono.z == 1:
        parts.append("z")
    elif mono.z > 1:
        parts.append(f"z^{mono.z}")
    return "*".join(parts) if parts else "1"


def _term_key(mono: Monomial):
    return (mono.degree, mono.z, mono.ext)


def render(x: Element) -> str:
    """Canonical grammar string of an element (deterministic term order)."""
    if x.is_zero():
        return "0"
    pieces: list[str] = []
    for mono in sorted(x.terms, key=_term_key):
        coeff = x.terms[mono]
        body = render_monomial(mono)
        magnitude = abs(coeff)
        if mono == Monomial((), 0):
            rendered = render_rational(magnitude)
        elif magnitude == 1:
            rendered = body
        else:
            rendered = f"{render_rational(magnitude)}*{body}"
        if not pieces:
            pieces.append(f"-{rendered}" if coeff < 0 else rendered)
        else:
            pieces.append(f" - {rendered}" if coeff < 0 else f" + {rendered}")
    return "".join(pieces)


def render_beta(genus: int) -> str:
    """The generator beta written symbolically in theta and z."""
    terms = []
    for i in range(genus + 1):
        coeff = Fraction((-1) ** i, 1)
        for k in range(1, i + 1):
            coeff /= k
        factors = []
        if abs(coeff) != 1 or i + (genus - i) == 0:
            factors.append(render_rational(abs(coeff)))
        if i == 1:
            factors.append("theta")
        elif i > 1:
            factors.append(f"theta^{i}")
        if genus - i == 1:
            factors.append("z")
        elif genus - i > 1:
            factors.append(f"z^{genus - i}")
        if not factors:
            factors.append(render_rational(abs(coeff)))
        body = "*".join(factors)
        if not terms:
            terms.append(body if coeff > 0 else f"-{body}")
        else:
            terms.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(terms)
