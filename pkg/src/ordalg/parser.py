"""Expression parser for the surface syntax.

Grammar: atoms ``0 | 1 | <nat> | w | w* | z | q | w1 | w1* | w2 | U``;
``+`` is the sum (lowest precedence, left associative); ``*`` the
lexicographic product (binds tighter, left associative); functions
``rev(e)``, ``cc(e)``, ``fc(e)``, ``mulw(e, e)``, ``mulf(e, e)``;
parentheses.  ``parse`` evaluates functions and returns a normalized term.

Atom names are tokenized greedily, so ``w*`` and ``w1*`` are single
tokens.  One refinement keeps the grammar closed under pretty-printing:
a ``*`` directly after ``w`` or ``w1`` is part of the atom name only when
the next character cannot start an operand.  Thus ``w* + 1`` contains the
atom ``w*`` while ``w*q`` is the product of ``w`` and ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .classify import Level
from .errors import ParseError
from .normalize import normalize
from .terms import (ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2, OMEGA_STAR,
                    U_LINE, ZETA, LexProd, OrderTerm, Sum, fin, reverse)

_ATOM_NAMES = {
    "w": OMEGA, "w*": OMEGA_STAR, "z": ZETA, "q": ETA,
    "w1": OMEGA1, "w1*": OMEGA1_STAR, "w2": OMEGA2, "U": U_LINE,
}
_FUNCTIONS = {"rev": 1, "cc": 1, "fc": 1, "mulw": 2, "mulf": 2}


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "punct", "end"
    text: str
    pos: int


def _starts_operand(ch: str) -> bool:
    return ch.isalnum() or ch == "("


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            name = text[i:j]
            # greedy star: only w and w1 have starred forms
            if (name in ("w", "w1") and j < n and text[j] == "*"
                    and not (j + 1 < n and _starts_operand(text[j + 1]))):
                name += "*"
                j += 1
            tokens.append(Token("name", name, i))
            i = j
            continue
        if ch in "+*(),":
            tokens.append(Token("punct", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


# merge flags of the outermost cc/fc call, when there is one
Flags = Optional[Tuple[bool, bool]]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text:
            shown = tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {shown!r}", tok.pos)
        return tok

    def parse(self) -> Tuple[OrderTerm, Flags]:
        term, flags = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return term, flags

    def expr(self) -> Tuple[OrderTerm, Flags]:
        term, flags = self.prod()
        while self.peek().text == "+":
            self.take()
            rhs, _ = self.prod()
            term = normalize(Sum((term, rhs)))
            flags = None
        return term, flags

    def prod(self) -> Tuple[OrderTerm, Flags]:
        term, flags = self.unit()
        while self.peek().text == "*":
            self.take()
            rhs, _ = self.unit()
            term = normalize(LexProd(term, rhs))
            flags = None
        return term, flags

    def unit(self) -> Tuple[OrderTerm, Flags]:
        tok = self.take()
        if tok.kind == "num":
            return fin(int(tok.text)), None
        if tok.kind == "name":
            if tok.text in _ATOM_NAMES:
                return _ATOM_NAMES[tok.text], None
            if tok.text in _FUNCTIONS:
                return self.call(tok)
            raise ParseError(f"unknown name {tok.text!r}", tok.pos)
        if tok.text == "(":
            term, flags = self.expr()
            self.expect(")")
            return term, flags
        shown = tok.text or "end of input"
        raise ParseError(f"unexpected {shown!r}", tok.pos)

    def call(self, tok: Token) -> Tuple[OrderTerm, Flags]:
        from .algebra import mul_level
        from .condense import cc as condense

        self.expect("(")
        args = [self.expr()[0]]
        for _ in range(_FUNCTIONS[tok.text] - 1):
            self.expect(",")
            args.append(self.expr()[0])
        self.expect(")")
        if tok.text == "rev":
            return normalize(reverse(args[0])), None
        if tok.text in ("cc", "fc"):
            level = Level.COUNTABLE if tok.text == "cc" else Level.FINITE
            res = condense(args[0], level)
            return res.quotient, (res.merge_left, res.merge_right)
        level = Level.COUNTABLE if tok.text == "mulw" else Level.FINITE
        return mul_level(args[0], args[1], level), None


def parse_with_flags(text: str) -> Tuple[OrderTerm, Flags]:
    """Parse and evaluate; also return the merge flags when the whole
    expression is a single cc/fc application."""
    return _Parser(text).parse()


def parse(text: str) -> OrderTerm:
    """Parse an expression and return the denoted term, normalized."""
    return parse_with_flags(text)[0]
