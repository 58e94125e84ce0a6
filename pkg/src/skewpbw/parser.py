"""Text syntax for algebra elements.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nonneg_int)?
    atom   := integer | integer '/' integer | symbol | '(' expr ')'

Symbols are the generator names plus the base-ring generator.  Products are
evaluated left to right in the (noncommutative) algebra, so the result is
always the normal form.
"""

from __future__ import annotations

import re

from .algebra import Element, SkewPBWAlgebra
from .coeff import BaseElement, BaseRing


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}" + (f": {text!r}" if text else ""))
        self.pos = pos


class UnknownSymbol(ParseError):
    pass


_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        start = m.start()
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("sym", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alg: SkewPBWAlgebra):
        self.text = text
        self.alg = alg
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def parse(self) -> Element:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0, self.text)
        out = self.expr()
        self.take("end")
        return out

    def expr(self) -> Element:
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        out = self.term()
        if negate:
            out = -out
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> Element:
        out = self.factor()
        while self.peek()[0] == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> Element:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            k = int(self.take("int")[1])
            return base**k
        return base

    def atom(self) -> Element:
        kind, value, pos = self.peek()
        alg = self.alg
        if kind == "int":
            self.take()
            F = alg.field
            c = F(int(value))
            if self.peek()[0] == "/":
                self.take()
                den = self.take("int")
                d = F(int(den[1]))
                if not d:
                    raise ParseError("division by zero in the field", den[2], self.text)
                c = F.div(c, d)
            return alg.scalar(c)
        if kind == "sym":
            self.take()
            if value in alg.gen_names:
                return alg.gen(value)
            if alg.base.gen is not None and value == alg.base.gen:
                return alg.base_gen()
            raise UnknownSymbol(f"unknown symbol {value!r}", pos, self.text)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "-":
            self.take()
            return -self.factor()
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"unexpected {what}", pos, self.text)


def parse_element(text: str, alg: SkewPBWAlgebra) -> Element:
    return _Parser(text, alg).parse()


def parse_base(text: str, ring: BaseRing) -> BaseElement:
    """Parse an element of the base ring itself (e.g. a sigma image like ``t-1``)."""
    alg = SkewPBWAlgebra(ring, [])
    el = _Parser(str(text), alg).parse()
    return BaseElement(ring, el.terms.get((), ()))
