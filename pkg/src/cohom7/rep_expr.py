"""Mini-language for the representation calculator.

    expr    := term ('+' term)*
    term    := factor (('⊗' | '*') factor)*
    factor  := [INT] atom
    atom    := 'V' INT | 'triv' | 'w(' INT (',' INT)* ')'
             | 'sym2(' expr ')' | 'alt2(' expr ')' | '(' expr ')'
    query   := expr [':inv' | ':fs' | ':dim']
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .rep_calc import Su2Rep, TorusRep, V, alt2, frobenius_schur, invariant_multiplicity, sym2, tensor


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(sym2\(|alt2\(|w\(|triv|V\d+|\d+|[-+*⊗(),])|(.))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(2) is not None:
            raise ParseError(f"unexpected character {m.group(2)!r}", m.start(2))
        if m.group(1) is None:
            break
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.end = len(text)
        self.torus = any(t == "w(" for t, _ in self.toks)

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self):
        return self.toks[self.i][1] if self.i < len(self.toks) else self.end

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'token'}", self.pos())
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek() == "+":
            self.take()
            val = val + self.term()
        return val

    def term(self):
        val = self.factor()
        while self.peek() in ("*", "⊗"):
            self.take()
            val = tensor(val, self.factor())
        return val

    def factor(self):
        coeff = 1
        if self.peek() is not None and self.peek().isdigit():
            coeff = int(self.take())
        val = self.atom()
        if coeff != 1:
            acc = val
            for _ in range(coeff - 1):
                acc = acc + val
            val = acc
        return val

    def _trivial(self):
        return TorusRep(1) if self.torus else V(0)

    def atom(self):
        pos = self.pos()
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", pos)
        if tok.startswith("V") and tok[1:].isdigit():
            self.take()
            if self.torus:
                raise ParseError("cannot mix su(2) and torus atoms", pos)
            return V(int(tok[1:]))
        if tok == "triv":
            self.take()
            return self._trivial()
        if tok == "w(":
            self.take()
            comps = [self.signed_int()]
            while self.peek() == ",":
                self.take()
                comps.append(self.signed_int())
            self.take(")")
            if all(c == 0 for c in comps):
                return TorusRep(1)
            return TorusRep(0, ((tuple(comps), 1),))
        if tok in ("sym2(", "alt2("):
            self.take()
            inner = self.expr()
            self.take(")")
            return sym2(inner) if tok == "sym2(" else alt2(inner)
        if tok == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {tok!r}", pos)

    def signed_int(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        pos = self.pos()
        tok = self.take()
        if not tok.isdigit():
            raise ParseError("expected integer", pos)
        return sign * int(tok)


def parse_rep(text: str) -> Su2Rep | TorusRep:
    p = _Parser(text)
    val = p.expr()
    if p.peek() is not None:
        raise ParseError(f"unexpected {p.peek()!r}", p.pos())
    return val


@dataclass
class RepQuery:
    expr: str
    query: str | None
    value: object


def evaluate(text: str) -> RepQuery:
    """Parse and evaluate ``expr[:inv|:fs|:dim]``."""
    body, _, query = text.partition(":")
    query = query.strip() or None
    rep = parse_rep(body)
    if query is None:
        return RepQuery(body, None, rep)
    if query == "inv":
        return RepQuery(body, query, invariant_multiplicity(rep))
    if query == "dim":
        return RepQuery(body, query, rep.dim)
    if query == "fs":
        label = rep.irreducible_label() if isinstance(rep, Su2Rep) else None
        if label is None:
            raise ParseError("':fs' needs a single irreducible su(2) module", len(body))
        return RepQuery(body, query, frobenius_schur(label))
    raise ParseError(f"unknown query {query!r}", len(body) + 1)


def normalize(text: str) -> str:
    return re.sub(r"\s+", "", text).replace("*", "⊗")
