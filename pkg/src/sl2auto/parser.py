"""Expressions in x, y and the central variables t, u, v.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := rational ['*'] factor ('*' factor)* | rational | factor ('*' factor)*
    factor := atom ['^' int]
    atom   := 'x' | 'y' | 't' | 'u' | 'v' | '[' expr (',' expr)+ ']' | '(' expr ')'
    rational := int ['/' int]

'·' is accepted for '*', so everything the package prints parses back.
Brackets are left-normed.  The same grammar, with arbitrary identifiers and
no brackets, reads polynomials (``parse_poly``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import TUV, Poly, Q, VarSpec, _qstr
from .walgebra import WElement, w_bracket, w_mul


class ParseError(ValueError):
    def __init__(self, message, line=1, col=1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# AST


@dataclass(frozen=True)
class Generator:
    name: str


@dataclass(frozen=True)
class CentralVar:
    name: str


@dataclass(frozen=True)
class Symbol:
    """Free variable name (polynomial mode)."""

    name: str


@dataclass(frozen=True)
class RationalLit:
    value: object


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class ScalarMul:
    coeff: object
    expr: object


@dataclass(frozen=True)
class Bracket:
    items: tuple

    def __post_init__(self):
        if len(self.items) < 2:
            raise ValueError("a bracket needs at least two entries")


@dataclass(frozen=True)
class AssocProduct:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exp: int


# tokenizer

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*·/^\[\](),])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text):
    out = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            out.append(Token(kind, "*" if chunk == "·" else chunk, line, col))
        for ch in chunk:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    out.append(Token("end", "", line, col))
    return out


GENERATORS = ("x", "y")
CENTRAL = ("t", "u", "v")


class _Parser:
    def __init__(self, text, mode):
        self.toks = tokenize(text)
        self.i = 0
        self.mode = mode

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, msg, tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = repr(self.tok.text) if self.tok.text else "end of input"
            self.fail(f"expected {text!r}, found {found}")

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        terms = []
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        terms.append(_signed(self.term(), sign))
        while True:
            if self.accept("+"):
                terms.append(self.term())
            elif self.accept("-"):
                terms.append(_signed(self.term(), -1))
            else:
                break
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def rational(self):
        num = int(self.tok.text)
        self.i += 1
        if self.tok.kind == "op" and self.tok.text == "/" and self.toks[self.i + 1].kind == "int":
            self.i += 1
            den_tok = self.tok
            self.i += 1
            if int(den_tok.text) == 0:
                self.fail("division by zero", den_tok)
            return Q(num, int(den_tok.text))
        return Q(num)

    def term(self):
        coeff = None
        if self.tok.kind == "int":
            coeff = self.rational()
            if self.accept("*"):
                pass
            elif not self._starts_factor():
                return RationalLit(coeff)
        factors = [self.factor()]
        while self.accept("*"):
            if self.tok.kind == "int":
                self.fail("rational coefficients must come first in a product")
            factors.append(self.factor())
        body = factors[0] if len(factors) == 1 else AssocProduct(tuple(factors))
        return body if coeff is None else ScalarMul(coeff, body)

    def _starts_factor(self):
        t = self.tok
        return t.kind == "name" or (t.kind == "op" and t.text in "[(")

    def factor(self):
        base = self.atom()
        if self.accept("^"):
            if self.tok.kind != "int":
                self.fail("expected an integer exponent")
            exp = int(self.tok.text)
            self.i += 1
            return Power(base, exp)
        return base

    def atom(self):
        tok = self.tok
        if tok.kind == "name":
            self.i += 1
            if self.mode == "poly":
                return Symbol(tok.text)
            if tok.text in GENERATORS:
                return Generator(tok.text)
            if tok.text in CENTRAL:
                return CentralVar(tok.text)
            self.fail(f"unknown symbol {tok.text!r}", tok)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "op" and tok.text == "[":
            if self.mode == "poly":
                self.fail("brackets are not allowed in a polynomial")
            self.i += 1
            items = [self.expr()]
            while self.accept(","):
                items.append(self.expr())
            if len(items) < 2:
                self.fail("a bracket needs at least two entries", tok)
            self.expect("]")
            return Bracket(tuple(items))
        self.fail(f"unexpected {tok.text!r}" if tok.text else "unexpected end of input")


def _signed(node, sign):
    if sign == 1:
        return node
    if isinstance(node, ScalarMul):
        return ScalarMul(-node.coeff, node.expr)
    if isinstance(node, RationalLit):
        return RationalLit(-node.value)
    return ScalarMul(Q(-1), node)


def parse(text):
    """Parse a W-expression into an AST."""
    return _Parser(text, "w").parse()


# evaluation


def to_w(node, order):
    """Evaluate an AST in the W-algebra at the given order."""
    if isinstance(node, Generator):
        return WElement.x(order) if node.name == "x" else WElement.y(order)
    if isinstance(node, CentralVar):
        return WElement.central(Poly.var(TUV, node.name), order)
    if isinstance(node, RationalLit):
        return WElement.central(node.value, order)
    if isinstance(node, Sum):
        out = WElement.zero(order)
        for t in node.terms:
            out = out + to_w(t, order)
        return out
    if isinstance(node, ScalarMul):
        return to_w(node.expr, order).scale(node.coeff)
    if isinstance(node, Bracket):
        out = to_w(node.items[0], order)
        for item in node.items[1:]:
            out = w_bracket(out, to_w(item, order))
        return out
    if isinstance(node, AssocProduct):
        out = to_w(node.factors[0], order)
        for f in node.factors[1:]:
            out = w_mul(out, to_w(f, order))
        return out
    if isinstance(node, Power):
        base = to_w(node.base, order)
        out = WElement.one(order)
        for _ in range(node.exp):
            out = w_mul(out, base)
        return out
    raise TypeError(f"cannot evaluate {node!r}")


def parse_w(text, order):
    return to_w(parse(text), order)


def _symbols(node, acc):
    if isinstance(node, Symbol):
        acc.append(node.name)
    for child in _children(node):
        _symbols(child, acc)
    return acc


def _children(node):
    if isinstance(node, Sum):
        return node.terms
    if isinstance(node, ScalarMul):
        return (node.expr,)
    if isinstance(node, AssocProduct):
        return node.factors
    if isinstance(node, Power):
        return (node.base,)
    if isinstance(node, Bracket):
        return node.items
    return ()


def to_poly(node, vs):
    if isinstance(node, Symbol):
        if node.name not in vs.names:
            raise ParseError(f"unknown variable {node.name!r}")
        return Poly.var(vs, node.name)
    if isinstance(node, RationalLit):
        return Poly.const(vs, node.value)
    if isinstance(node, Sum):
        out = Poly.zero(vs)
        for t in node.terms:
            out = out + to_poly(t, vs)
        return out
    if isinstance(node, ScalarMul):
        return to_poly(node.expr, vs).scale(node.coeff)
    if isinstance(node, AssocProduct):
        out = Poly.const(vs, 1)
        for f in node.factors:
            out = out * to_poly(f, vs)
        return out
    if isinstance(node, Power):
        return to_poly(node.base, vs) ** node.exp
    raise TypeError(f"cannot evaluate {node!r} as a polynomial")


def parse_poly_ast(text):
    return _Parser(text, "poly").parse()


def poly_symbols(text):
    return sorted(set(_symbols(parse_poly_ast(text), [])))


def parse_poly(text, vs=None):
    """Polynomial in arbitrary variables; without ``vs`` they get weight 1, sorted by name."""
    node = parse_poly_ast(text)
    if vs is None:
        names = sorted(set(_symbols(node, [])))
        vs = VarSpec.uniform(tuple(names))
    return to_poly(node, vs)


# printing


def _atom_text(node):
    text = ast_to_text(node)
    if isinstance(node, (Sum, ScalarMul)) or (isinstance(node, RationalLit) and node.value < 0):
        return f"({text})"
    return text


def ast_to_text(node):
    """Canonical text of an AST; parse(ast_to_text(a)) == a for parsed ASTs."""
    if isinstance(node, (Generator, CentralVar, Symbol)):
        return node.name
    if isinstance(node, RationalLit):
        return _qstr(node.value)
    if isinstance(node, Sum):
        # nested sums keep their parentheses so the AST survives a round trip
        first = node.terms[0]
        out = f"({ast_to_text(first)})" if isinstance(first, Sum) else ast_to_text(first)
        for t in node.terms[1:]:
            if isinstance(t, ScalarMul) and t.coeff < 0:
                out += " - " + _scalar_text(-t.coeff, t.expr)
            elif isinstance(t, RationalLit) and t.value < 0:
                out += " - " + _qstr(-t.value)
            elif isinstance(t, Sum):
                out += f" + ({ast_to_text(t)})"
            else:
                out += " + " + ast_to_text(t)
        return out
    if isinstance(node, ScalarMul):
        if node.coeff < 0:
            return "-" + _scalar_text(-node.coeff, node.expr)
        return _scalar_text(node.coeff, node.expr)
    if isinstance(node, Bracket):
        return "[" + ",".join(ast_to_text(i) for i in node.items) + "]"
    if isinstance(node, AssocProduct):
        return "*".join(_atom_text(f) for f in node.factors)
    if isinstance(node, Power):
        return f"{_atom_text(node.base)}^{node.exp}"
    raise TypeError(f"cannot print {node!r}")


def _scalar_text(coeff, expr):
    body = _atom_text(expr) if not isinstance(expr, AssocProduct) else ast_to_text(expr)
    if coeff == 1 and not isinstance(expr, (Sum, ScalarMul)):
        return body
    return f"{_qstr(coeff)}*{body}"
