"""The ideal-file front end: parsing and canonical printing.

File grammar (whitespace-insensitive inside expressions, one item per line):

    field: QQ            -- optional; QQ (default) or GF(<prime>)
    ring: x y z          -- required; distinct variable names
    order: z > y > x     -- optional; a permutation of the ring (default:
                            ring order, most significant first)
    gens: <expr>         -- required; the first generator may sit on the
    <expr>                  header line, the rest follow one per line
    ...

Expressions are built from integer literals, variable names, +, -, *, ^
and parentheses; multiplication is always explicit and there is no
division.  Errors carry 1-based line and column numbers.

Printing is the inverse on canonical forms: a polynomial whose
coefficients are integers (every parse result is one) prints to text that
parses back to the identical polynomial.  Polynomials with non-integer
rational coefficients are scaled by the least common denominator before
printing — a unit multiple generating the same ideal — so printed output
always stays inside the grammar.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import BadParameter, ParseError
from .fields import Field, QQ, field_from_spec
from .groebner import Ideal
from .poly import MonomialOrder, Polynomial, VarContext, natural_order

# ---------------------------------------------------------------------------
# tokens


_SYMBOLS = "+-*^()>"


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "name" | one of _SYMBOLS | "end"
    text: str
    line: int
    col: int


def _tokenize(text: str, line_no: int) -> list:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("int", text[i:j], line_no, col))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("name", text[i:j], line_no, col))
            i = j
            continue
        if ch in _SYMBOLS:
            toks.append(_Token(ch, ch, line_no, col))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line_no, col)
    toks.append(_Token("end", "", line_no, n + 1))
    return toks


class _ExprParser:
    """Recursive descent over one expression line.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('+' | '-')* power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'
    """

    def __init__(self, toks: list, ctx: VarContext, field: Field):
        self.toks = toks
        self.pos = 0
        self.ctx = ctx
        self.field = field

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, msg: str, tok: Optional[_Token] = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.col)

    def parse(self) -> Polynomial:
        out = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            self.fail(f"unexpected {tok.text!r} after expression", tok)
        return out

    def expr(self) -> Polynomial:
        out = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            rhs = self.term()
            out = out + rhs if op.kind == "+" else out - rhs
        return out

    def term(self) -> Polynomial:
        out = self.factor()
        while self.peek().kind == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> Polynomial:
        sign = 1
        while self.peek().kind in ("+", "-"):
            if self.take().kind == "-":
                sign = -sign
        out = self.power()
        if sign < 0:
            out = Polynomial.const(self.ctx, self.field, -1) * out
        return out

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek().kind == "^":
            caret = self.take()
            tok = self.peek()
            if tok.kind != "int":
                self.fail("exponent must be an integer literal", caret)
            self.take()
            return base ** int(tok.text)
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return Polynomial.const(self.ctx, self.field, int(tok.text))
        if tok.kind == "name":
            self.take()
            if tok.text not in self.ctx:
                self.fail(f"unknown variable {tok.text!r}", tok)
            return Polynomial.variable(self.ctx, self.field, tok.text)
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            closing = self.peek()
            if closing.kind != ")":
                self.fail("expected ')'", closing)
            self.take()
            return inner
        if tok.kind == "end":
            self.fail("expression ends early", tok)
        self.fail(f"unexpected {tok.text!r}", tok)


def parse_polynomial(
    text: str, ctx: VarContext, field: Field, line_no: int = 1
) -> Polynomial:
    """One expression -> one canonical polynomial."""
    return _ExprParser(_tokenize(text, line_no), ctx, field).parse()


# ---------------------------------------------------------------------------
# whole files


@dataclass(frozen=True)
class IdealFileData:
    """A parsed ideal file: coefficient field, ring, order, generators."""

    field: Field
    ctx: VarContext
    order: MonomialOrder
    order_names: tuple
    gens: tuple

    @property
    def ideal(self) -> Ideal:
        return Ideal.of(self.ctx, self.field, self.gens)


def _header_value(line: str, key: str) -> Optional[str]:
    """The remainder of a `key:` header line, blanked over the prefix so
    token columns keep referring to the raw line."""
    stripped = line.lstrip()
    if not stripped.startswith(key + ":"):
        return None
    cut = line.index(key + ":") + len(key) + 1
    return " " * cut + line[cut:]


def parse_ideal_file(text: str) -> IdealFileData:
    """Parse the full file grammar; ParseError carries line and column."""
    lines = list(enumerate(text.splitlines(), start=1))
    items = [(no, raw) for no, raw in lines if raw.strip()]
    pos = 0

    def current():
        if pos < len(items):
            return items[pos]
        last = lines[-1][0] if lines else 1
        return (last, None)

    field = QQ
    no, line = current()
    if line is not None:
        val = _header_value(line, "field")
        if val is not None:
            try:
                field = field_from_spec(val)
            except BadParameter as e:
                raise ParseError(str(e), no, len(val) - len(val.lstrip()) + 1) from None
            pos += 1

    no, line = current()
    val = None if line is None else _header_value(line, "ring")
    if val is None:
        raise ParseError("expected a 'ring:' line", no, 1)
    names = val.split()
    if not names:
        raise ParseError("ring line names no variables", no, 1)
    try:
        ctx = VarContext(tuple(names))
    except BadParameter as e:
        raise ParseError(str(e), no, 1) from None
    pos += 1

    order = natural_order(ctx)
    order_names = ctx.names
    no, line = current()
    if line is not None:
        val = _header_value(line, "order")
        if val is not None:
            parts = [p.strip() for p in val.split(">")]
            if any(not p for p in parts):
                raise ParseError(
                    "order line must list names separated by '>'", no, 1
                )
            if sorted(parts) != sorted(ctx.names):
                raise ParseError(
                    "order line must be a permutation of the ring variables",
                    no, 1,
                )
            order_names = tuple(parts)
            order = MonomialOrder(ctx, tuple(ctx.index(p) for p in parts))
            pos += 1

    no, line = current()
    val = None if line is None else _header_value(line, "gens")
    if val is None:
        raise ParseError("expected a 'gens:' line", no, 1)
    pos += 1
    gens = []
    if val.strip():
        gens.append(parse_polynomial(val, ctx, field, no))
    while pos < len(items):
        no, line = items[pos]
        gens.append(parse_polynomial(line, ctx, field, no))
        pos += 1
    return IdealFileData(field, ctx, order, order_names, tuple(gens))


# ---------------------------------------------------------------------------
# canonical printing


def _integerized(f: Polynomial) -> Polynomial:
    """Scale a rational-coefficient polynomial to integer coefficients
    (identity on polynomials already integral, and over prime fields)."""
    if f.field.kind != "QQ" or f.is_zero():
        return f
    denom = 1
    for _, c in f.terms:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    if denom == 1:
        return f
    return Polynomial.const(f.ctx, f.field, denom) * f


def print_polynomial(f: Polynomial, order: Optional[MonomialOrder] = None) -> str:
    """Canonical text: terms in decreasing order, explicit '*', '^' powers.

    Integer-coefficient polynomials round-trip exactly; other rational
    coefficients are cleared to integers first (a unit scaling).
    """
    f = _integerized(f)
    if f.is_zero():
        return "0"
    order = order or natural_order(f.ctx)
    names = f.ctx.names
    parts = []
    for e, c in f.sorted_terms(order):
        c_int = int(c)
        mono = "*".join(
            name if x == 1 else f"{name}^{x}"
            for name, x in zip(names, e) if x
        )
        mag = abs(c_int)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c_int > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c_int > 0 else f"- {body}")
    return " ".join(parts)


def print_ideal_file(data: IdealFileData) -> str:
    """Render a parsed file back to canonical text (field and order lines
    always explicit)."""
    lines = [f"field: {data.field.spec_str()}"]
    lines.append("ring: " + " ".join(data.ctx.names))
    lines.append("order: " + " > ".join(data.order_names))
    lines.append("gens:")
    for g in data.gens:
        lines.append(print_polynomial(g, data.order))
    return "\n".join(lines) + "\n"


def ideal_file_for(
    ideal: Ideal,
    order: Optional[MonomialOrder] = None,
    order_names: Optional[Sequence[str]] = None,
) -> IdealFileData:
    """Wrap an in-memory ideal as printable file data."""
    order = order or natural_order(ideal.ctx)
    if order_names is None:
        order_names = tuple(ideal.ctx.names[i] for i in order.perm)
    return IdealFileData(
        ideal.field, ideal.ctx, order, tuple(order_names), ideal.gens
    )
