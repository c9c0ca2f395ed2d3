"""Multivariate polynomials with exact coefficients over a named variable context.

Representation:
  - a monomial is an exponent tuple, one nonnegative int per context variable;
  - a Polynomial stores its terms as a tuple of (exponent, coefficient) pairs,
    zero-free and sorted descending under the context's natural lex order,
    which makes equality and hashing structural;
  - every monomial order is lex after a permutation of the variables, so an
    order is just the tuple of variable indices from most to least significant.

All arithmetic is exact; there is no floating point anywhere.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import (
    BadParameter,
    ContextMismatch,
    VariableEscape,
    ZeroPolynomial,
)
from .fields import Coeff, Field, QQ

Exponent = tuple  # tuple[int, ...], one entry per context variable


# ---------------------------------------------------------------------------
# variable contexts


def _valid_name(name: str) -> bool:
    if not name:
        return False
    if not (name[0].isalpha() or name[0] == "_"):
        return False
    return all(ch.isalnum() or ch == "_" for ch in name)


@functools.lru_cache(maxsize=None)
def _index_map(names: tuple) -> dict:
    return {name: i for i, name in enumerate(names)}


@dataclass(frozen=True)
class VarContext:
    """An ordered tuple of distinct variable names."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise BadParameter(f"duplicate variable names in {names}")
        for n in names:
            if not _valid_name(n):
                raise BadParameter(f"bad variable name {n!r}")

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return _index_map(self.names)[name]
        except KeyError:
            raise VariableEscape(f"variable {name!r} not in context {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in _index_map(self.names)

    def without(self, name: str) -> "VarContext":
        i = self.index(name)
        return VarContext(self.names[:i] + self.names[i + 1:])

    def extended(self, name: str, front: bool = False) -> "VarContext":
        if name in self:
            raise BadParameter(f"variable {name!r} already in context")
        return VarContext((name,) + self.names if front else self.names + (name,))

    def fresh_name(self, stem: str = "_t") -> str:
        """A name not present in the context. Leading underscore keeps it
        out of the ideal-file grammar, so user input never collides."""
        if stem not in self:
            return stem
        k = 0
        while f"{stem}{k}" in self:
            k += 1
        return f"{stem}{k}"


def context(*names: str) -> VarContext:
    return VarContext(tuple(names))


# ---------------------------------------------------------------------------
# monomial orders

@dataclass(frozen=True)
class MonomialOrder:
    """Lex order after permuting variables: perm[0] is the most significant
    (largest) variable index, perm[-1] the least."""

    ctx: VarContext
    perm: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.ctx))):
            raise BadParameter(f"order permutation {self.perm} does not match context {self.ctx.names}")

    def key(self, e: Exponent) -> tuple:
        # Tuples compare lexicographically, so this key makes builtin
        # comparisons agree with the monomial order.
        return tuple(e[i] for i in self.perm)

    @property
    def greatest_var(self) -> str:
        return self.ctx.names[self.perm[0]]

    def names_descending(self) -> tuple:
        return tuple(self.ctx.names[i] for i in self.perm)

    def restrict(self, sub: VarContext) -> "MonomialOrder":
        """The induced order on a context using a subset of the variables."""
        kept = [self.ctx.names[i] for i in self.perm if self.ctx.names[i] in sub]
        if len(kept) != len(sub):
            raise VariableEscape(f"context {sub.names} is not a subset of {self.ctx.names}")
        return MonomialOrder(sub, tuple(sub.index(n) for n in kept))


def natural_order(ctx: VarContext) -> MonomialOrder:
    """Lex with the context's own variable order, first name largest."""
    return MonomialOrder(ctx, tuple(range(len(ctx))))


def lex_order(ctx: VarContext, names_desc: Sequence[str]) -> MonomialOrder:
    """Lex with the given variables from largest to smallest."""
    if sorted(names_desc) != sorted(ctx.names):
        raise BadParameter(f"order {names_desc} is not a permutation of {ctx.names}")
    return MonomialOrder(ctx, tuple(ctx.index(n) for n in names_desc))


def var_first_order(ctx: VarContext, name: str) -> MonomialOrder:
    """Lex with `name` largest and the remaining variables in context order.

    Any lex order with y largest is compatible with initial-form extraction
    in y, and this is the canonical such choice used throughout.
    """
    i = ctx.index(name)
    rest = tuple(j for j in range(len(ctx)) if j != i)
    return MonomialOrder(ctx, (i,) + rest)


def cmp_monomials(e1: Exponent, e2: Exponent, order: MonomialOrder) -> int:
    """-1, 0 or 1 as e1 <, =, > e2 under the order."""
    k1, k2 = order.key(e1), order.key(e2)
    return (k1 > k2) - (k1 < k2)


# ---------------------------------------------------------------------------
# exponent helpers

def exp_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def exp_divides(a: Exponent, b: Exponent) -> bool:
    """True when the monomial with exponent a divides the one with b."""
    return all(x <= y for x, y in zip(a, b))


def exp_div(a: Exponent, b: Exponent) -> Exponent:
    """Exponent of a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_coprime(a: Exponent, b: Exponent) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def exp_degree(a: Exponent) -> int:
    return sum(a)


def exp_is_squarefree(a: Exponent) -> bool:
    return all(x <= 1 for x in a)


def exp_support(a: Exponent) -> frozenset:
    return frozenset(i for i, x in enumerate(a) if x)


# ---------------------------------------------------------------------------
# polynomials

def _normalized_terms(field: Field, items: Iterable) -> tuple:
    acc: dict = {}
    for e, c in items:
        if e in acc:
            acc[e] = field.add(acc[e], c)
        else:
            acc[e] = c
    return tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True))


@dataclass(frozen=True)
class Polynomial:
    """An exact multivariate polynomial; immutable and hashable."""

    ctx: VarContext
    field: Field
    terms: tuple  # ((exponent, coeff), ...) descending under natural lex

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_dict(ctx: VarContext, field: Field, d: Mapping) -> "Polynomial":
        return Polynomial(ctx, field, _normalized_terms(field, d.items()))

    @staticmethod
    def zero(ctx: VarContext, field: Field) -> "Polynomial":
        return Polynomial(ctx, field, ())

    @staticmethod
    def const(ctx: VarContext, field: Field, value) -> "Polynomial":
        c = field.from_fraction(Fraction(value)) if not isinstance(value, int) else field.from_int(value)
        if field.is_zero(c):
            return Polynomial.zero(ctx, field)
        return Polynomial(ctx, field, (((0,) * len(ctx), c),))

    @staticmethod
    def variable(ctx: VarContext, field: Field, name: str, power: int = 1) -> "Polynomial":
        e = [0] * len(ctx)
        e[ctx.index(name)] = power
        return Polynomial(ctx, field, ((tuple(e), field.one),))

    @staticmethod
    def monomial(ctx: VarContext, field: Field, e: Exponent, coeff=None) -> "Polynomial":
        c = field.one if coeff is None else coeff
        if field.is_zero(c):
            return Polynomial.zero(ctx, field)
        return Polynomial(ctx, field, ((tuple(e), c),))

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and exp_degree(self.terms[0][0]) == 0 and self.terms[0][1] == self.field.one

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and exp_degree(self.terms[0][0]) == 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_single_variable(self) -> bool:
        """True for c * x_i with c nonzero (exponent 1)."""
        return len(self.terms) == 1 and exp_degree(self.terms[0][0]) == 1

    def as_dict(self) -> dict:
        return dict(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(exp_degree(e) for e, _ in self.terms)

    def degree_in(self, name: str) -> int:
        """Max exponent of the variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.ctx.index(name)
        return max(e[i] for e, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {exp_degree(e) for e, _ in self.terms}
        return len(degs) == 1

    def support_vars(self) -> frozenset:
        """Names of variables that actually occur."""
        out = set()
        for e, _ in self.terms:
            for i, x in enumerate(e):
                if x:
                    out.add(self.ctx.names[i])
        return frozenset(out)

    def _check_mate(self, other: "Polynomial") -> None:
        if self.ctx != other.ctx or self.field != other.field:
            raise ContextMismatch(
                f"operands in different contexts/fields: {self.ctx.names}/{self.field.spec_str()} "
                f"vs {other.ctx.names}/{other.field.spec_str()}"
            )

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_mate(other)
        fld = self.field
        acc = dict(self.terms)
        for e, c in other.terms:
            if e in acc:
                s = fld.add(acc[e], c)
                if fld.is_zero(s):
                    del acc[e]
                else:
                    acc[e] = s
            else:
                acc[e] = c
        return Polynomial(self.ctx, fld, tuple(sorted(acc.items(), reverse=True)))

    def __neg__(self) -> "Polynomial":
        fld = self.field
        return Polynomial(self.ctx, fld, tuple((e, fld.neg(c)) for e, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_mate(other)
        fld = self.field
        acc: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = exp_mul(e1, e2)
                c = fld.mul(c1, c2)
                if e in acc:
                    acc[e] = fld.add(acc[e], c)
                else:
                    acc[e] = c
        return Polynomial(self.ctx, fld, tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True)))

    def scale(self, c) -> "Polynomial":
        fld = self.field
        if fld.is_zero(c):
            return Polynomial.zero(self.ctx, fld)
        return Polynomial(self.ctx, fld, tuple((e, fld.mul(cc, c)) for e, cc in self.terms))

    def mul_term(self, e: Exponent, c) -> "Polynomial":
        fld = self.field
        if fld.is_zero(c):
            return Polynomial.zero(self.ctx, fld)
        return Polynomial(self.ctx, fld, tuple((exp_mul(ee, e), fld.mul(cc, c)) for ee, cc in self.terms))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise BadParameter("negative power")
        out = Polynomial.const(self.ctx, self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- order-dependent data ----------------------------------------------

    def leading_data(self, order: MonomialOrder):
        """(leading exponent, leading coeff) under the order; error on zero."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        key = order.key
        e, c = max(self.terms, key=lambda tc: key(tc[0]))
        return e, c

    def leading_monomial(self, order: MonomialOrder) -> Exponent:
        return self.leading_data(order)[0]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading_data(order)
        if c == self.field.one:
            return self
        return self.scale(self.field.inv(c))

    def sorted_terms(self, order: MonomialOrder) -> tuple:
        key = order.key
        return tuple(sorted(self.terms, key=lambda tc: key(tc[0]), reverse=True))

    # -- initial forms -------------------------------------------------------

    def initial_form(self, name: str) -> "Polynomial":
        """Sum of the terms whose degree in `name` is maximal (0 for 0).

        Writing f as a polynomial in the chosen variable with coefficients in
        the others, this is the top-degree piece, including its coefficient.
        """
        if not self.terms:
            return self
        i = self.ctx.index(name)
        d = max(e[i] for e, _ in self.terms)
        return Polynomial(self.ctx, self.field, tuple((e, c) for e, c in self.terms if e[i] == d))

    # -- context moves ---------------------------------------------------------

    def map_context(self, new_ctx: VarContext) -> "Polynomial":
        """Rename-free embedding or contraction: every variable that occurs
        must exist in the new context (VariableEscape otherwise)."""
        old_names = self.ctx.names
        pos = []
        for i, name in enumerate(old_names):
            pos.append(new_ctx.index(name) if name in new_ctx else -1)
        n_new = len(new_ctx)
        new_terms = []
        for e, c in self.terms:
            out = [0] * n_new
            for i, x in enumerate(e):
                if not x:
                    continue
                j = pos[i]
                if j < 0:
                    raise VariableEscape(
                        f"variable {old_names[i]!r} occurs but is missing from context {new_ctx.names}"
                    )
                out[j] = x
            new_terms.append((tuple(out), c))
        return Polynomial(new_ctx, self.field, _normalized_terms(self.field, new_terms))

    # -- evaluation (used by test oracles) ----------------------------------------

    def evaluate(self, point: Mapping):
        """Evaluate at a point given as {name: field element}."""
        fld = self.field
        vals = [point[n] for n in self.ctx.names]
        total = fld.zero
        for e, c in self.terms:
            v = c
            for i, x in enumerate(e):
                for _ in range(x):
                    v = fld.mul(v, vals[i])
            total = fld.add(total, v)
        return total

    # -- text -----------------------------------------------------------------------

    def monomial_str(self, e: Exponent) -> str:
        parts = []
        for i, x in enumerate(e):
            if x == 1:
                parts.append(self.ctx.names[i])
            elif x > 1:
                parts.append(f"{self.ctx.names[i]}^{x}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.terms:
            mon = self.monomial_str(e)
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
            else:
                neg = False
                mag = c
            if not mon:
                body = str(mag)
            elif mag == 1:
                body = mon
            else:
                body = f"{mag}*{mon}"
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# module-level helpers mirroring the method API

def poly_op(op: str, f: Polynomial, g: Optional[Polynomial] = None, scalar=None) -> Polynomial:
    """Dispatch add/sub/mul/neg/scale through one entry point."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "neg":
        return -f
    if op == "scale":
        return f.scale(scalar)
    raise BadParameter(f"unknown op {op!r}")


def initial_form(f: Polynomial, name: str) -> Polynomial:
    return f.initial_form(name)


def leading_data(f: Polynomial, order: MonomialOrder):
    return f.leading_data(order)


def is_homogeneous_ideal(gens: Sequence[Polynomial]) -> bool:
    """A generating set of homogeneous elements certifies homogeneity."""
    return all(g.is_homogeneous() for g in gens)
