"""Buchberger engine and the ideal-level operations built on it.

Everything here is deterministic: the pair queue is ordered by lcm total
degree (then lcm, then indices), division tries divisors in sequence order
reducing the order-largest term first, and reduced bases come out monic,
auto-reduced and sorted by leading monomial (largest first). Two runs on the
same input produce identical output, which is what makes recorded
certificates replayable.

The engine can optionally track cofactors: with track=True every basis
element g comes with polynomials c_i such that g = sum(c_i * gens[i]).
Certificates embed these so that replay can re-verify a basis with
multiplications and divisions only, never re-running Buchberger.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BadParameter, ContextMismatch, ZeroDivisorArg
from .fields import Field
from .poly import (
    Exponent,
    MonomialOrder,
    Polynomial,
    VarContext,
    exp_coprime,
    exp_degree,
    exp_div,
    exp_divides,
    exp_lcm,
    exp_mul,
    natural_order,
)
from .transversals import min_transversal_size

# ---------------------------------------------------------------------------
# dict-based kernel (internal)


def _sub_scaled(fld: Field, acc: dict, terms, shift: Exponent, factor) -> None:
    """acc -= factor * x^shift * terms, in place."""
    for e, c in terms:
        e2 = exp_mul(e, shift) if shift is not None else e
        d = fld.mul(c, factor)
        cur = acc.get(e2)
        if cur is None:
            acc[e2] = fld.neg(d)
        else:
            s = fld.sub(cur, d)
            if s:
                acc[e2] = s
            else:
                del acc[e2]


def _divide_dict(
    fld: Field,
    keyfn,
    f: dict,
    divisors: Sequence,
    track: bool = False,
):
    """Full normal form of f against (lm, lc, terms) divisors.

    Returns (remainder_dict, quotients) where quotients[j] is the term dict
    multiplying divisors[j] (only when track=True, else None). Deterministic:
    the order-largest term of the work polynomial is examined first, and the
    divisors are tried in sequence order.
    """
    work = dict(f)
    rem: dict = {}
    quots = [dict() for _ in divisors] if track else None
    while work:
        lead = max(work, key=keyfn)
        c = work[lead]
        for j, (lm, lc, terms) in enumerate(divisors):
            if exp_divides(lm, lead):
                shift = exp_div(lead, lm)
                factor = fld.div(c, lc)
                _sub_scaled(fld, work, terms, shift, factor)
                if track:
                    q = quots[j]
                    q[shift] = fld.add(q.get(shift, fld.zero), factor)
                break
        else:
            rem[lead] = c
            del work[lead]
    return rem, quots


def _poly_from_dict(ctx: VarContext, fld: Field, d: dict) -> Polynomial:
    return Polynomial(ctx, fld, tuple(sorted(d.items(), reverse=True)))


# ---------------------------------------------------------------------------
# results


@dataclass(frozen=True)
class GBResult:
    """A reduced Groebner basis together with its provenance.

    cofactors, when present, satisfy
        basis[k] == sum(cofactors[k][i] * gens[i] for i in range(len(gens)))
    exactly, which a replay can confirm by expansion.
    """

    ctx: VarContext
    field: Field
    order: MonomialOrder
    gens: tuple
    basis: tuple
    cofactors: Optional[tuple]
    stats: dict

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_one()

    def is_zero(self) -> bool:
        return not self.basis

    def leading_exponents(self) -> tuple:
        return tuple(g.leading_monomial(self.order) for g in self.basis)


# ---------------------------------------------------------------------------
# Buchberger

_GB_REQUESTS = 0
_GB_REQUEST_LOCK = threading.Lock()


def _count_gb_request() -> None:
    global _GB_REQUESTS
    with _GB_REQUEST_LOCK:
        _GB_REQUESTS += 1


def gb_request_count() -> int:
    """Number of basis requests so far (cache hits included).

    Certificate replay asserts this stays flat: a replay must get by on
    recorded bases, divisions and expansions alone.
    """
    with _GB_REQUEST_LOCK:
        return _GB_REQUESTS


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder,
    track: bool = False,
) -> GBResult:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pair selection is the normal strategy (minimal lcm total degree first);
    pairs with coprime leading monomials are skipped.
    """
    _count_gb_request()
    gens = tuple(gens)
    if not gens:
        raise BadParameter("buchberger needs at least a generator list (may contain zeros)")
    ctx = gens[0].ctx
    fld = gens[0].field
    for g in gens:
        if g.ctx != ctx or g.field != fld:
            raise ContextMismatch("generators live in different contexts/fields")
    keyfn = order.key
    ngens = len(gens)

    basis: list = []  # entries (lm, lc=1, terms) with terms descending under order
    cofs: list = []  # parallel list of cofactor dicts, cofs[k][i]: dict exp->coeff
    stats = {"s_pairs": 0, "reductions_to_zero": 0, "coprime_skips": 0}

    def insert(d: dict, cof: list) -> None:
        lead = max(d, key=keyfn)
        lc = d[lead]
        if lc != fld.one:
            inv = fld.inv(lc)
            d = {e: fld.mul(c, inv) for e, c in d.items()}
            if track:
                cof = [{e: fld.mul(c, inv) for e, c in q.items()} for q in cof]
        terms = tuple(sorted(d.items(), key=lambda tc: keyfn(tc[0]), reverse=True))
        basis.append((lead, fld.one, terms))
        cofs.append(cof if track else None)

    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        cof = [dict() for _ in range(ngens)]
        if track:
            cof[i] = {(0,) * len(ctx): fld.one}
        insert(dict(g.terms), cof)

    if not basis:
        return GBResult(ctx, fld, order, gens, (), () if track else None, stats)

    heap: list = []

    def push_pairs(j: int) -> None:
        lmj = basis[j][0]
        for i in range(j):
            lcm = exp_lcm(basis[i][0], lmj)
            heapq.heappush(heap, (exp_degree(lcm), keyfn(lcm), i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        lmi, lmj = basis[i][0], basis[j][0]
        if exp_coprime(lmi, lmj):
            stats["coprime_skips"] += 1
            continue
        stats["s_pairs"] += 1
        lcm = exp_lcm(lmi, lmj)
        si, sj = exp_div(lcm, lmi), exp_div(lcm, lmj)
        s: dict = {}
        _sub_scaled(fld, s, basis[j][2], sj, fld.one)  # s = -x^sj * gj
        _sub_scaled(fld, s, basis[i][2], si, fld.neg(fld.one))  # s += x^si * gi
        if not s:
            stats["reductions_to_zero"] += 1
            continue
        rem, quots = _divide_dict(fld, keyfn, s, basis, track)
        if not rem:
            stats["reductions_to_zero"] += 1
            continue
        cof: list = []
        if track:
            cof = [dict() for _ in range(ngens)]
            for g_idx, mult, shift in ((i, fld.one, si), (j, fld.neg(fld.one), sj)):
                for gi in range(ngens):
                    src = cofs[g_idx][gi]
                    if src:
                        _sub_scaled(fld, cof[gi], tuple(src.items()), shift, fld.neg(mult))
            for bj, q in enumerate(quots):
                if not q:
                    continue
                for gi in range(ngens):
                    src = cofs[bj][gi]
                    if src:
                        for qe, qc in q.items():
                            _sub_scaled(fld, cof[gi], tuple(src.items()), qe, qc)
        insert(rem, cof)
        push_pairs(len(basis) - 1)

    # Minimalize: keep only elements whose leading monomial no other kept
    # element's leading monomial divides. Ascending order makes one pass sound.
    order_idx = sorted(range(len(basis)), key=lambda k: keyfn(basis[k][0]))
    kept: list = []
    for k in order_idx:
        lm = basis[k][0]
        if any(exp_divides(basis[m][0], lm) for m in kept):
            continue
        kept.append(k)

    # Tail-reduce each kept element against the others. Leading monomials are
    # pairwise non-divisible, so one full-division pass reaches the fixpoint.
    final: list = []
    final_cofs: list = []
    for pos, k in enumerate(kept):
        others = [basis[m] for m in kept if m != k]
        other_cof_idx = [m for m in kept if m != k]
        rem, quots = _divide_dict(fld, keyfn, dict(basis[k][2]), others, track)
        if track:
            cof = [dict(c) for c in cofs[k]]
            for oj, q in enumerate(quots):
                if not q:
                    continue
                src_vec = cofs[other_cof_idx[oj]]
                for gi in range(ngens):
                    if src_vec[gi]:
                        for qe, qc in q.items():
                            _sub_scaled(fld, cof[gi], tuple(src_vec[gi].items()), qe, qc)
            final_cofs.append(cof)
        final.append(rem)
        basis[k] = (basis[k][0], fld.one, tuple(sorted(rem.items(), key=lambda tc: keyfn(tc[0]), reverse=True)))

    # Canonical presentation: largest leading monomial first.
    order_final = sorted(range(len(final)), key=lambda k: keyfn(max(final[k], key=keyfn)), reverse=True)
    out_polys = tuple(_poly_from_dict(ctx, fld, final[k]) for k in order_final)
    out_cofs = None
    if track:
        out_cofs = tuple(
            tuple(_poly_from_dict(ctx, fld, c) for c in final_cofs[k]) for k in order_final
        )
    stats["basis_size"] = len(out_polys)
    return GBResult(ctx, fld, order, gens, out_polys, out_cofs, stats)


# ---------------------------------------------------------------------------
# normal form against an explicit divisor list


def normal_form(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Full remainder of f on division by the divisor sequence."""
    fld = f.field
    keyfn = order.key
    divs = []
    for g in divisors:
        if g.is_zero():
            continue
        lm, lc = g.leading_data(order)
        divs.append((lm, lc, g.sorted_terms(order)))
    rem, _ = _divide_dict(fld, keyfn, f.as_dict(), divs, False)
    return _poly_from_dict(f.ctx, fld, rem)


def divide_with_quotients(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder
):
    """Deterministic multivariate division with recorded quotients.

    Returns (quotients, remainder) with f = sum(quotients[j]*divisors[j]) +
    remainder and no remainder term divisible by any divisor's leading
    monomial.  Zero divisors get zero quotients.
    """
    fld = f.field
    keyfn = order.key
    divs = []
    keep = []
    for j, g in enumerate(divisors):
        if g.is_zero():
            continue
        lm, lc = g.leading_data(order)
        divs.append((lm, lc, g.sorted_terms(order)))
        keep.append(j)
    rem, quots = _divide_dict(fld, keyfn, f.as_dict(), divs, True)
    out = [Polynomial.zero(f.ctx, fld) for _ in divisors]
    for idx, q in zip(keep, quots):
        out[idx] = _poly_from_dict(f.ctx, fld, q)
    return tuple(out), _poly_from_dict(f.ctx, fld, rem)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly (BadParameter otherwise)."""
    if g.is_zero():
        raise ZeroDivisorArg("division by zero polynomial")
    fld = f.field
    order = natural_order(f.ctx)
    keyfn = order.key
    lm, lc = g.leading_data(order)
    rem, quots = _divide_dict(fld, keyfn, f.as_dict(), [(lm, lc, g.sorted_terms(order))], True)
    if rem:
        raise BadParameter("exact_divide: divisor does not divide")
    return _poly_from_dict(f.ctx, fld, quots[0])


# ---------------------------------------------------------------------------
# ideals and cached bases

_GB_CACHE: dict = {}
_GB_LOCK = threading.Lock()


@dataclass(frozen=True)
class Ideal:
    """An ideal presented by generators; basis computations are cached."""

    ctx: VarContext
    field: Field
    gens: tuple

    @staticmethod
    def of(ctx: VarContext, field: Field, gens: Iterable[Polynomial]) -> "Ideal":
        gens = tuple(gens)
        for g in gens:
            if g.ctx != ctx or g.field != field:
                raise ContextMismatch("generator context/field mismatch")
        return Ideal(ctx, field, gens)

    def groebner(self, order: Optional[MonomialOrder] = None, track: bool = False) -> GBResult:
        _count_gb_request()
        order = order or natural_order(self.ctx)
        key = (self.field, self.ctx.names, order.perm, tuple(g.terms for g in self.gens))
        with _GB_LOCK:
            hit = _GB_CACHE.get(key)
        if hit is not None and (not track or hit.cofactors is not None):
            return hit
        if not self.gens:
            res = GBResult(
                self.ctx, self.field, order, (), (), () if track else None,
                {"s_pairs": 0, "reductions_to_zero": 0, "coprime_skips": 0},
            )
        else:
            res = buchberger(self.gens, order, track=track)
        with _GB_LOCK:
            # A tracked result can serve untracked requests; keep the richer one.
            cur = _GB_CACHE.get(key)
            if cur is None or (track and cur.cofactors is None):
                _GB_CACHE[key] = res
        return res

    @staticmethod
    def seed_cache(result: GBResult) -> None:
        """Adopt a basis computed elsewhere (a worker process, say) so later
        requests for the same generators and order are cache hits here."""
        key = (
            result.field, result.ctx.names, result.order.perm,
            tuple(g.terms for g in result.gens),
        )
        with _GB_LOCK:
            cur = _GB_CACHE.get(key)
            if cur is None or (result.cofactors is not None
                               and cur.cofactors is None):
                _GB_CACHE[key] = result

    def plus(self, other: "Ideal") -> "Ideal":
        if other.ctx != self.ctx or other.field != self.field:
            raise ContextMismatch("ideal sum across contexts")
        return Ideal(self.ctx, self.field, self.gens + other.gens)

    def plus_gens(self, gens: Iterable[Polynomial]) -> "Ideal":
        return self.plus(Ideal.of(self.ctx, self.field, gens))

    def nonzero_gens(self) -> tuple:
        return tuple(g for g in self.gens if not g.is_zero())

    def map_context(self, new_ctx: VarContext) -> "Ideal":
        return Ideal(new_ctx, self.field, tuple(g.map_context(new_ctx) for g in self.gens))

    def canonical_basis(self) -> tuple:
        return self.groebner().basis

    def canonical_key(self):
        """Hashable identity of the ideal itself (not its presentation)."""
        return (self.field, self.ctx.names, tuple(g.terms for g in self.canonical_basis()))

    def is_zero_ideal(self) -> bool:
        return not self.canonical_basis()

    def is_unit_ideal(self) -> bool:
        b = self.canonical_basis()
        return len(b) == 1 and b[0].is_one()

    def is_monomial_ideal(self) -> bool:
        return all(g.is_monomial() for g in self.canonical_basis())

    def is_generated_by_indeterminates(self) -> bool:
        """True when the canonical basis consists of distinct variables
        (the zero ideal counts: empty set of indeterminates)."""
        return all(g.is_single_variable() for g in self.canonical_basis())

    def contains_poly(self, f: Polynomial, order: Optional[MonomialOrder] = None) -> bool:
        order = order or natural_order(self.ctx)
        gb = self.groebner(order)
        return normal_form(f, gb.basis, order).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains_poly(g) for g in other.nonzero_gens())


def ideal_member(f: Polynomial, ideal: Ideal) -> bool:
    return ideal.contains_poly(f)


def ideal_equal(i1: Ideal, i2: Ideal) -> bool:
    """Exact equality via canonical reduced bases under the natural order."""
    if i1.ctx != i2.ctx or i1.field != i2.field:
        raise ContextMismatch("ideal comparison across contexts")
    return i1.canonical_basis() == i2.canonical_basis()


# ---------------------------------------------------------------------------
# elimination and the derived operations


@dataclass(frozen=True)
class ElimResult:
    """Provenance of an elimination: the augmented basis plus what survived."""

    ideal: Ideal  # the eliminated ideal, in the restricted context
    gb: GBResult  # reduced basis of the augmented ideal
    dropped: tuple  # names eliminated
    kept_indices: tuple  # positions in gb.basis that are free of dropped vars


def eliminate_full(ideal: Ideal, drop: Sequence[str], track: bool = False) -> ElimResult:
    ctx = ideal.ctx
    drop = tuple(drop)
    for name in drop:
        ctx.index(name)
    drop_idx = [ctx.index(n) for n in drop]
    keep_idx = [i for i in range(len(ctx)) if i not in set(drop_idx)]
    order = MonomialOrder(ctx, tuple(drop_idx) + tuple(keep_idx))
    gb = ideal.groebner(order, track=track)
    sub_ctx = VarContext(tuple(ctx.names[i] for i in keep_idx))
    kept = []
    out = []
    for pos, g in enumerate(gb.basis):
        if all(n not in drop for n in g.support_vars()):
            kept.append(pos)
            out.append(g.map_context(sub_ctx))
    return ElimResult(Ideal(sub_ctx, ideal.field, tuple(out)), gb, drop, tuple(kept))


def eliminate(ideal: Ideal, drop: Sequence[str]) -> Ideal:
    return eliminate_full(ideal, drop).ideal


@dataclass(frozen=True)
class DerivedIdeal:
    """Result of intersect/colon/saturate with its elimination provenance."""

    kind: str
    ideal: Ideal
    elim: ElimResult
    aux_var: str
    params: dict


def _embed(ideal: Ideal, big: VarContext) -> tuple:
    return tuple(g.map_context(big) for g in ideal.gens)


def intersect_full(i1: Ideal, i2: Ideal, track: bool = False) -> DerivedIdeal:
    """I1 cap I2 = eliminate(t*I1 + (1-t)*I2, t) with a fresh variable t."""
    if i1.ctx != i2.ctx or i1.field != i2.field:
        raise ContextMismatch("intersection across contexts")
    ctx, fld = i1.ctx, i1.field
    t = ctx.fresh_name()
    big = ctx.extended(t, front=True)
    tp = Polynomial.variable(big, fld, t)
    one = Polynomial.const(big, fld, 1)
    gens = [tp * g for g in _embed(i1, big)]
    gens += [(one - tp) * g for g in _embed(i2, big)]
    if not gens:
        gens = [Polynomial.zero(big, fld)]
    elim = eliminate_full(Ideal(big, fld, tuple(gens)), [t], track=track)
    out = elim.ideal.map_context(ctx)
    return DerivedIdeal("intersect", out, elim, t, {})


def intersect(i1: Ideal, i2: Ideal) -> Ideal:
    return intersect_full(i1, i2).ideal


def intersect_many(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise BadParameter("empty intersection")
    out = ideals[0]
    for nxt in ideals[1:]:
        out = intersect(out, nxt)
    return out


def colon_poly_full(ideal: Ideal, f: Polynomial, track: bool = False) -> DerivedIdeal:
    """(I : f) via generators of (I cap <f>) divided exactly by f."""
    if f.is_zero():
        raise ZeroDivisorArg("colon by zero")
    inter = intersect_full(ideal, Ideal(ideal.ctx, ideal.field, (f,)), track=track)
    quot = tuple(exact_divide(g, f) for g in inter.ideal.gens)
    out = Ideal(ideal.ctx, ideal.field, quot)
    return DerivedIdeal("colon", out, inter.elim, inter.aux_var, {"divisor": f})


def colon_poly(ideal: Ideal, f: Polynomial) -> Ideal:
    return colon_poly_full(ideal, f).ideal


def saturate_poly_full(ideal: Ideal, f: Polynomial, track: bool = False) -> DerivedIdeal:
    """(I : f^inf) = eliminate(I + <t*f - 1>, t)."""
    if f.is_zero():
        raise ZeroDivisorArg("saturation by zero")
    ctx, fld = ideal.ctx, ideal.field
    t = ctx.fresh_name()
    big = ctx.extended(t, front=True)
    tp = Polynomial.variable(big, fld, t)
    one = Polynomial.const(big, fld, 1)
    gens = list(_embed(ideal, big))
    gens.append(tp * f.map_context(big) - one)
    elim = eliminate_full(Ideal(big, fld, tuple(gens)), [t], track=track)
    out = elim.ideal.map_context(ctx)
    return DerivedIdeal("saturate", out, elim, t, {"divisor": f})


def saturate_poly(ideal: Ideal, f: Polynomial) -> Ideal:
    return saturate_poly_full(ideal, f).ideal


def colon_and_saturate(ideal: Ideal, f: Polynomial) -> tuple:
    """The pair ((I : f), (I : f^inf))."""
    return colon_poly(ideal, f), saturate_poly(ideal, f)


def saturate_by_ideal(ideal: Ideal, other: Ideal) -> Ideal:
    """(I : J^inf) as the intersection of the single-divisor saturations."""
    gens = other.nonzero_gens()
    if not gens:
        one = Polynomial.const(ideal.ctx, ideal.field, 1)
        return Ideal(ideal.ctx, ideal.field, (one,))
    parts = [saturate_poly(ideal, g) for g in gens]
    return intersect_many(parts)


def radical_member_full(f: Polynomial, ideal: Ideal, track: bool = False):
    """f in rad(I), decided by whether I + <1 - t*f> is the unit ideal."""
    ctx, fld = ideal.ctx, ideal.field
    t = ctx.fresh_name()
    big = ctx.extended(t, front=True)
    tp = Polynomial.variable(big, fld, t)
    one = Polynomial.const(big, fld, 1)
    gens = list(_embed(ideal, big))
    gens.append(one - tp * f.map_context(big))
    aug = Ideal(big, fld, tuple(gens))
    gb = aug.groebner(natural_order(big), track=track)
    return gb.is_unit(), gb, t


def radical_member(f: Polynomial, ideal: Ideal) -> bool:
    return radical_member_full(f, ideal)[0]


# ---------------------------------------------------------------------------
# dimension and height


def dimension(ideal: Ideal) -> int:
    """Krull dimension of R/I (unit ideal: -1; zero ideal: number of variables).

    Computed on the initial ideal under the natural order: the dimension of a
    monomial quotient is the largest size of a variable subset containing no
    generator's support, found as n minus a minimum support transversal.
    """
    gb = ideal.groebner()
    n = len(ideal.ctx)
    if gb.is_unit():
        return -1
    if gb.is_zero():
        return n
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in gb.leading_exponents()]
    return n - min_transversal_size(supports)


def height(ideal: Ideal) -> int:
    """n - dim; the unit ideal gets the sentinel n + 1."""
    return len(ideal.ctx) - dimension(ideal)


def initial_ideal(ideal: Ideal, order: Optional[MonomialOrder] = None) -> Ideal:
    """The monomial ideal of leading terms under the order."""
    order = order or natural_order(ideal.ctx)
    gb = ideal.groebner(order)
    gens = tuple(
        Polynomial.monomial(ideal.ctx, ideal.field, e) for e in gb.leading_exponents()
    )
    return Ideal(ideal.ctx, ideal.field, gens)
