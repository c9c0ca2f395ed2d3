"""Replayable certificates for every verdict the library produces.

A certificate is a JSON document whose claims can be re-verified — replayed —
with polynomial arithmetic and combinatorics alone: multiplications,
divisions, transversal searches, simplicial recursion.  A replay never runs
a basis computation, and `replay_certificate` asserts that the basis-request
counter stays flat while it works.

The key ideas:

  * Documents share a `pool` of records referenced by index, so an object
    cited by many obligations (the same canonical basis, say) is recorded
    and verified once.

  * A recorded reduced basis is verified structurally: the stated basis
    must be monic, auto-reduced and canonically sorted; the recorded
    cofactors must expand every basis element over the stated generators;
    every generator must divide to zero against the basis; and every
    S-polynomial must divide to zero against the basis.  Together these
    pin the basis as THE reduced basis of the generators under the stated
    order, by uniqueness of reduced bases — no re-run needed.

  * Derived operations (intersections, colons, saturations, radical
    membership) are replayed by reconstructing their augmented generator
    lists from the recorded inputs and verifying the embedded basis record,
    then re-extracting the result.

  * Combinatorial facts (vertex decompositions, monomial associated primes,
    dimensions from leading supports) are recomputed outright.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

from .errors import AlgebraError, ReplayMismatch
from .fields import Field, field_from_spec
from .groebner import (
    DerivedIdeal,
    GBResult,
    Ideal,
    exact_divide,
    gb_request_count,
    intersect_full,
    normal_form,
    saturate_poly_full,
)
from .gvd import (
    ASSUMED,
    DEGEN_RADICALS,
    DEGEN_UNIT,
    EXACT,
    NONDEGENERATE,
    SUFFICIENT_PRINCIPAL,
    SUFFICIENT_REISNER,
    SUFFICIENT_VD,
    GVDNode,
    GVDRefutation,
    OrderCompatibleResult,
    RadicalCMEvidence,
    SplitReport,
    UnmixedEvidence,
    _split_element,
    shed_order,
)
from .liaison import (
    BiliaisonWitness,
    GlicciChain,
    GroebnerShapeCertificate,
    _lift,
    registered_prime_quadric,
)
from .poly import (
    MonomialOrder,
    Polynomial,
    VarContext,
    exp_coprime,
    exp_div,
    exp_divides,
    exp_lcm,
    is_homogeneous_ideal,
    natural_order,
)
from .simplicial import (
    SimplicialComplex,
    VDResult,
    complex_of,
    monomial_ass_primes,
    reisner_cm,
    stanley_reisner,
    vertex_decomposable,
)
from .transversals import min_transversal_size

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# exact polynomial codec


def encode_poly(f: Polynomial) -> list:
    """Terms as [coefficient string, exponent list] pairs, exactly."""
    return [[f.field.coeff_str(c), list(e)] for e, c in f.terms]


def encode_polys(fs: Sequence[Polynomial]) -> list:
    return [encode_poly(f) for f in fs]


def decode_coeff(field: Field, text: str):
    if field.kind == "QQ":
        return Fraction(text)
    return int(text) % field.char


def decode_poly(ctx: VarContext, field: Field, data: list) -> Polynomial:
    terms = {}
    for coeff_text, exps in data:
        e = tuple(int(x) for x in exps)
        if len(e) != len(ctx):
            raise ReplayMismatch(
                f"exponent width {len(e)} does not fit a {len(ctx)}-variable ring"
            )
        terms[e] = decode_coeff(field, coeff_text)
    return Polynomial.from_dict(ctx, field, terms)


def decode_polys(ctx: VarContext, field: Field, data: list) -> tuple:
    return tuple(decode_poly(ctx, field, d) for d in data)


# ---------------------------------------------------------------------------
# shared reconstruction of the augmented generator lists
#
# These mirror the derived operations generator-for-generator; the writer
# asserts the mirror against the recorded run, and the replay rebuilds from
# recorded inputs.  Both sides call the same function, so they cannot drift
# apart silently.


def _embed_polys(polys: Sequence[Polynomial], big: VarContext) -> list:
    return [g.map_context(big) for g in polys]


def aug_intersect(ctx: VarContext, fld: Field, left: Sequence[Polynomial],
                  right: Sequence[Polynomial]):
    """(aux name, big context, augmented generators) of an intersection."""
    t = ctx.fresh_name()
    big = ctx.extended(t, front=True)
    tp = Polynomial.variable(big, fld, t)
    one = Polynomial.const(big, fld, 1)
    gens = [tp * g for g in _embed_polys(left, big)]
    gens += [(one - tp) * g for g in _embed_polys(right, big)]
    if not gens:
        gens = [Polynomial.zero(big, fld)]
    return t, big, tuple(gens)


def aug_saturate(ctx: VarContext, fld: Field, base: Sequence[Polynomial],
                 divisor: Polynomial):
    t = ctx.fresh_name()
    big = ctx.extended(t, front=True)
    tp = Polynomial.variable(big, fld, t)
    one = Polynomial.const(big, fld, 1)
    gens = list(_embed_polys(base, big))
    gens.append(tp * divisor.map_context(big) - one)
    return t, big, tuple(gens)


def aug_radical_member(ctx: VarContext, fld: Field, base: Sequence[Polynomial],
                       element: Polynomial):
    t = ctx.fresh_name()
    big = ctx.extended(t, front=True)
    tp = Polynomial.variable(big, fld, t)
    one = Polynomial.const(big, fld, 1)
    gens = list(_embed_polys(base, big))
    gens.append(one - tp * element.map_context(big))
    return t, big, tuple(gens)


def _tracked(gb: GBResult) -> GBResult:
    """The same basis with cofactors (re-requested when absent)."""
    if gb.cofactors is not None:
        return gb
    return Ideal(gb.ctx, gb.field, gb.gens).groebner(gb.order, track=True)


# ---------------------------------------------------------------------------
# the record pool (writer side)


class RecordPool:
    """Collects deduplicated verifiable records; payloads hold indices."""

    def __init__(self) -> None:
        self.entries: list = []
        self._by_key: dict = {}

    def _intern(self, key, build) -> int:
        idx = self._by_key.get(key)
        if idx is None:
            entry = build()
            idx = len(self.entries)
            self.entries.append(entry)
            self._by_key[key] = idx
        return idx

    # -- reduced bases ------------------------------------------------------

    def gb(self, gb: GBResult) -> int:
        key = (
            "gb", gb.field.spec_str(), gb.ctx.names, gb.order.perm,
            tuple(g.terms for g in gb.gens),
        )

        def build():
            t = _tracked(gb)
            return {
                "kind": "gb",
                "field": t.field.spec_str(),
                "vars": list(t.ctx.names),
                "perm": list(t.order.perm),
                "gens": encode_polys(t.gens),
                "basis": encode_polys(t.basis),
                "cofactors": [
                    [encode_poly(c) for c in row] for row in t.cofactors
                ],
            }

        return self._intern(key, build)

    def gb_of(self, ideal: Ideal, order: Optional[MonomialOrder] = None) -> int:
        return self.gb(ideal.groebner(order, track=True))

    # -- derived operations ---------------------------------------------------

    def derived_intersect(self, d: DerivedIdeal, left: Ideal, right: Ideal) -> int:
        assert d.kind in ("intersect", "colon")
        ctx, fld = left.ctx, left.field
        t, big, gens = aug_intersect(ctx, fld, left.gens, right.gens)
        assert t == d.aux_var and gens == d.elim.gb.gens, (
            "intersection reconstruction diverged from the recorded run"
        )
        key = ("derived-intersect", fld.spec_str(), big.names,
               tuple(g.terms for g in gens))

        def build():
            return {
                "kind": "derived",
                "op": "intersect",
                "aux": t,
                "left": encode_polys(left.gens),
                "right": encode_polys(right.gens),
                "elim_gb": self.gb(d.elim.gb),
                "kept": list(d.elim.kept_indices),
                "result": encode_polys(d.elim.ideal.gens),
            }

        return self._intern(key, build)

    def derived_saturate(self, d: DerivedIdeal, base: Ideal) -> int:
        assert d.kind == "saturate"
        f = d.params["divisor"]
        ctx, fld = base.ctx, base.field
        t, big, gens = aug_saturate(ctx, fld, base.gens, f)
        assert t == d.aux_var and gens == d.elim.gb.gens, (
            "saturation reconstruction diverged from the recorded run"
        )
        key = ("derived-saturate", fld.spec_str(), big.names,
               tuple(g.terms for g in gens))

        def build():
            return {
                "kind": "derived",
                "op": "saturate",
                "aux": t,
                "base": encode_polys(base.gens),
                "divisor": encode_poly(f),
                "elim_gb": self.gb(d.elim.gb),
                "kept": list(d.elim.kept_indices),
                "result": encode_polys(d.elim.ideal.gens),
            }

        return self._intern(key, build)

    def derived_colon(self, d: DerivedIdeal, base: Ideal) -> int:
        assert d.kind == "colon"
        f = d.params["divisor"]
        ctx, fld = base.ctx, base.field
        fideal = Ideal(ctx, fld, (f,))
        inter_result = tuple(
            d.elim.gb.basis[k].map_context(ctx) for k in d.elim.kept_indices
        )
        quot = tuple(exact_divide(g, f) for g in inter_result)
        assert quot == d.ideal.gens, (
            "colon reconstruction diverged from the recorded run"
        )
        inter_ref = self.derived_intersect(d, base, fideal)
        key = ("derived-colon", fld.spec_str(), ctx.names, f.terms,
               tuple(g.terms for g in base.gens))

        def build():
            return {
                "kind": "derived",
                "op": "colon",
                "divisor": encode_poly(f),
                "base": encode_polys(base.gens),
                "intersection": inter_ref,
                "result": encode_polys(quot),
            }

        return self._intern(key, build)

    def radical_member(self, gb: GBResult, base: Ideal, element: Polynomial) -> int:
        ctx, fld = base.ctx, base.field
        t, big, gens = aug_radical_member(ctx, fld, base.gens, element)
        assert t == big.names[0] and gens == gb.gens, (
            "radical-membership reconstruction diverged from the recorded run"
        )
        key = ("derived-radmem", fld.spec_str(), big.names,
               tuple(g.terms for g in gens))

        def build():
            return {
                "kind": "derived",
                "op": "radical-member",
                "aux": t,
                "base": encode_polys(base.gens),
                "element": encode_poly(element),
                "gb": self.gb(gb),
                "member": gb.is_unit(),
            }

        return self._intern(key, build)

    # -- comparisons ----------------------------------------------------------

    def equality(self, left: Ideal, right: Ideal) -> int:
        lref = self.gb_of(left)
        rref = self.gb_of(right)
        equal = left.canonical_basis() == right.canonical_basis()
        key = ("eq", lref, rref)

        def build():
            return {
                "kind": "ideal-equal",
                "left_gb": lref,
                "right_gb": rref,
                "equal": equal,
            }

        return self._intern(key, build)

    def members(self, container: Ideal, elements: Sequence[Polynomial]) -> int:
        cref = self.gb_of(container)
        key = ("members", cref, tuple(e.terms for e in elements))

        def build():
            return {
                "kind": "members",
                "container_gb": cref,
                "elements": encode_polys(elements),
            }

        return self._intern(key, build)


# ---------------------------------------------------------------------------
# document assembly and io


def make_document(
    kind: str,
    result: dict,
    pool: RecordPool,
    *,
    field: Field,
    variables: Sequence[str],
    input_gens: Optional[Sequence[Polynomial]] = None,
    inputs_extra: Optional[dict] = None,
    command: str = "",
    seed: Optional[int] = None,
) -> dict:
    inputs: dict = {}
    if input_gens is not None:
        inputs["gens"] = encode_polys(input_gens)
    if inputs_extra:
        inputs.update(inputs_extra)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "command": command,
        "field": field.spec_str(),
        "variables": list(variables),
        "inputs": inputs,
        "seed": seed,
        "pool": pool.entries,
        "result": result,
    }


def write_certificate(doc: dict, path: str, indent: Optional[int] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, indent=indent,
                  separators=None if indent else (",", ":"))
        fh.write("\n")


def read_certificate(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dumps_certificate(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# replay: record-level verification


class Replay:
    """Verifies one document; raises ReplayMismatch on the first bad claim.

    Pool entries are verified once and memoized; `checks` counts the
    verified obligations for the summary.
    """

    def __init__(self, doc: dict) -> None:
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ReplayMismatch(
                f"unsupported schema version {doc.get('schema_version')!r}"
            )
        self.doc = doc
        self.pool = doc.get("pool", [])
        self._gb_cache: dict = {}
        self._derived_cache: dict = {}
        self._eq_cache: dict = {}
        self._members_cache: dict = {}
        self.checks = 0

    def fail(self, message: str):
        raise ReplayMismatch(message)

    def _entry(self, idx, kind: str) -> dict:
        if not isinstance(idx, int) or not (0 <= idx < len(self.pool)):
            self.fail(f"record reference {idx!r} is out of range")
        entry = self.pool[idx]
        if entry.get("kind") != kind:
            self.fail(
                f"record {idx} is a {entry.get('kind')!r}, expected {kind!r}"
            )
        return entry

    # -- reduced bases ------------------------------------------------------

    def gb(self, idx: int) -> dict:
        """Verify a basis record; returns {ctx, field, order, gens, basis}."""
        hit = self._gb_cache.get(idx)
        if hit is not None:
            return hit
        entry = self._entry(idx, "gb")
        field = field_from_spec(entry["field"])
        ctx = VarContext(tuple(entry["vars"]))
        order = MonomialOrder(ctx, tuple(int(i) for i in entry["perm"]))
        gens = decode_polys(ctx, field, entry["gens"])
        basis = decode_polys(ctx, field, entry["basis"])
        cofactors = [
            [decode_poly(ctx, field, c) for c in row]
            for row in entry["cofactors"]
        ]
        key = order.key

        # monic, canonically sorted, auto-reduced
        lms = []
        for b in basis:
            if b.is_zero():
                self.fail(f"gb record {idx}: zero element in the basis")
            e, c = b.leading_data(order)
            if c != field.one:
                self.fail(f"gb record {idx}: basis element is not monic")
            lms.append(e)
        for a, b in zip(lms, lms[1:]):
            if not key(a) > key(b):
                self.fail(f"gb record {idx}: basis not sorted by leading monomial")
        for i, b in enumerate(basis):
            for e, _ in b.terms:
                for j, lm in enumerate(lms):
                    if exp_divides(lm, e) and not (j == i and e == lms[i]):
                        self.fail(
                            f"gb record {idx}: basis element {i} has a term "
                            f"reducible by element {j}; not auto-reduced"
                        )

        # cofactor expansion: basis[k] == sum(cofactors[k][i] * gens[i])
        if len(cofactors) != len(basis):
            self.fail(f"gb record {idx}: cofactor row count mismatch")
        for k, b in enumerate(basis):
            row = cofactors[k]
            if len(row) != len(gens):
                self.fail(f"gb record {idx}: cofactor row {k} width mismatch")
            acc = Polynomial.zero(ctx, field)
            for c, g in zip(row, gens):
                if not c.is_zero() and not g.is_zero():
                    acc = acc + c * g
            if not (acc - b).is_zero():
                self.fail(
                    f"gb record {idx}: cofactors do not expand basis element {k}"
                )

        # generators reduce to zero against the basis
        for i, g in enumerate(gens):
            if not normal_form(g, basis, order).is_zero():
                self.fail(
                    f"gb record {idx}: generator {i} does not reduce to zero"
                )

        # Buchberger criterion: S-polynomials reduce to zero (pairs with
        # coprime leading monomials are exempt by the standard lemma)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                if exp_coprime(lms[i], lms[j]):
                    continue
                lcm = exp_lcm(lms[i], lms[j])
                si = Polynomial.monomial(ctx, field, exp_div(lcm, lms[i]))
                sj = Polynomial.monomial(ctx, field, exp_div(lcm, lms[j]))
                s = basis[i] * si - basis[j] * sj
                if not normal_form(s, basis, order).is_zero():
                    self.fail(
                        f"gb record {idx}: S-polynomial of {i},{j} does not "
                        "reduce to zero"
                    )

        out = {
            "ctx": ctx, "field": field, "order": order,
            "gens": gens, "basis": basis,
        }
        self._gb_cache[idx] = out
        self.checks += 1
        return out

    def gb_for(self, idx: int, ctx: VarContext, field: Field,
               gens: Sequence[Polynomial],
               order: Optional[MonomialOrder] = None) -> dict:
        """Verify a basis record and pin it to the expected input."""
        rec = self.gb(idx)
        if rec["ctx"] != ctx or rec["field"] != field:
            self.fail(f"gb record {idx} is over a different ring")
        if tuple(rec["gens"]) != tuple(gens):
            self.fail(f"gb record {idx} was computed from different generators")
        if order is not None and rec["order"].perm != order.perm:
            self.fail(f"gb record {idx} uses a different monomial order")
        return rec

    # -- derived operations ----------------------------------------------------

    def derived(self, idx: int, op: str, ctx: VarContext, field: Field,
                **expected) -> dict:
        """Verify a derived-operation record against expected inputs.

        expected: left/right (intersect), base/divisor (saturate, colon),
        base/element (radical-member); polynomial tuples over ctx.
        Returns {"result": tuple, ...op-specific...}.
        """
        hit = self._derived_cache.get(idx)
        if hit is None:
            hit = self._verify_derived(idx, ctx, field)
            self._derived_cache[idx] = hit
            self.checks += 1
        if hit["op"] != op:
            self.fail(f"derived record {idx} is a {hit['op']!r}, expected {op!r}")
        for name, value in expected.items():
            got = hit[name]
            want = tuple(value) if isinstance(value, (tuple, list)) else value
            if got != want:
                self.fail(
                    f"derived record {idx}: recorded {name} differs from the "
                    "citing obligation"
                )
        return hit

    def _verify_derived(self, idx: int, ctx: VarContext, field: Field) -> dict:
        entry = self._entry(idx, "derived")
        op = entry["op"]
        if op == "intersect":
            left = decode_polys(ctx, field, entry["left"])
            right = decode_polys(ctx, field, entry["right"])
            t, big, gens = aug_intersect(ctx, field, left, right)
            if t != entry["aux"]:
                self.fail(f"derived record {idx}: auxiliary variable mismatch")
            rec = self.gb_for(entry["elim_gb"], big, field, gens)
            kept = [int(k) for k in entry["kept"]]
            expect_kept = [
                pos for pos, b in enumerate(rec["basis"])
                if t not in b.support_vars()
            ]
            if kept != expect_kept:
                self.fail(f"derived record {idx}: kept indices mismatch")
            result = tuple(rec["basis"][k].map_context(ctx) for k in kept)
            if result != decode_polys(ctx, field, entry["result"]):
                self.fail(f"derived record {idx}: extracted result mismatch")
            return {"op": op, "left": left, "right": right, "result": result}
        if op == "saturate":
            base = decode_polys(ctx, field, entry["base"])
            divisor = decode_poly(ctx, field, entry["divisor"])
            t, big, gens = aug_saturate(ctx, field, base, divisor)
            if t != entry["aux"]:
                self.fail(f"derived record {idx}: auxiliary variable mismatch")
            rec = self.gb_for(entry["elim_gb"], big, field, gens)
            kept = [int(k) for k in entry["kept"]]
            expect_kept = [
                pos for pos, b in enumerate(rec["basis"])
                if t not in b.support_vars()
            ]
            if kept != expect_kept:
                self.fail(f"derived record {idx}: kept indices mismatch")
            result = tuple(rec["basis"][k].map_context(ctx) for k in kept)
            if result != decode_polys(ctx, field, entry["result"]):
                self.fail(f"derived record {idx}: extracted result mismatch")
            return {"op": op, "base": base, "divisor": divisor, "result": result}
        if op == "colon":
            base = decode_polys(ctx, field, entry["base"])
            divisor = decode_poly(ctx, field, entry["divisor"])
            inter = self.derived(
                entry["intersection"], "intersect", ctx, field,
                left=base, right=(divisor,),
            )
            quot = tuple(exact_divide(g, divisor) for g in inter["result"])
            if quot != decode_polys(ctx, field, entry["result"]):
                self.fail(f"derived record {idx}: colon quotients mismatch")
            return {"op": op, "base": base, "divisor": divisor, "result": quot}
        if op == "radical-member":
            base = decode_polys(ctx, field, entry["base"])
            element = decode_poly(ctx, field, entry["element"])
            t, big, gens = aug_radical_member(ctx, field, base, element)
            if t != entry["aux"]:
                self.fail(f"derived record {idx}: auxiliary variable mismatch")
            rec = self.gb_for(entry["gb"], big, field, gens)
            member = len(rec["basis"]) == 1 and rec["basis"][0].is_one()
            if member != bool(entry["member"]):
                self.fail(
                    f"derived record {idx}: recorded membership verdict is wrong"
                )
            return {"op": op, "base": base, "element": element, "member": member}
        self.fail(f"derived record {idx}: unknown operation {op!r}")

    # -- comparisons ----------------------------------------------------------

    def equality(self, idx: int, ctx: VarContext, field: Field,
                 left: Sequence[Polynomial], right: Sequence[Polynomial],
                 expect: Optional[bool] = None) -> bool:
        entry = self._entry(idx, "ideal-equal")
        lrec = self.gb_for(entry["left_gb"], ctx, field, left, natural_order(ctx))
        rrec = self.gb_for(entry["right_gb"], ctx, field, right, natural_order(ctx))
        equal = lrec["basis"] == rrec["basis"]
        if equal != bool(entry["equal"]):
            self.fail(f"equality record {idx}: recorded verdict is wrong")
        if expect is not None and equal != expect:
            self.fail(
                f"equality record {idx}: verdict {equal} contradicts the "
                f"citing obligation ({expect})"
            )
        self.checks += 1
        return equal

    def members(self, idx: int, ctx: VarContext, field: Field,
                container: Sequence[Polynomial],
                elements: Sequence[Polynomial]) -> None:
        entry = self._entry(idx, "members")
        rec = self.gb_for(entry["container_gb"], ctx, field, container,
                          natural_order(ctx))
        recorded = decode_polys(ctx, field, entry["elements"])
        if recorded != tuple(elements):
            self.fail(
                f"membership record {idx}: recorded elements differ from the "
                "citing obligation"
            )
        for i, f in enumerate(recorded):
            if not normal_form(f, rec["basis"], rec["order"]).is_zero():
                self.fail(
                    f"membership record {idx}: element {i} is not in the ideal"
                )
        self.checks += 1


# ---------------------------------------------------------------------------
# dimension bookkeeping from verified records


def dim_from_record(rec: dict) -> int:
    """Krull dimension of the quotient, straight off a verified basis."""
    basis = rec["basis"]
    n = len(rec["ctx"])
    if len(basis) == 1 and basis[0].is_one():
        return -1
    if not basis:
        return n
    supports = [
        frozenset(i for i, x in enumerate(b.leading_data(rec["order"])[0]) if x)
        for b in basis
    ]
    return n - min_transversal_size(supports)


def height_from_record(rec: dict) -> int:
    return len(rec["ctx"]) - dim_from_record(rec)


# ---------------------------------------------------------------------------
# decomposition payloads (writer side)
#
# Payloads are the JSON shape of one verdict component; records they cite
# live in the shared pool by index.


def _record_map(records) -> dict:
    return dict(records)


def unmixed_payload(ev: UnmixedEvidence, ideal: Ideal, pool: RecordPool) -> dict:
    out = {
        "tag": ev.tag,
        "detail": ev.detail,
        "ok": ev.ok,
        "ideal_gb": pool.gb_of(ideal),
    }
    recs = _record_map(ev.records)
    if "evidence_gb" in recs:
        out["evidence_gb"] = pool.gb(recs["evidence_gb"])
    return out


def radical_cm_payload(ev: RadicalCMEvidence, ideal: Ideal,
                       pool: RecordPool) -> dict:
    out = {
        "radical_tag": ev.radical_tag,
        "radical_detail": ev.radical_detail,
        "cm_tag": ev.cm_tag,
        "cm_detail": ev.cm_detail,
        "ok": ev.ok,
        "gens": encode_polys(ideal.gens),
        "ideal_gb": pool.gb_of(ideal),
    }
    recs = _record_map(ev.records)
    if "evidence_gb" in recs:
        out["evidence_gb"] = pool.gb(recs["evidence_gb"])
    return out


def basis_split_payload(split, pool: RecordPool) -> dict:
    """The coefficient/y-free reading of a reduced variable-greatest basis,
    with no claims about the decomposition equality."""
    return {
        "shed_var": split.shed_var,
        "shed_gb": pool.gb(split.gb),
        "triples": [
            [d, encode_poly(q), encode_poly(r)] for d, q, r in split.triples
        ],
        "coeff_gens": encode_polys(split.coeff_gens),
        "yfree_gens": encode_polys(split.yfree_gens),
        "initial_gens": encode_polys(split.initial_gens),
    }


def split_payload(report: SplitReport, pool: RecordPool) -> dict:
    split = report.split
    assert split is not None, "only search-produced decompositions serialize"
    ctx, fld = split.ctx, split.gb.field
    ypoly = Polynomial.variable(ctx, fld, report.shed_var)
    yfree_plus = report.yfree_ideal.plus_gens([ypoly])
    out = basis_split_payload(split, pool)
    out.update({
        "holds": report.holds,
        "intersection": pool.derived_intersect(
            report.intersection, report.coeff_ideal, yfree_plus
        ),
        "equality": pool.equality(
            report.initial_form_ideal, report.intersection.ideal
        ),
    })
    if report.saturation is not None:
        out["saturation"] = pool.derived_saturate(
            report.saturation, report.initial_form_ideal
        )
        out["colon_equality"] = pool.equality(
            report.coeff_ideal, report.saturation.ideal
        )
        out["plus_var_equality"] = pool.equality(
            yfree_plus, report.initial_form_ideal.plus_gens([ypoly])
        )
    return out


def degeneracy_payload(kind: str, split, records, pool: RecordPool) -> dict:
    recs = _record_map(records)
    out = {"kind": kind, "coeff_gb": pool.gb(recs["coeff_gb"])}
    coeff_nz = split.coeff_ideal.nonzero_gens()
    yfree_nz = split.yfree_ideal.nonzero_gens()
    memberships = []
    for name, rgb in records:
        if name == "coeff_gb":
            continue
        if name.endswith("_in_rad_yfree"):
            i = int(name[len("coeff_gen_"):-len("_in_rad_yfree")])
            side, base, elem = "coeff", split.yfree_ideal, coeff_nz[i]
        else:
            i = int(name[len("yfree_gen_"):-len("_in_rad_coeff")])
            side, base, elem = "yfree", split.coeff_ideal, yfree_nz[i]
        memberships.append({
            "side": side,
            "index": i,
            "ref": pool.radical_member(rgb, base, elem),
            "member": rgb.is_unit(),
        })
    out["memberships"] = memberships
    return out


def node_payload(node: GVDNode, pool: RecordPool) -> dict:
    recs = _record_map(node.records)
    ctx = VarContext(tuple(node.context))
    fld = recs["canonical_gb"].field
    ideal = Ideal.of(ctx, fld, recs["canonical_gb"].gens)
    out = {
        "context": list(node.context),
        "case": node.case,
        "variant": node.variant,
        "basis": encode_polys(node.basis),
        "canonical_gb": pool.gb(recs["canonical_gb"]),
        "unmixedness": unmixed_payload(node.unmixedness, ideal, pool),
    }
    if node.case != "decompose":
        return out
    out["shed_var"] = node.shed_var
    out["degeneracy"] = degeneracy_payload(
        node.degeneracy, node.split, node.degeneracy_records, pool
    )
    out["split"] = split_payload(node.equality, pool)
    if node.coeff_branch is not None:
        out["coeff_branch"] = node_payload(node.coeff_branch, pool)
    if node.yfree_branch is not None:
        out["yfree_branch"] = node_payload(node.yfree_branch, pool)
    if node.yfree_evidence is not None:
        out["yfree_evidence"] = radical_cm_payload(
            node.yfree_evidence, node.split.contracted_yfree(), pool
        )
    return out


def refutation_payload(ref: GVDRefutation, pool: RecordPool) -> dict:
    recs = _record_map(ref.records)
    gb = recs["canonical_gb"]
    ctx = VarContext(tuple(ref.context))
    fld = gb.field
    ideal = Ideal.of(ctx, fld, gb.gens)
    out = {
        "context": list(ref.context),
        "variant": ref.variant,
        "reason": ref.reason,
        "basis": encode_polys(ref.basis),
        "canonical_gb": pool.gb(gb),
    }
    if ref.unmixedness is not None:
        out["unmixedness"] = unmixed_payload(ref.unmixedness, ideal, pool)
    tried = []
    for tv in ref.details:
        entry: dict = {"var": tv.var, "kind": tv.kind, "reason": tv.reason}
        if tv.kind == "not-squarefree":
            entry["shed_gb"] = pool.gb(tv.shed_gb)
        elif tv.kind == "equality-failed":
            entry["split"] = split_payload(tv.report, pool)
        elif tv.kind in ("coeff-branch", "yfree-branch"):
            entry["split"] = split_payload(tv.report, pool)
            entry["branch_gens"] = encode_polys(tv.branch_gens)
            entry["branch"] = refutation_payload(tv.branch, pool)
        elif tv.kind == "yfree-evidence":
            sub = ctx.without(tv.var)
            contracted = Ideal.of(sub, fld, tv.branch_gens)
            entry["split"] = split_payload(tv.report, pool)
            entry["branch_gens"] = encode_polys(tv.branch_gens)
            entry["evidence"] = radical_cm_payload(tv.evidence, contracted, pool)
        else:  # pragma: no cover - refutations never keep conditional nodes
            raise AssertionError(f"unexpected refutation entry {tv.kind!r}")
        tried.append(entry)
    out["tried"] = tried
    return out


def gvd_result_payload(result, ideal: Ideal, pool: RecordPool,
                       unmixed_mode: str) -> dict:
    out = {
        "decomposable": result.decomposable,
        "conditional": result.is_conditional() if result.decomposable else False,
        "unmixed_mode": unmixed_mode,
    }
    if result.decomposable:
        out["variant"] = result.certificate.variant
        out["node"] = node_payload(result.certificate, pool)
    else:
        out["variant"] = result.refutation.variant
        out["refutation"] = refutation_payload(result.refutation, pool)
    return out


# ---------------------------------------------------------------------------
# decomposition payloads (replay side)


def _is_monomial_basis(basis) -> bool:
    return all(len(b.terms) == 1 for b in basis)


def _squarefree_exps(exps) -> bool:
    return all(all(x <= 1 for x in e) for e in exps)


def _initial_from_lms(ctx, field, basis, order) -> Ideal:
    gens = [
        Polynomial.monomial(ctx, field, b.leading_data(order)[0]) for b in basis
    ]
    return Ideal.of(ctx, field, gens)


def _oc_order(ctx: VarContext, remaining) -> MonomialOrder:
    return MonomialOrder(ctx, tuple(ctx.index(n) for n in remaining))


def _replay_unmixed(rp: Replay, payload: dict, ctx: VarContext, field: Field,
                    gens, *, leaf: bool = False,
                    evidence_order: Optional[MonomialOrder] = None) -> bool:
    """Verify unmixedness evidence; returns True when it is assumed."""
    tag, ok = payload.get("tag"), payload.get("ok")
    rec = rp.gb_for(payload["ideal_gb"], ctx, field, gens, natural_order(ctx))
    basis = rec["basis"]
    eorder = evidence_order or natural_order(ctx)
    if tag == EXACT:
        if ok is not True and ok is not False:
            rp.fail("exact unmixedness evidence must carry a verdict")
        if leaf:
            return False
        if not _is_monomial_basis(basis):
            rp.fail("exact unmixedness cited for a non-monomial ideal")
        dec = monomial_ass_primes(Ideal.of(ctx, field, basis))
        if dec.is_unmixed() != ok:
            rp.fail("recorded unmixedness verdict contradicts the "
                    "associated primes")
        return False
    if tag == SUFFICIENT_VD:
        if ok is not True:
            rp.fail("vertex-decomposition unmixedness evidence must be "
                    "positive")
        erec = rp.gb_for(payload["evidence_gb"], ctx, field, gens, eorder)
        lms = [b.leading_data(erec["order"])[0] for b in erec["basis"]]
        if not _squarefree_exps(lms):
            rp.fail("cited initial ideal is not squarefree")
        delta = complex_of(_initial_from_lms(ctx, field, erec["basis"],
                                             erec["order"]))
        if not delta.is_pure():
            rp.fail("cited initial complex is not pure")
        if not vertex_decomposable(delta, "pure").decomposable:
            rp.fail("cited initial complex is not vertex decomposable")
        return False
    if tag == ASSUMED:
        if ok is not None:
            rp.fail("assumed unmixedness cannot carry a verdict")
        if "evidence_gb" in payload:
            rp.gb_for(payload["evidence_gb"], ctx, field, gens, eorder)
        return True
    rp.fail(f"unknown unmixedness tag {tag!r}")


def _replay_radical_cm(rp: Replay, payload: dict, ctx: VarContext,
                       field: Field, gens) -> tuple:
    """Verify radical + Cohen-Macaulay evidence; returns (ok, conditional)."""
    rtag, ctag = payload.get("radical_tag"), payload.get("cm_tag")
    ok = payload.get("ok")
    if decode_polys(ctx, field, payload["gens"]) != tuple(gens):
        rp.fail("radical/CM evidence cites different generators")
    rec = rp.gb_for(payload["ideal_gb"], ctx, field, gens, natural_order(ctx))
    basis = rec["basis"]
    conditional = ASSUMED in (rtag, ctag)
    if (ok is None) != conditional:
        rp.fail("radical/CM verdict disagrees with its tags")

    if not basis:  # zero ideal
        if not (rtag == EXACT and ctag == EXACT and ok is True):
            rp.fail("zero ideal must carry exact positive radical/CM evidence")
        return ok, False
    if len(basis) == 1 and basis[0].is_one():  # unit ideal
        if not (rtag == EXACT and ctag == EXACT and ok is True):
            rp.fail("unit ideal must carry exact positive radical/CM evidence")
        return ok, False
    if _is_monomial_basis(basis):
        exps = [b.terms[0][0] for b in basis]
        if not _squarefree_exps(exps):
            if not (rtag == EXACT and ok is False):
                rp.fail("non-radical monomial ideal recorded as radical")
            return ok, False
        if rtag != EXACT or ctag != EXACT:
            rp.fail("squarefree monomial ideal must carry exact evidence")
        cm = reisner_cm(complex_of(Ideal.of(ctx, field, basis)), field)
        if cm != ok:
            rp.fail("recorded Cohen-Macaulay verdict contradicts the "
                    "homology computation")
        return ok, False

    # general ideal: evidence runs through the initial ideal
    erec = rp.gb_for(payload["evidence_gb"], ctx, field, gens,
                     natural_order(ctx))
    lms = [b.leading_data(erec["order"])[0] for b in erec["basis"]]
    squarefree = _squarefree_exps(lms)
    if squarefree != (rtag == EXACT):
        rp.fail("radicality tag disagrees with the initial ideal's shape")
    if ok is True:
        if ctag == SUFFICIENT_VD:
            delta = complex_of(_initial_from_lms(ctx, field, erec["basis"],
                                                 erec["order"]))
            if not (delta.is_pure()
                    and vertex_decomposable(delta, "pure").decomposable):
                rp.fail("cited initial complex is not pure and vertex "
                        "decomposable")
        elif ctag == SUFFICIENT_REISNER:
            delta = complex_of(_initial_from_lms(ctx, field, erec["basis"],
                                                 erec["order"]))
            if not reisner_cm(delta, field):
                rp.fail("cited initial complex fails Reisner's criterion")
        elif ctag == SUFFICIENT_PRINCIPAL:
            if len([g for g in gens if not g.is_zero()]) != 1:
                rp.fail("principality cited for a non-principal presentation")
        else:
            rp.fail(f"positive radical/CM verdict with tag {ctag!r}")
    elif ok is False:
        rp.fail("negative radical/CM evidence is exact-only, for monomial "
                "ideals")
    else:
        if ctag == SUFFICIENT_PRINCIPAL and \
                len([g for g in gens if not g.is_zero()]) != 1:
            rp.fail("principality cited for a non-principal presentation")
    return ok, conditional


def _replay_basis_split(rp: Replay, payload: dict, ctx: VarContext,
                        field: Field, gens) -> dict:
    """Verify the coefficient/y-free reading of a shed-variable basis."""
    var = payload["shed_var"]
    if var not in ctx.names:
        rp.fail(f"shed variable {var!r} is not in the ring")
    j = ctx.index(var)
    rec = rp.gb_for(payload["shed_gb"], ctx, field, gens, shed_order(ctx, var))
    basis = rec["basis"]
    for b in basis:
        for e, _ in b.terms:
            if e[j] > 1:
                rp.fail(f"basis is not squarefree in {var!r}")

    coeff_gens = decode_polys(ctx, field, payload["coeff_gens"])
    yfree_gens = decode_polys(ctx, field, payload["yfree_gens"])
    initial_gens = decode_polys(ctx, field, payload["initial_gens"])
    triples = payload["triples"]
    if len(triples) != len(basis):
        rp.fail("decomposition triple count mismatch")
    ypoly = Polynomial.variable(ctx, field, var)
    want_coeff, want_yfree, want_init = [], [], []
    for g, trip in zip(basis, triples):
        d, q, r = _split_element(g, j)
        if [d, encode_poly(q), encode_poly(r)] != [trip[0], trip[1], trip[2]]:
            rp.fail("recorded decomposition triple mismatch")
        want_coeff.append(q)
        if d == 0:
            want_yfree.append(q)
        want_init.append(q * ypoly ** d if d else q)
    if (tuple(want_coeff) != coeff_gens or tuple(want_yfree) != yfree_gens
            or tuple(want_init) != initial_gens):
        rp.fail("recorded coefficient/y-free/initial generators mismatch")
    pairs = tuple(
        (decode_poly(ctx, field, t[1]), decode_poly(ctx, field, t[2]))
        for t in triples if t[0] == 1
    )
    return {
        "var": var,
        "coeff_gens": coeff_gens,
        "yfree_gens": yfree_gens,
        "initial_gens": initial_gens,
        "pairs": pairs,
    }


def _replay_split(rp: Replay, payload: dict, ctx: VarContext, field: Field,
                  gens, *, expect_holds: bool) -> dict:
    """Verify one decomposition at a variable; returns the split data."""
    data = _replay_basis_split(rp, payload, ctx, field, gens)
    var = data["var"]
    coeff_gens = data["coeff_gens"]
    yfree_gens = data["yfree_gens"]
    initial_gens = data["initial_gens"]
    ypoly = Polynomial.variable(ctx, field, var)
    yfree_plus = yfree_gens + (ypoly,)
    inter = rp.derived(payload["intersection"], "intersect", ctx, field,
                       left=coeff_gens, right=yfree_plus)
    rp.equality(payload["equality"], ctx, field, initial_gens,
                inter["result"], expect=expect_holds)
    if bool(payload["holds"]) != expect_holds:
        rp.fail("recorded decomposition verdict contradicts the equality")
    if "saturation" in payload:
        # cross-checks; for a holding decomposition both are forced
        expect_cross = True if expect_holds else None
        sat = rp.derived(payload["saturation"], "saturate", ctx, field,
                         base=initial_gens, divisor=ypoly)
        rp.equality(payload["colon_equality"], ctx, field, coeff_gens,
                    sat["result"], expect=expect_cross)
        rp.equality(payload["plus_var_equality"], ctx, field, yfree_plus,
                    initial_gens + (ypoly,), expect=expect_cross)
    return data


def _contract(ctx: VarContext, var: str, polys) -> tuple:
    sub = ctx.without(var)
    return sub, tuple(g.map_context(sub) for g in polys)


def _replay_degeneracy(rp: Replay, payload: dict, ctx: VarContext,
                       field: Field, split: dict) -> str:
    """Verify the degeneracy classification; returns the verified kind."""
    kind = payload["kind"]
    coeff_gens = split["coeff_gens"]
    yfree_gens = split["yfree_gens"]
    crec = rp.gb_for(payload["coeff_gb"], ctx, field, coeff_gens,
                     natural_order(ctx))
    unit = len(crec["basis"]) == 1 and crec["basis"][0].is_one()
    memberships = payload["memberships"]
    if unit:
        if kind != DEGEN_UNIT or memberships:
            rp.fail("unit coefficient ideal recorded with the wrong kind")
        return kind
    if kind == DEGEN_UNIT:
        rp.fail("coefficient ideal recorded as unit is not")

    coeff_nz = [g for g in coeff_gens if not g.is_zero()]
    yfree_nz = [g for g in yfree_gens if not g.is_zero()]
    expected = [("coeff", i) for i in range(len(coeff_nz))]
    expected += [("yfree", i) for i in range(len(yfree_nz))]
    if len(memberships) > len(expected):
        rp.fail("degeneracy evidence lists too many membership runs")
    last_member = True
    for pos, entry in enumerate(memberships):
        side, i = expected[pos]
        if entry["side"] != side or int(entry["index"]) != i:
            rp.fail("degeneracy evidence is out of scan order")
        if side == "coeff":
            base, elem = yfree_gens, coeff_nz[i]
        else:
            base, elem = coeff_gens, yfree_nz[i]
        got = rp.derived(entry["ref"], "radical-member", ctx, field,
                         base=base, element=elem)
        if got["member"] != bool(entry["member"]):
            rp.fail("degeneracy membership verdict mismatch")
        if pos < len(memberships) - 1 and not got["member"]:
            rp.fail("degeneracy scan continued past a witness")
        last_member = got["member"]
    if kind == NONDEGENERATE:
        if not memberships or last_member:
            rp.fail("nondegeneracy recorded without a radical-membership "
                    "witness")
    elif kind == DEGEN_RADICALS:
        if len(memberships) != len(expected) or not last_member:
            rp.fail("equal-radicals evidence does not cover every generator")
    else:
        rp.fail(f"unknown degeneracy kind {kind!r}")
    return kind


def _replay_node(rp: Replay, payload: dict, ctx: VarContext, field: Field,
                 gens, variant: str, remaining=None) -> bool:
    """Verify a decomposition-tree node; returns True when conditional."""
    if tuple(payload["context"]) != ctx.names:
        rp.fail("node context mismatch")
    if payload["variant"] != variant:
        rp.fail("node variant mismatch")
    rec = rp.gb_for(payload["canonical_gb"], ctx, field, gens,
                    natural_order(ctx))
    basis = rec["basis"]
    if decode_polys(ctx, field, payload["basis"]) != tuple(basis):
        rp.fail("recorded node basis mismatch")

    case = payload["case"]
    if case == "unit":
        if not (len(basis) == 1 and basis[0].is_one()):
            rp.fail("unit leaf with a non-unit basis")
        _replay_unmixed(rp, payload["unmixedness"], ctx, field, gens,
                        leaf=True)
        return False
    if case == "indeterminates":
        if not all(b.is_single_variable() for b in basis):
            rp.fail("indeterminates leaf with a non-variable basis element")
        _replay_unmixed(rp, payload["unmixedness"], ctx, field, gens,
                        leaf=True)
        return False
    if case != "decompose":
        rp.fail(f"unknown node case {case!r}")

    eorder = _oc_order(ctx, remaining) if remaining is not None else None
    conditional = _replay_unmixed(rp, payload["unmixedness"], ctx, field,
                                  gens, evidence_order=eorder)
    var = payload["shed_var"]
    if remaining is not None:
        if var != remaining[0]:
            rp.fail(f"order-compatible node must shed {remaining[0]!r}, "
                    f"not {var!r}")
        if payload["unmixedness"].get("ok") is not True:
            rp.fail("order-compatible steps need positively settled "
                    "unmixedness")
    split = _replay_split(rp, payload["split"], ctx, field, gens,
                          expect_holds=True)
    if split["var"] != var:
        rp.fail("node and its decomposition disagree on the shed variable")
    kind = _replay_degeneracy(rp, payload["degeneracy"], ctx, field, split)

    sub_c, coeff_c = _contract(ctx, var, split["coeff_gens"])
    sub_n, yfree_c = _contract(ctx, var, split["yfree_gens"])
    has_coeff = "coeff_branch" in payload
    has_yfree = "yfree_branch" in payload
    has_ev = "yfree_evidence" in payload
    sub_remaining = remaining[1:] if remaining is not None else None

    if variant in ("full", "order-compatible"):
        if not (has_coeff and has_yfree) or has_ev:
            rp.fail("this variant requires both contracted branches")
    elif variant == "weak":
        if kind in (DEGEN_UNIT, DEGEN_RADICALS):
            if not has_yfree or has_coeff or has_ev:
                rp.fail("a degenerate weak step recurses only on the "
                        "y-free ideal")
        else:
            if not (has_coeff and has_ev) or has_yfree:
                rp.fail("a nondegenerate weak step needs the coefficient "
                        "branch and y-free evidence")
    else:
        rp.fail(f"unknown variant {variant!r}")

    if has_coeff:
        conditional |= _replay_node(rp, payload["coeff_branch"], sub_c, field,
                                    coeff_c, variant, sub_remaining)
    if has_yfree:
        conditional |= _replay_node(rp, payload["yfree_branch"], sub_n, field,
                                    yfree_c, variant, sub_remaining)
    if has_ev:
        ok, ev_conditional = _replay_radical_cm(
            rp, payload["yfree_evidence"], sub_n, field, yfree_c
        )
        if ok is False:
            rp.fail("a certified step cannot carry refuting y-free evidence")
        conditional |= ev_conditional
    return conditional


def _replay_refutation(rp: Replay, payload: dict, ctx: VarContext,
                       field: Field, gens, variant: str,
                       remaining=None) -> None:
    if tuple(payload["context"]) != ctx.names:
        rp.fail("refutation context mismatch")
    if payload["variant"] != variant:
        rp.fail("refutation variant mismatch")
    rec = rp.gb_for(payload["canonical_gb"], ctx, field, gens,
                    natural_order(ctx))
    basis = rec["basis"]
    if decode_polys(ctx, field, payload["basis"]) != tuple(basis):
        rp.fail("recorded refutation basis mismatch")
    if len(basis) == 1 and basis[0].is_one():
        rp.fail("the unit ideal cannot be refuted")
    if all(b.is_single_variable() for b in basis):
        rp.fail("an ideal of indeterminates cannot be refuted")

    tried = payload.get("tried", ())
    if not tried:
        # refuted before trying any variable: unmixedness failed (exactly,
        # or - order-compatible only - could not be established)
        um = payload.get("unmixedness")
        if um is None:
            rp.fail("a refutation must cite failed unmixedness or tried "
                    "variables")
        if variant in ("full", "weak"):
            if um.get("ok") is not False or um.get("tag") != EXACT:
                rp.fail("full/weak refutations without tried variables need "
                        "an exact mixed-heights verdict")
            _replay_unmixed(rp, um, ctx, field, gens)
            return
        # order-compatible: evidence that is not positively settled refutes
        if um.get("ok") is True:
            rp.fail("positive unmixedness evidence cannot refute")
        if um.get("tag") == EXACT:
            _replay_unmixed(rp, um, ctx, field, gens)
            return
        if um.get("tag") != ASSUMED:
            rp.fail("unsettled unmixedness must be tagged assumed")
        # honesty check: the sufficient route must actually fail
        erec = rp.gb_for(um["evidence_gb"], ctx, field, gens,
                         _oc_order(ctx, remaining))
        lms = [b.leading_data(erec["order"])[0] for b in erec["basis"]]
        if _squarefree_exps(lms):
            delta = complex_of(_initial_from_lms(ctx, field, erec["basis"],
                                                 erec["order"]))
            if delta.is_pure() and \
                    vertex_decomposable(delta, "pure").decomposable:
                rp.fail("unmixedness was assumable but provable; dishonest "
                        "refutation")
        return

    if variant in ("full", "weak"):
        if tuple(e["var"] for e in tried) != ctx.names:
            rp.fail("refutation does not cover every variable of the ring")
    else:
        if len(tried) != 1 or tried[0]["var"] != remaining[0]:
            rp.fail("order-compatible refutations fail at the greatest "
                    "remaining variable")

    for entry in tried:
        var, kind = entry["var"], entry["kind"]
        if kind == "not-squarefree":
            srec = rp.gb_for(entry["shed_gb"], ctx, field, gens,
                             shed_order(ctx, var))
            j = ctx.index(var)
            if all(e[j] <= 1 for b in srec["basis"] for e, _ in b.terms):
                rp.fail(f"basis is squarefree in {var!r}; rejection is wrong")
        elif kind == "equality-failed":
            _replay_split(rp, entry["split"], ctx, field, gens,
                          expect_holds=False)
        elif kind in ("coeff-branch", "yfree-branch"):
            split = _replay_split(rp, entry["split"], ctx, field, gens,
                                  expect_holds=True)
            source = split["coeff_gens" if kind == "coeff-branch"
                           else "yfree_gens"]
            sub, contracted = _contract(ctx, var, source)
            if decode_polys(sub, field, entry["branch_gens"]) != contracted:
                rp.fail("recorded branch generators are not the contraction")
            sub_remaining = remaining[1:] if remaining is not None else None
            _replay_refutation(rp, entry["branch"], sub, field, contracted,
                               variant, sub_remaining)
        elif kind == "yfree-evidence":
            split = _replay_split(rp, entry["split"], ctx, field, gens,
                                  expect_holds=True)
            sub, contracted = _contract(ctx, var, split["yfree_gens"])
            if decode_polys(sub, field, entry["branch_gens"]) != contracted:
                rp.fail("recorded branch generators are not the contraction")
            ok, _ = _replay_radical_cm(rp, entry["evidence"], sub, field,
                                       contracted)
            if ok is not False:
                rp.fail("y-free evidence cited as refuting is not refuting")
        else:
            rp.fail(f"refutations cannot carry {kind!r} entries")


def _replay_gvd_result(rp: Replay, payload: dict, ctx: VarContext,
                       field: Field, gens, remaining=None) -> None:
    variant = payload["variant"]
    if payload["decomposable"]:
        conditional = _replay_node(rp, payload["node"], ctx, field, gens,
                                   variant, remaining)
        if conditional != bool(payload["conditional"]):
            rp.fail("recorded conditionality disagrees with the evidence "
                    "tags")
    else:
        if payload.get("conditional"):
            rp.fail("refutations are never conditional")
        _replay_refutation(rp, payload["refutation"], ctx, field, gens,
                           variant, remaining)


# ---------------------------------------------------------------------------
# order-compatible checks and sweeps


def order_check_payload(ideal: Ideal, res: OrderCompatibleResult,
                        pool: RecordPool) -> dict:
    ctx = ideal.ctx
    order = _oc_order(ctx, res.order_names)
    return {
        "order": list(res.order_names),
        "decomposable": res.decomposable,
        "initial_squarefree": res.initial_is_squarefree,
        "order_gb": pool.gb_of(ideal, order),
        "direct": gvd_result_payload(res.direct, ideal, pool, "certify"),
    }


def _replay_order_check(rp: Replay, payload: dict, ctx: VarContext,
                        field: Field, gens) -> None:
    names_desc = tuple(payload["order"])
    if tuple(sorted(names_desc)) != tuple(sorted(ctx.names)):
        rp.fail("order names do not enumerate the ring variables")
    order = _oc_order(ctx, names_desc)
    rec = rp.gb_for(payload["order_gb"], ctx, field, gens, order)
    lms = [b.leading_data(order)[0] for b in rec["basis"]]
    squarefree = _squarefree_exps(lms)
    if squarefree != bool(payload["initial_squarefree"]):
        rp.fail("recorded initial-ideal squarefreeness is wrong")

    # the independent route: order-compatible decomposition of the initial
    # complex, recomputed outright
    via_ok = False
    if squarefree:
        delta = complex_of(_initial_from_lms(ctx, field, rec["basis"], order))
        via_ok = vertex_decomposable(
            delta, "pure", vertex_order=names_desc
        ).decomposable

    direct = payload["direct"]
    if direct["variant"] != "order-compatible":
        rp.fail("the direct recursion must be order-compatible")
    if bool(direct["decomposable"]) != bool(payload["decomposable"]):
        rp.fail("direct verdict disagrees with the recorded verdict")
    if via_ok != bool(payload["decomposable"]):
        rp.fail("initial-complex route disagrees with the recorded verdict")
    _replay_gvd_result(rp, direct, ctx, field, gens, remaining=names_desc)


# ---------------------------------------------------------------------------
# biliaison witnesses and chains (writer side)


def witness_payload(ideal: Ideal, coeff_ideal: Ideal, yfree_ideal: Ideal,
                    witness: BiliaisonWitness, pool: RecordPool) -> dict:
    assert witness.ok, "only verified witnesses serialize"
    ctx, fld = ideal.ctx, ideal.field
    ypoly = Polynomial.variable(ctx, fld, witness.shed_var)
    recs = _record_map(witness.report.records)
    identities = tuple(
        q * witness.v - (ypoly * q + r) * witness.u for q, r in witness.pairs
    )
    return {
        "shed_var": witness.shed_var,
        "scalars": [fld.coeff_str(a) for a in witness.scalars],
        "pairs": [[encode_poly(q), encode_poly(r)] for q, r in witness.pairs],
        "u": encode_poly(witness.u),
        "v": encode_poly(witness.v),
        "degree_shift": witness.degree_shift,
        "seed": witness.seed,
        "attempts": witness.attempts,
        "checks": [[n, ok, detail] for n, ok, detail in witness.report.checks],
        "warnings": list(witness.report.warnings),
        "colon_u": pool.derived_colon(recs["colon_u"], yfree_ideal),
        "colon_v": pool.derived_colon(recs["colon_v"], yfree_ideal),
        "colon_u_equality": pool.equality(recs["colon_u"].ideal, yfree_ideal),
        "colon_v_equality": pool.equality(recs["colon_v"].ideal, yfree_ideal),
        "module_members": pool.members(yfree_ideal, identities),
        "containment_ideal": pool.members(ideal, yfree_ideal.nonzero_gens()),
        "containment_coeff": pool.members(coeff_ideal,
                                          yfree_ideal.nonzero_gens()),
        "ideal_gb": pool.gb_of(ideal),
        "coeff_gb": pool.gb_of(coeff_ideal),
        "yfree_gb": pool.gb_of(yfree_ideal),
    }


def chain_payload(chain: GlicciChain, field: Field, pool: RecordPool,
                  unmixed_mode: str) -> dict:
    steps = []
    node = chain.certificate
    for step in chain.steps:
        assert node.case == "decompose" and step.context == node.context
        assert step.shed_var == node.shed_var
        ctx_here = VarContext(tuple(node.context))
        ideal_here = Ideal.of(ctx_here, field, node.basis)
        split = node.split
        entry = {
            "kind": step.kind,
            "context": list(step.context),
            "shed_var": step.shed_var,
            "ideal_gens": encode_polys(step.ideal_gens),
            "next_gens": encode_polys(step.next_gens),
            "lifted_ideal_gens": encode_polys(step.lifted_ideal_gens),
            "lifted_next_gens": encode_polys(step.lifted_next_gens),
            "pinned": list(step.pinned),
            "warnings": list(step.warnings),
        }
        if step.kind == "unit-rewrite":
            ypoly = Polynomial.variable(ctx_here, field, step.shed_var)
            entry["rewrite_equality"] = pool.equality(
                ideal_here, split.yfree_ideal.plus_gens([ypoly])
            )
            node = node.yfree_branch
        elif step.kind == "equal-radicals-rewrite":
            entry["rewrite_equality"] = pool.equality(
                ideal_here, split.yfree_ideal
            )
            node = node.yfree_branch
        else:
            assert step.kind == "biliaison"
            entry["witness"] = witness_payload(
                ideal_here, split.coeff_ideal, split.yfree_ideal,
                step.witness, pool,
            )
            entry["g0_tag"] = step.g0_tag
            entry["g0_detail"] = step.g0_detail
            entry["yfree_contracted_gb"] = pool.gb_of(split.contracted_yfree())
            node = node.coeff_branch
        steps.append(entry)
    assert node.case != "decompose"
    assert tuple(chain.terminal.context) == node.context
    return {
        "variant": chain.variant,
        "unmixed_mode": unmixed_mode,
        "full_context": list(chain.full_context),
        "conditional": chain.conditional,
        "tree": node_payload(chain.certificate, pool),
        "steps": steps,
        "terminal": {
            "context": list(chain.terminal.context),
            "case": chain.terminal.case,
            "gens": encode_polys(chain.terminal.gens),
            "lifted_gens": encode_polys(chain.terminal.lifted_gens),
            "pinned": list(chain.terminal.pinned),
        },
    }


# ---------------------------------------------------------------------------
# biliaison witnesses and chains (replay side)


def _replay_witness(rp: Replay, payload: dict, ctx: VarContext, field: Field,
                    ideal_gens, coeff_gens, yfree_gens, pairs,
                    var: str) -> None:
    """Verify every witness obligation from records and arithmetic.

    `pairs` are the (q, r) pairs of basis elements y*q + r from the node's
    already-verified decomposition; the recorded pairs must match them.
    """
    if payload["shed_var"] != var:
        rp.fail("witness sheds a different variable than its decomposition")
    ypoly = Polynomial.variable(ctx, field, var)
    rec_pairs = tuple(
        (decode_poly(ctx, field, q), decode_poly(ctx, field, r))
        for q, r in payload["pairs"]
    )
    if rec_pairs != tuple(pairs):
        rp.fail("witness pairs do not come from the decomposition basis")
    if not rec_pairs:
        rp.fail("a witness needs at least one basis pair in the variable")

    scalars = [decode_coeff(field, s) for s in payload["scalars"]]
    if len(scalars) != len(rec_pairs):
        rp.fail("witness scalar count mismatch")
    u = Polynomial.zero(ctx, field)
    v = Polynomial.zero(ctx, field)
    for a, (q, r) in zip(scalars, rec_pairs):
        if field.is_zero(a):
            continue
        ap = Polynomial.const(ctx, field, a)
        u = u + ap * q
        v = v + ap * (ypoly * q + r)
    if u != decode_poly(ctx, field, payload["u"]):
        rp.fail("recorded u is not the scalar combination of the pairs")
    if v != decode_poly(ctx, field, payload["v"]):
        rp.fail("recorded v is not the scalar combination of the pairs")
    if u.is_zero() or v.is_zero():
        rp.fail("witness elements must be nonzero")

    checks = {name: ok for name, ok, _ in payload["checks"]}
    required = {"yfree_inside_intersection", "u_nonzerodivisor",
                "v_nonzerodivisor", "module_identity", "degree_shift",
                "heights", "not_irrelevant"}
    if set(checks) != required:
        rp.fail("witness check list is incomplete")

    # non-zero-divisors: (N : u) = N and (N : v) = N
    cu = rp.derived(payload["colon_u"], "colon", ctx, field,
                    base=yfree_gens, divisor=u)
    rp.equality(payload["colon_u_equality"], ctx, field, cu["result"],
                yfree_gens, expect=True)
    cv = rp.derived(payload["colon_v"], "colon", ctx, field,
                    base=yfree_gens, divisor=v)
    rp.equality(payload["colon_v_equality"], ctx, field, cv["result"],
                yfree_gens, expect=True)
    if checks["u_nonzerodivisor"] is not True or \
            checks["v_nonzerodivisor"] is not True:
        rp.fail("non-zero-divisor checks must be recorded as passing")

    # module identity: q*v - (y*q + r)*u in N for every pair
    identities = tuple(
        q * v - (ypoly * q + r) * u for q, r in rec_pairs
    )
    rp.members(payload["module_members"], ctx, field, yfree_gens, identities)
    if checks["module_identity"] is not True:
        rp.fail("module identity must be recorded as passing")

    # containments: N inside I and inside C
    nz = tuple(g for g in yfree_gens if not g.is_zero())
    rp.members(payload["containment_ideal"], ctx, field, ideal_gens, nz)
    rp.members(payload["containment_coeff"], ctx, field, coeff_gens, nz)
    if checks["yfree_inside_intersection"] is not True:
        rp.fail("containment check must be recorded as passing")

    # degree bookkeeping
    homog = (
        is_homogeneous_ideal([g for g in ideal_gens if not g.is_zero()])
        and is_homogeneous_ideal([g for g in coeff_gens if not g.is_zero()])
        and is_homogeneous_ideal(nz)
        and u.is_homogeneous() and v.is_homogeneous()
    )
    if homog:
        if v.total_degree() != u.total_degree() + 1:
            rp.fail("homogeneous witness without the unit degree shift")
        if checks["degree_shift"] is not True:
            rp.fail("degree shift must be recorded as passing")
        if int(payload["degree_shift"]) != 1:
            rp.fail("recorded degree shift is not one")
    else:
        if checks["degree_shift"] is not None:
            rp.fail("inhomogeneous witness cannot record a degree verdict")

    # heights: ht C = ht I = ht N + 1, off the three verified bases
    irec = rp.gb_for(payload["ideal_gb"], ctx, field, ideal_gens,
                     natural_order(ctx))
    crec = rp.gb_for(payload["coeff_gb"], ctx, field, coeff_gens,
                     natural_order(ctx))
    nrec = rp.gb_for(payload["yfree_gb"], ctx, field, yfree_gens,
                     natural_order(ctx))
    ht_i, ht_c, ht_n = (height_from_record(r) for r in (irec, crec, nrec))
    if not (ht_c == ht_i == ht_n + 1):
        rp.fail(f"height pattern failed: ht C = {ht_c}, ht I = {ht_i}, "
                f"ht N = {ht_n}")
    if checks["heights"] is not True:
        rp.fail("height check must be recorded as passing")

    # dimension-zero warning bookkeeping
    dim_i = dim_from_record(irec)
    if dim_i <= 0:
        if checks["not_irrelevant"] is not None or not payload["warnings"]:
            rp.fail("dimension-zero witness must carry the warning")
    else:
        if checks["not_irrelevant"] is not True:
            rp.fail("positive-dimension witness recorded as irrelevant")


def _split_pairs(rp: Replay, nodep: dict, ctx: VarContext,
                 field: Field) -> tuple:
    return tuple(
        (decode_poly(ctx, field, t[1]), decode_poly(ctx, field, t[2]))
        for t in nodep["split"]["triples"] if t[0] == 1
    )


def _replay_chain(rp: Replay, payload: dict, ctx: VarContext, field: Field,
                  gens) -> None:
    variant = payload["variant"]
    if variant not in ("full", "weak"):
        rp.fail(f"chains carry full or weak certificates, not {variant!r}")
    if tuple(payload["full_context"]) != ctx.names:
        rp.fail("chain context mismatch")
    if not is_homogeneous_ideal([g for g in gens if not g.is_zero()]):
        rp.fail("chains need homogeneous input")
    conditional = _replay_node(rp, payload["tree"], ctx, field, gens, variant)

    nodep = payload["tree"]
    cur_ctx, cur_gens = ctx, tuple(gens)
    pinned: tuple = ()
    for entry in payload["steps"]:
        if nodep["case"] != "decompose":
            rp.fail("chain walked past a terminal node")
        if tuple(entry["context"]) != cur_ctx.names:
            rp.fail("chain step context mismatch")
        var = entry["shed_var"]
        if var != nodep["shed_var"]:
            rp.fail("chain step sheds a different variable than its node")
        basis = decode_polys(cur_ctx, field, nodep["basis"])
        if decode_polys(cur_ctx, field, entry["ideal_gens"]) != basis:
            rp.fail("chain step ideal differs from its node's basis")
        if tuple(entry["pinned"]) != pinned:
            rp.fail("chain step pinned-variable bookkeeping mismatch")
        if decode_polys(ctx, field, entry["lifted_ideal_gens"]) != \
                _lift(basis, ctx, field, pinned):
            rp.fail("lifted ideal generators mismatch")

        kind = entry["kind"]
        degen = nodep["degeneracy"]["kind"]
        yfree_gens = decode_polys(cur_ctx, field,
                                  nodep["split"]["yfree_gens"])
        coeff_gens = decode_polys(cur_ctx, field,
                                  nodep["split"]["coeff_gens"])
        ypoly = Polynomial.variable(cur_ctx, field, var)
        if kind == "unit-rewrite":
            if degen != DEGEN_UNIT:
                rp.fail("unit rewrite at a step that is not unit-degenerate")
            rp.equality(entry["rewrite_equality"], cur_ctx, field, basis,
                        yfree_gens + (ypoly,), expect=True)
            next_nodep = nodep.get("yfree_branch")
            next_pinned = pinned + (var,)
        elif kind == "equal-radicals-rewrite":
            if degen != DEGEN_RADICALS:
                rp.fail("radical rewrite at a step without equal radicals")
            rp.equality(entry["rewrite_equality"], cur_ctx, field, basis,
                        yfree_gens, expect=True)
            next_nodep = nodep.get("yfree_branch")
            next_pinned = pinned
        elif kind == "biliaison":
            if degen != NONDEGENERATE:
                rp.fail("biliaison step at a degenerate node")
            pairs = _split_pairs(rp, nodep, cur_ctx, field)
            _replay_witness(rp, entry["witness"], cur_ctx, field,
                            basis, coeff_gens, yfree_gens, pairs, var)
            sub, contracted = _contract(cur_ctx, var, yfree_gens)
            crec = rp.gb_for(entry["yfree_contracted_gb"], sub, field,
                             contracted, natural_order(sub))
            tag = entry["g0_tag"]
            cbasis = crec["basis"]
            prime_by_shape = (
                all(b.is_single_variable() for b in cbasis)
                or registered_prime_quadric(cbasis)
            )
            if tag == EXACT:
                if not prime_by_shape:
                    rp.fail("exact generic-Gorenstein tag without a "
                            "registered prime shape")
            elif tag == ASSUMED:
                if prime_by_shape:
                    rp.fail("assumed generic-Gorenstein tag where the shape "
                            "is registered prime")
                conditional = True
            else:
                rp.fail(f"unknown generic-Gorenstein tag {tag!r}")
            next_nodep = nodep.get("coeff_branch")
            next_pinned = pinned
        else:
            rp.fail(f"unknown chain step kind {kind!r}")

        if next_nodep is None:
            rp.fail("chain step continues into a missing branch")
        sub = cur_ctx.without(var)
        next_gens = decode_polys(sub, field, next_nodep["basis"])
        if decode_polys(sub, field, entry["next_gens"]) != next_gens:
            rp.fail("chain step target differs from the branch basis")
        if decode_polys(ctx, field, entry["lifted_next_gens"]) != \
                _lift(next_gens, ctx, field, next_pinned):
            rp.fail("lifted target generators mismatch")
        nodep, cur_ctx, cur_gens = next_nodep, sub, next_gens
        pinned = next_pinned

    if nodep["case"] == "decompose":
        rp.fail("chain stops before the tree's terminal node")
    term = payload["terminal"]
    if tuple(term["context"]) != cur_ctx.names:
        rp.fail("terminal context mismatch")
    tbasis = decode_polys(cur_ctx, field, nodep["basis"])
    if decode_polys(cur_ctx, field, term["gens"]) != tbasis:
        rp.fail("terminal generators differ from the terminal node basis")
    want_case = "zero" if not tbasis else nodep["case"]
    if term["case"] != want_case:
        rp.fail("terminal case mismatch")
    if tuple(term["pinned"]) != pinned:
        rp.fail("terminal pinned-variable bookkeeping mismatch")
    if decode_polys(ctx, field, term["lifted_gens"]) != \
            _lift(tbasis, ctx, field, pinned):
        rp.fail("lifted terminal generators mismatch")
    if conditional != bool(payload["conditional"]):
        rp.fail("recorded chain conditionality disagrees with the evidence")


# ---------------------------------------------------------------------------
# basis-shape certificates (writer side)


def _shape_split(ctx: VarContext, field: Field, gens, j: int):
    """Split nonzero generators at variable index j into (q, r) pairs and
    y-free elements, mirroring the certification pass; None when some
    generator has degree > 1 in the variable."""
    ypoly = Polynomial.monomial(
        ctx, field, tuple(1 if i == j else 0 for i in range(len(ctx)))
    )
    pairs = []
    yfree = []
    for g in gens:
        if g.is_zero():
            continue
        ydeg = max(e[j] for e, _ in g.terms)
        if ydeg > 1:
            return None
        if ydeg == 0:
            yfree.append(g)
            continue
        top = {tuple(x if i != j else 0 for i, x in enumerate(e)): c
               for e, c in g.terms if e[j] == 1}
        q = Polynomial.from_dict(ctx, field, top)
        pairs.append((q, g - ypoly * q))
    return tuple(pairs), tuple(yfree)


def _pair_minors(pairs) -> tuple:
    out = []
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            qa, ra = pairs[a]
            qb, rb = pairs[b]
            out.append(qa * rb - qb * ra)
    return tuple(out)


def _lm_sets_equal(left_exps, right_exps) -> bool:
    """Whether two monomial generating sets span the same monomial ideal."""
    return (
        all(any(exp_divides(b, a) for b in right_exps) for a in left_exps)
        and all(any(exp_divides(a, b) for a in left_exps) for b in right_exps)
    )


def shape_payload(cert: GroebnerShapeCertificate, unmixed_mode: str,
                  pool: RecordPool) -> dict:
    """Serialize a successful basis-shape certification.

    The saturation (N : I^inf) = N is recorded as its computation ran:
    one saturation per nonzero generator, folded by pairwise intersection.
    """
    first = next(g for g in cert.gens if not g.is_zero())
    ctx, fld = first.ctx, first.field
    order = MonomialOrder(
        ctx, tuple(ctx.index(n) for n in cert.order_names)
    )
    coeff_ideal = Ideal.of(ctx, fld, cert.coeff_gens)
    yfree_ideal = Ideal.of(ctx, fld, cert.yfree_gens)
    ideal = Ideal.of(ctx, fld, cert.gens)

    sat_refs = []
    parts = []
    for g in ideal.nonzero_gens():
        d = saturate_poly_full(yfree_ideal, g, track=True)
        sat_refs.append(pool.derived_saturate(d, yfree_ideal))
        parts.append(d.ideal)
    fold_refs = []
    cur = parts[0]
    for nxt in parts[1:]:
        d = intersect_full(cur, nxt, track=True)
        fold_refs.append(pool.derived_intersect(d, cur, nxt))
        cur = d.ideal

    recs = _record_map(cert.records)
    out = {
        "shed_var": cert.shed_var,
        "order": list(cert.order_names),
        "checks": [[n, ok, detail] for n, ok, detail in cert.checks],
        "unmixed_mode": unmixed_mode,
        "conditional": cert.conditional,
        "coeff_gb": pool.gb_of(coeff_ideal, order),
        "yfree_gb": pool.gb_of(yfree_ideal, order),
        "saturations": sat_refs,
        "saturation_fold": fold_refs,
        "saturation_equality": pool.equality(cur, yfree_ideal),
        "unmixed": unmixed_payload(cert.unmixed_evidence, yfree_ideal, pool),
        "cross_check_gb": pool.gb(recs["cross_check_gb"]),
    }
    minors = _pair_minors(cert.pairs)
    if minors:
        out["minor_members"] = pool.members(yfree_ideal, minors)
    return out


_SHAPE_CHECKS = (
    "leading-term-structure", "coeff-groebner", "yfree-groebner",
    "height-gap", "ideal-avoids-yfree-primes", "yfree-unmixed",
    "minors-inside-yfree", "initial-ideal",
)


def _replay_shape(rp: Replay, payload: dict, ctx: VarContext, field: Field,
                  gens) -> None:
    """Re-verify every hypothesis of a basis-shape certification."""
    var = payload["shed_var"]
    names_desc = tuple(payload["order"])
    if tuple(sorted(names_desc)) != tuple(sorted(ctx.names)):
        rp.fail("order names do not enumerate the ring variables")
    if names_desc[0] != var:
        rp.fail("the shape order must have the split variable greatest")
    order = _oc_order(ctx, names_desc)
    j = ctx.index(var)
    nz = tuple(g for g in gens if not g.is_zero())
    if not nz:
        rp.fail("nothing to certify: no nonzero generators")

    split = _shape_split(ctx, field, gens, j)
    if split is None:
        rp.fail("a generator has degree above one in the split variable")
    pairs, yfree = split
    ypoly = Polynomial.variable(ctx, field, var)
    for q, r in pairs:
        e_g, _ = (ypoly * q + r).leading_data(order)
        e_q, _ = q.leading_data(order)
        expected = tuple(x + (1 if i == j else 0) for i, x in enumerate(e_q))
        if e_g != expected:
            rp.fail("a pair's leading term is not the variable times its "
                    "coefficient's leading term")

    coeff_gens = tuple(q for q, _ in pairs) + yfree
    crec = rp.gb_for(payload["coeff_gb"], ctx, field, coeff_gens, order)
    if not _lm_sets_equal(
        [g.leading_data(order)[0] for g in coeff_gens],
        [b.leading_data(order)[0] for b in crec["basis"]],
    ):
        rp.fail("coefficient generators do not generate their own "
                "initial ideal")
    nrec = rp.gb_for(payload["yfree_gb"], ctx, field, yfree, order)
    if not _lm_sets_equal(
        [g.leading_data(order)[0] for g in yfree],
        [b.leading_data(order)[0] for b in nrec["basis"]],
    ):
        rp.fail("y-free generators do not generate their own initial ideal")

    ht_c, ht_n = height_from_record(crec), height_from_record(nrec)
    if not ht_c > ht_n:
        rp.fail(f"height gap failed: ht(coeff) = {ht_c} is not above "
                f"ht(yfree) = {ht_n}")

    sat_refs = payload["saturations"]
    if len(sat_refs) != len(nz):
        rp.fail("the saturation chain must cover every nonzero generator")
    parts = []
    for ref, g in zip(sat_refs, nz):
        hit = rp.derived(ref, "saturate", ctx, field, base=yfree, divisor=g)
        parts.append(hit["result"])
    fold_refs = payload["saturation_fold"]
    if len(fold_refs) != len(parts) - 1:
        rp.fail("the saturation fold is incomplete")
    cur = parts[0]
    for ref, nxt in zip(fold_refs, parts[1:]):
        hit = rp.derived(ref, "intersect", ctx, field, left=cur, right=nxt)
        cur = hit["result"]
    rp.equality(payload["saturation_equality"], ctx, field, cur, yfree,
                expect=True)

    if payload["unmixed"].get("ok") is False:
        rp.fail("a certified shape cannot cite mixed y-free evidence")
    conditional = _replay_unmixed(rp, payload["unmixed"], ctx, field, yfree)

    minors = _pair_minors(pairs)
    if minors:
        if "minor_members" not in payload:
            rp.fail("the pair minors' membership record is missing")
        rp.members(payload["minor_members"], ctx, field, yfree, minors)
    elif "minor_members" in payload:
        rp.fail("membership record for minors that do not exist")

    grec = rp.gb_for(payload["cross_check_gb"], ctx, field, gens, order)
    cert_exps = [
        tuple(x + (1 if i == j else 0)
              for i, x in enumerate(q.leading_data(order)[0]))
        for q, _ in pairs
    ] + [h.leading_data(order)[0] for h in yfree]
    direct_exps = [b.leading_data(order)[0] for b in grec["basis"]]
    if not _lm_sets_equal(cert_exps, direct_exps):
        rp.fail("the certified initial ideal does not match the direct basis")

    rows = [(name, ok) for name, ok, _ in payload["checks"]]
    if tuple(n for n, _ in rows) != _SHAPE_CHECKS:
        rp.fail("shape-certificate check list is incomplete")
    for name, ok in rows:
        want = (None if conditional else True) if name == "yfree-unmixed" \
            else True
        if ok is not want:
            rp.fail(f"shape check {name!r} must be recorded as "
                    f"{'open' if want is None else 'passing'}")
    if bool(payload["conditional"]) != conditional:
        rp.fail("recorded shape conditionality disagrees with the evidence")


# ---------------------------------------------------------------------------
# lex-order sweeps


def sweep_payload(ideal: Ideal, rows, pool: RecordPool) -> dict:
    """Serialize a sweep over every lex order.

    rows: (order_names, result) pairs covering all permutations, where
    result is an OrderCompatibleResult, or None for an order whose initial
    ideal the sweep found non-squarefree and rejected without the full
    recursion.
    """
    out_rows = []
    any_dec = False
    conditional = False
    for names_desc, res in rows:
        order = _oc_order(ideal.ctx, names_desc)
        if res is None:
            out_rows.append({
                "order": list(names_desc),
                "initial_squarefree": False,
                "order_gb": pool.gb_of(ideal, order),
            })
            continue
        out_rows.append({
            "order": list(names_desc),
            "initial_squarefree": res.initial_is_squarefree,
            "check": order_check_payload(ideal, res, pool),
        })
        if res.decomposable:
            any_dec = True
            conditional = conditional or res.is_conditional()
    return {
        "rows": out_rows,
        "any_decomposable": any_dec,
        "conditional": conditional,
    }


def _replay_sweep(rp: Replay, payload: dict, ctx: VarContext, field: Field,
                  gens) -> None:
    rows = payload["rows"]
    seen = sorted(tuple(r["order"]) for r in rows)
    if seen != sorted(permutations(ctx.names)):
        rp.fail("the sweep does not cover every lex order exactly once")
    any_dec = False
    conditional = False
    for row in rows:
        names_desc = tuple(row["order"])
        order = _oc_order(ctx, names_desc)
        if "check" in row:
            check = row["check"]
            if tuple(check["order"]) != names_desc:
                rp.fail("a sweep row cites a check under a different order")
            if bool(row["initial_squarefree"]) != \
                    bool(check["initial_squarefree"]):
                rp.fail("a sweep row's squarefree flag contradicts its check")
            _replay_order_check(rp, check, ctx, field, gens)
            if check["decomposable"]:
                any_dec = True
                if check["direct"]["conditional"]:
                    conditional = True
        else:
            if row["initial_squarefree"]:
                rp.fail("a sweep row claiming a squarefree initial ideal "
                        "must carry the full check")
            rec = rp.gb_for(row["order_gb"], ctx, field, gens, order)
            lms = [b.leading_data(order)[0] for b in rec["basis"]]
            if _squarefree_exps(lms):
                rp.fail("a sweep row claims a non-squarefree initial ideal "
                        "but the recorded basis is squarefree")
    if any_dec != bool(payload["any_decomposable"]):
        rp.fail("recorded sweep verdict disagrees with its rows")
    if conditional != bool(payload["conditional"]):
        rp.fail("recorded sweep conditionality disagrees with its rows")


# ---------------------------------------------------------------------------
# simplicial documents: vertex decomposition and Stanley-Reisner transfer


def _facet_lists(delta: SimplicialComplex) -> list:
    index = {v: i for i, v in enumerate(delta.vertices)}
    return [sorted(f, key=index.get) for f in delta.facets]


def vd_payload(delta: SimplicialComplex, mode: str, res: VDResult,
               vertex_order=None) -> dict:
    out = {
        "mode": mode,
        "vertex_order": list(vertex_order) if vertex_order else None,
        "decomposable": res.decomposable,
    }
    if res.decomposable:
        out["tree"] = res.certificate.to_dict()
    else:
        out["refutation"] = res.refutation.to_dict()
    return out


def _replay_vd(rp: Replay, payload: dict, doc: dict) -> None:
    """Re-run the decomposition outright (pure combinatorics) and demand
    the identical verdict and certificate; the library is deterministic."""
    vertices = tuple(doc["variables"])
    delta = SimplicialComplex.from_facets(vertices, doc["inputs"]["facets"])
    mode = payload["mode"]
    if mode not in ("pure", "nonpure"):
        rp.fail(f"unknown decomposition mode {mode!r}")
    vorder = payload.get("vertex_order")
    if vorder is not None:
        vorder = tuple(vorder)
        if tuple(sorted(vorder)) != tuple(sorted(vertices)):
            rp.fail("vertex order does not enumerate the vertices")
    res = vertex_decomposable(delta, mode, vertex_order=vorder)
    rp.checks += 1
    if res.decomposable != bool(payload["decomposable"]):
        rp.fail("recorded decomposability verdict is wrong")
    if res.decomposable:
        if payload.get("tree") != res.certificate.to_dict():
            rp.fail("recorded decomposition tree does not match the "
                    "recomputation")
    else:
        if payload.get("refutation") != res.refutation.to_dict():
            rp.fail("recorded refutation does not match the recomputation")


def sr_ideal_payload(ideal: Ideal) -> dict:
    return {"gens": encode_polys(ideal.gens)}


def _replay_sr_ideal(rp: Replay, payload: dict, doc: dict) -> None:
    vertices = tuple(doc["variables"])
    field = field_from_spec(doc["field"])
    delta = SimplicialComplex.from_facets(vertices, doc["inputs"]["facets"])
    ideal = stanley_reisner(delta, field)
    rp.checks += 1
    ctx = VarContext(vertices)
    if decode_polys(ctx, field, payload["gens"]) != ideal.gens:
        rp.fail("recorded generators are not the non-face ideal of the "
                "recorded complex")


def sr_complex_payload(delta: SimplicialComplex) -> dict:
    return {"facets": _facet_lists(delta)}


def _replay_sr_complex(rp: Replay, payload: dict, doc: dict) -> None:
    ctx, field, gens = _doc_ring(doc)
    delta = complex_of(Ideal.of(ctx, field, gens))
    rp.checks += 1
    want = [list(f) for f in _facet_lists(delta)]
    if [list(f) for f in payload["facets"]] != want:
        rp.fail("recorded facets are not the complex of the input ideal")


# ---------------------------------------------------------------------------
# plain basis documents


def gb_payload(ideal: Ideal, order: MonomialOrder, pool: RecordPool) -> dict:
    return {
        "order": [ideal.ctx.names[i] for i in order.perm],
        "gb": pool.gb_of(ideal, order),
        "basis": encode_polys(ideal.groebner(order).basis),
    }


def _replay_gb(rp: Replay, payload: dict, ctx: VarContext, field: Field,
               gens) -> None:
    names_desc = tuple(payload["order"])
    if tuple(sorted(names_desc)) != tuple(sorted(ctx.names)):
        rp.fail("order names do not enumerate the ring variables")
    order = _oc_order(ctx, names_desc)
    rec = rp.gb_for(payload["gb"], ctx, field, gens, order)
    if decode_polys(ctx, field, payload["basis"]) != rec["basis"]:
        rp.fail("the displayed basis differs from the verified record")


# ---------------------------------------------------------------------------
# documents and replay dispatch


def _doc_ring(doc: dict):
    field = field_from_spec(doc["field"])
    ctx = VarContext(tuple(doc["variables"]))
    gens = decode_polys(ctx, field, doc["inputs"]["gens"])
    return ctx, field, gens


def certificate_for_gvd(ideal: Ideal, result, *, unmixed_mode: str,
                        command: str = "", seed: Optional[int] = None) -> dict:
    pool = RecordPool()
    payload = gvd_result_payload(result, ideal, pool, unmixed_mode)
    return make_document(
        "gvd", payload, pool, field=ideal.field, variables=ideal.ctx.names,
        input_gens=ideal.gens, command=command, seed=seed,
    )


def certificate_for_order_check(ideal: Ideal, res: OrderCompatibleResult, *,
                                command: str = "",
                                seed: Optional[int] = None) -> dict:
    pool = RecordPool()
    payload = order_check_payload(ideal, res, pool)
    return make_document(
        "gvd-order-compatible", payload, pool, field=ideal.field,
        variables=ideal.ctx.names, input_gens=ideal.gens, command=command,
        seed=seed,
    )


def certificate_for_chain(ideal: Ideal, chain: GlicciChain, *,
                          unmixed_mode: str, command: str = "",
                          seed: Optional[int] = None) -> dict:
    pool = RecordPool()
    payload = chain_payload(chain, ideal.field, pool, unmixed_mode)
    return make_document(
        "glicci-chain", payload, pool, field=ideal.field,
        variables=ideal.ctx.names, input_gens=ideal.gens, command=command,
        seed=seed,
    )


def certificate_for_witness(ideal: Ideal, witness: BiliaisonWitness, *,
                            command: str = "",
                            seed: Optional[int] = None) -> dict:
    from .gvd import geometric_split

    pool = RecordPool()
    split = geometric_split(ideal, witness.shed_var)
    assert split.coeff_gens == witness.coeff_gens
    assert split.yfree_gens == witness.yfree_gens
    payload = {
        "split": basis_split_payload(split, pool),
        "witness": witness_payload(
            ideal, split.coeff_ideal, split.yfree_ideal, witness, pool
        ),
    }
    return make_document(
        "biliaison-witness", payload, pool, field=ideal.field,
        variables=ideal.ctx.names, input_gens=ideal.gens, command=command,
        seed=seed,
    )


def certificate_for_shape(cert: GroebnerShapeCertificate, *,
                          unmixed_mode: str, command: str = "",
                          seed: Optional[int] = None) -> dict:
    first = next(g for g in cert.gens if not g.is_zero())
    pool = RecordPool()
    payload = shape_payload(cert, unmixed_mode, pool)
    return make_document(
        "gb-certify", payload, pool, field=first.field,
        variables=first.ctx.names, input_gens=cert.gens, command=command,
        seed=seed,
    )


def certificate_for_sweep(ideal: Ideal, rows, *, command: str = "",
                          seed: Optional[int] = None) -> dict:
    pool = RecordPool()
    payload = sweep_payload(ideal, rows, pool)
    return make_document(
        "gvd-order-sweep", payload, pool, field=ideal.field,
        variables=ideal.ctx.names, input_gens=ideal.gens, command=command,
        seed=seed,
    )


def certificate_for_vd(delta: SimplicialComplex, mode: str, res: VDResult, *,
                       vertex_order=None, field: Optional[Field] = None,
                       command: str = "", seed: Optional[int] = None) -> dict:
    from .fields import QQ

    pool = RecordPool()
    payload = vd_payload(delta, mode, res, vertex_order)
    return make_document(
        "vd", payload, pool, field=field or QQ, variables=delta.vertices,
        inputs_extra={"facets": _facet_lists(delta)}, command=command,
        seed=seed,
    )


def certificate_for_sr_ideal(delta: SimplicialComplex, ideal: Ideal, *,
                             command: str = "",
                             seed: Optional[int] = None) -> dict:
    pool = RecordPool()
    return make_document(
        "sr-ideal", sr_ideal_payload(ideal), pool, field=ideal.field,
        variables=delta.vertices,
        inputs_extra={"facets": _facet_lists(delta)}, command=command,
        seed=seed,
    )


def certificate_for_sr_complex(ideal: Ideal, delta: SimplicialComplex, *,
                               command: str = "",
                               seed: Optional[int] = None) -> dict:
    pool = RecordPool()
    return make_document(
        "sr-complex", sr_complex_payload(delta), pool, field=ideal.field,
        variables=ideal.ctx.names, input_gens=ideal.gens, command=command,
        seed=seed,
    )


def certificate_for_gb(ideal: Ideal, order: Optional[MonomialOrder] = None, *,
                       command: str = "",
                       seed: Optional[int] = None) -> dict:
    pool = RecordPool()
    payload = gb_payload(ideal, order or natural_order(ideal.ctx), pool)
    return make_document(
        "gb-compute", payload, pool, field=ideal.field,
        variables=ideal.ctx.names, input_gens=ideal.gens, command=command,
        seed=seed,
    )


def _replay_dispatch(rp: Replay, doc: dict) -> None:
    kind = doc["kind"]
    if kind == "gvd":
        ctx, field, gens = _doc_ring(doc)
        _replay_gvd_result(rp, doc["result"], ctx, field, gens)
    elif kind == "gvd-order-compatible":
        ctx, field, gens = _doc_ring(doc)
        _replay_order_check(rp, doc["result"], ctx, field, gens)
    elif kind == "gvd-order-sweep":
        ctx, field, gens = _doc_ring(doc)
        _replay_sweep(rp, doc["result"], ctx, field, gens)
    elif kind == "glicci-chain":
        ctx, field, gens = _doc_ring(doc)
        _replay_chain(rp, doc["result"], ctx, field, gens)
    elif kind == "biliaison-witness":
        ctx, field, gens = _doc_ring(doc)
        split = _replay_basis_split(rp, doc["result"]["split"], ctx, field,
                                    gens)
        _replay_witness(rp, doc["result"]["witness"], ctx, field, gens,
                        split["coeff_gens"], split["yfree_gens"],
                        split["pairs"], split["var"])
    elif kind == "gb-certify":
        ctx, field, gens = _doc_ring(doc)
        _replay_shape(rp, doc["result"], ctx, field, gens)
    elif kind == "gb-compute":
        ctx, field, gens = _doc_ring(doc)
        _replay_gb(rp, doc["result"], ctx, field, gens)
    elif kind == "vd":
        _replay_vd(rp, doc["result"], doc)
    elif kind == "sr-ideal":
        _replay_sr_ideal(rp, doc["result"], doc)
    elif kind == "sr-complex":
        _replay_sr_complex(rp, doc["result"], doc)
    else:
        rp.fail(f"unknown certificate kind {kind!r}")


def replay_certificate(doc: dict) -> dict:
    """Re-verify every claim in a certificate document.

    Replays are pure: polynomial arithmetic, divisions and combinatorics
    only.  The reduced-basis request counter is asserted flat across the
    replay.  Raises ReplayMismatch on the first claim that does not hold;
    on success returns a small summary.
    """
    before = gb_request_count()
    rp = Replay(doc)
    try:
        _replay_dispatch(rp, doc)
    except ReplayMismatch:
        raise
    except (KeyError, IndexError, TypeError, ValueError, ArithmeticError,
            AlgebraError) as exc:
        raise ReplayMismatch(
            f"malformed certificate document: {exc!r}"
        ) from exc
    after = gb_request_count()
    if after != before:
        raise ReplayMismatch(
            f"replay made {after - before} reduced-basis requests; replays "
            "must make none"
        )
    return {"kind": doc["kind"], "checks": rp.checks, "ok": True}


def replay_file(path: str) -> dict:
    return replay_certificate(read_certificate(path))
