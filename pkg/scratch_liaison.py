"""Smoke tests for liaison.py against hand-worked values."""

import sys

sys.path.insert(0, "/root/pkg/src")

from gvdcert.errors import (
    BadParameter,
    HypothesisFailed,
    NoGVDCertificate,
    NotHomogeneous,
)
from gvdcert.fields import QQ
from gvdcert.groebner import Ideal, ideal_equal
from gvdcert.gvd import clear_caches
from gvdcert.liaison import (
    BiliaisonWitness,
    ChainRefusal,
    build_witness,
    certify_groebner,
    glicci_chain,
    gvd_from_biliaison,
    verify_witness,
)
from gvdcert.poly import Polynomial, VarContext


def P(ctx, terms):
    out = Polynomial.zero(ctx, QQ)
    for coeff, mono in terms:
        e = [0] * len(ctx)
        for name, exp in mono.items():
            e[ctx.index(name)] = exp
        out = out + Polynomial.monomial(ctx, QQ, tuple(e), QQ.from_int(coeff))
    return out


# --- generic 2x3 minors -----------------------------------------------------
ctx6 = VarContext(("x11", "x12", "x13", "x21", "x22", "x23"))
m12 = P(ctx6, [(1, {"x11": 1, "x22": 1}), (-1, {"x12": 1, "x21": 1})])
m13 = P(ctx6, [(1, {"x11": 1, "x23": 1}), (-1, {"x13": 1, "x21": 1})])
m23 = P(ctx6, [(1, {"x12": 1, "x23": 1}), (-1, {"x13": 1, "x22": 1})])
I6 = Ideal.of(ctx6, QQ, (m12, m13, m23))

# 1. witness at x23: the first unit vector already works (u = x11)
w = build_witness(I6, "x23")
x11 = P(ctx6, [(1, {"x11": 1})])
assert w.ok, w.report.checks
assert w.attempts == 1
assert (w.u - x11).is_zero(), w.u
assert (w.v - m13).is_zero(), w.v
assert w.degree_shift == 1
ok, detail = w.report.check("degree_shift")
assert ok is True, detail
ok, detail = w.report.check("heights")
assert ok is True, detail
assert not w.report.warnings
print("witness on 2x3 minors at x23: PASS")

# 2. a hand-made bad witness (u inside the y-free ideal) fails cleanly
Cid = Ideal.of(ctx6, QQ, (P(ctx6, [(1, {"x11": 1})]), P(ctx6, [(1, {"x12": 1})])))
Nid = Ideal.of(ctx6, QQ, (m12,))
bad = BiliaisonWitness(
    "x23", w.scalars, w.pairs, m12, m13,
    w.coeff_gens, w.yfree_gens, 1, 0, 1, w.report,
)
rep = verify_witness(I6, Cid, Nid, bad)
assert not rep.ok
ok, _ = rep.check("u_nonzerodivisor")
assert ok is False
print("zero-divisor witness rejected: PASS")

# 3. degenerate inputs are rejected up front
ctx3 = VarContext(("x2", "x1", "x0"))
absent = Ideal.of(ctx3, QQ, (P(ctx3, [(1, {"x1": 1, "x0": 1})]),))
try:
    build_witness(absent, "x2")
    raise AssertionError("expected BadParameter")
except BadParameter as e:
    assert "equal-radicals" in str(e)
pure_var = Ideal.of(ctx3, QQ, (P(ctx3, [(1, {"x2": 1})]),))
try:
    build_witness(pure_var, "x2")
    raise AssertionError("expected BadParameter")
except BadParameter as e:
    assert "unit-coefficient-ideal" in str(e)
print("degenerate rejection: PASS")

# 4. basis-shape certification: generic 2x3 minors at x23
cert = certify_groebner((m13, m23, m12), "x23")
assert len(cert.pairs) == 2 and len(cert.yfree_gens) == 1
assert not cert.conditional
assert {n for n, ok, _ in cert.checks} >= {
    "leading-term-structure", "coeff-groebner", "yfree-groebner",
    "height-gap", "ideal-avoids-yfree-primes", "yfree-unmixed",
    "minors-inside-yfree", "initial-ideal",
}
assert all(ok for _, ok, _ in cert.checks)
print("certify_groebner on 2x3 minors: PASS")

# 5. certification of the twisted-cubic induction step (d = 3)
ctxh = VarContext(("x3", "x2", "x1", "x0"))
h1 = P(ctxh, [(1, {"x0": 1, "x2": 1}), (-1, {"x1": 2})])
h2 = P(ctxh, [(1, {"x0": 1, "x3": 1}), (-1, {"x1": 1, "x2": 1})])
h3 = P(ctxh, [(1, {"x1": 1, "x3": 1}), (-1, {"x2": 2})])
x0 = P(ctxh, [(1, {"x0": 1})])
x1 = P(ctxh, [(1, {"x1": 1})])
cert_h = certify_groebner(
    (h2, h3, h1), "x3",
    coeff_gens=(x0, x1), yfree_gens=(h1,),
)
assert not cert_h.conditional
assert all(ok for _, ok, _ in cert_h.checks)
print("certify_groebner on degree-3 rational normal curve: PASS")

# asserted-ideal mismatch is caught
try:
    certify_groebner((h2, h3, h1), "x3", coeff_gens=(x0,))
    raise AssertionError("expected HypothesisFailed")
except HypothesisFailed as e:
    assert e.tag == "asserted-coeff-mismatch", e.tag

# a y-squared generator is refused
ysq = P(ctxh, [(1, {"x3": 2}), (-1, {"x0": 1, "x2": 1})])
try:
    certify_groebner((ysq,), "x3")
    raise AssertionError("expected HypothesisFailed")
except HypothesisFailed as e:
    assert e.tag == "generator-y-degree", e.tag
print("certify_groebner failure tags: PASS")

# 6. chains
clear_caches()
chain0 = glicci_chain(Ideal.of(ctx6, QQ, (Cid.gens[0], Cid.gens[1])))
assert len(chain0) == 0
assert chain0.terminal.case == "indeterminates"
assert not chain0.conditional
print("length-0 chain on an ideal of indeterminates: PASS")

chain = glicci_chain(I6)
kinds = [s.kind for s in chain.steps]
assert "biliaison" in kinds, kinds
assert chain.terminal.case in ("indeterminates", "zero")
for s in chain.steps:
    if s.kind == "biliaison":
        assert s.witness is not None and s.witness.ok
# every biliaison step bottoms out in a registered-prime or constructed-prime
# y-free ideal here, so nothing is left assumed
assert not chain.conditional
assert all(s.g0_tag == "Exact" for s in chain.steps if s.kind == "biliaison")
print(f"chain on 2x3 minors: {len(chain)} steps {kinds}: PASS")

# inhomogeneous input is refused
bad_ideal = Ideal.of(ctx6, QQ, (m12 + x11,))
try:
    glicci_chain(bad_ideal)
    raise AssertionError("expected NotHomogeneous")
except NotHomogeneous:
    pass

# refuted input raises NoGVDCertificate
ctx4 = VarContext(("x", "y", "z", "w"))
cycle = Ideal.of(ctx4, QQ, (
    P(ctx4, [(1, {"x": 1, "y": 1})]),
    P(ctx4, [(1, {"y": 1, "z": 1})]),
    P(ctx4, [(1, {"z": 1, "w": 1})]),
    P(ctx4, [(1, {"w": 1, "x": 1})]),
))
try:
    glicci_chain(cycle)
    raise AssertionError("expected NoGVDCertificate")
except NoGVDCertificate:
    pass
print("chain refusals: PASS")

# a unit-rewrite step: I = <x2> + <x1*x0> is N + <y> with unit coefficient
mixed = Ideal.of(ctx3, QQ, (
    P(ctx3, [(1, {"x2": 1})]),
    P(ctx3, [(1, {"x1": 1, "x0": 1})]),
))
chain_u = glicci_chain(mixed)
assert not isinstance(chain_u, ChainRefusal)
assert chain_u.steps[0].kind == "unit-rewrite", [s.kind for s in chain_u.steps]
assert chain_u.steps[0].pinned == ()
assert "x2" in chain_u.steps[1].pinned or chain_u.terminal.pinned == ("x2",)
# the lifted ideal is unchanged across the rewrite
lift_before = Ideal.of(ctx3, QQ, chain_u.steps[0].lifted_ideal_gens)
lift_after = Ideal.of(ctx3, QQ, chain_u.steps[0].lifted_next_gens)
assert ideal_equal(lift_before, lift_after)
print(f"unit-rewrite chain: {[s.kind for s in chain_u.steps]}: PASS")

# 7. the reverse construction on the classical 2x3 example
x12 = P(ctx6, [(1, {"x12": 1})])
rec = gvd_from_biliaison(I6, Cid, Nid, m23, x12, "x23")
assert rec.shed_var == "x23"
assert rec.equality.holds
assert len(rec.correspondence) == 2
for c, pre in rec.correspondence:
    assert Nid.contains_poly(c * m23 - pre * x12)
# round-trip: the recovered split supports the same witness construction
w2 = build_witness(I6, "x23", split=rec.split)
assert w2.ok and (w2.u - x11).is_zero()
print("reverse construction round-trip: PASS")

# identity map is refused (f = g = 1)
one = Polynomial.const(ctx6, QQ, 1)
try:
    gvd_from_biliaison(I6, Cid, Nid, one, one, "x23")
    raise AssertionError("expected HypothesisFailed")
except HypothesisFailed as e:
    assert e.tag == "initial-form-mismatch", e.tag
print("identity-map refusal: PASS")

# 8. the augmented-matrix mutation: N's reduced basis involves the variable
ctx8 = VarContext(("x10", "x11", "x12", "x13", "x20", "x21", "x22", "x23"))
M12 = P(ctx8, [(1, {"x11": 1, "x22": 1}), (-1, {"x12": 1, "x21": 1})])
M13 = P(ctx8, [(1, {"x11": 1, "x23": 1}), (-1, {"x13": 1, "x21": 1})])
M23 = P(ctx8, [(1, {"x12": 1, "x23": 1}), (-1, {"x13": 1, "x22": 1})])
Mnew = P(ctx8, [(1, {"x10": 1, "x23": 1}), (-1, {"x13": 1, "x20": 1})])
I8 = Ideal.of(ctx8, QQ, (M12, M13, M23, Mnew))
C8 = Ideal.of(ctx8, QQ, (
    P(ctx8, [(1, {"x11": 1})]), P(ctx8, [(1, {"x12": 1})]), Mnew,
))
N8 = Ideal.of(ctx8, QQ, (M12, Mnew))
g8 = P(ctx8, [(1, {"x12": 1})])
try:
    gvd_from_biliaison(I8, C8, N8, M23, g8, "x23")
    raise AssertionError("expected HypothesisFailed")
except HypothesisFailed as e:
    assert e.tag == "N-GB-involves-y", e.tag
print("mutated data refusal (N basis involves the variable): PASS")

print("ALL LIAISON SMOKE TESTS PASSED")
