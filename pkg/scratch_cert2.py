import copy
import json
import sys
sys.path.insert(0, "src")

from gvdcert.certificates import (
    certificate_for_gvd, certificate_for_order_check, dumps_certificate,
    replay_certificate,
)
from gvdcert.errors import ReplayMismatch
from gvdcert.fields import QQ
from gvdcert.groebner import Ideal, gb_request_count
from gvdcert.gvd import is_gvd, is_order_compatible_gvd
from gvdcert.poly import Polynomial, VarContext


def P(ctx, s_terms):
    d = {}
    for c, mono in s_terms:
        e = tuple(mono.get(n, 0) for n in ctx.names)
        d[e] = QQ.from_int(c)
    return Polynomial.from_dict(ctx, QQ, d)


def roundtrip(doc, label):
    blob = dumps_certificate(doc)
    doc2 = json.loads(blob)
    before = gb_request_count()
    summary = replay_certificate(doc2)
    after = gb_request_count()
    assert after == before
    print(f"{label}: replayed ok, {summary['checks']} checks, "
          f"{len(blob)//1024}KB, pool={len(doc['pool'])}")
    return doc2


def expect_fail(doc, mutate, label):
    bad = copy.deepcopy(doc)
    mutate(bad)
    try:
        replay_certificate(bad)
    except ReplayMismatch as e:
        print(f"  tamper[{label}] caught: {str(e)[:72]}")
        return
    raise SystemExit(f"tamper[{label}] was NOT caught")


# running example
ctx = VarContext(("x", "y", "z", "w", "r", "s"))
g1 = P(ctx, [(1, {"y": 1, "z": 1, "s": 1}), (-1, {"y": 1, "x": 2})])
g2 = P(ctx, [(1, {"y": 1, "w": 1, "r": 1})])
g3 = P(ctx, [(1, {"w": 1, "r": 1, "z": 2}), (1, {"w": 1, "r": 1, "z": 1, "x": 1}),
             (1, {"w": 2, "r": 2}), (1, {"w": 1, "r": 1, "s": 2})])
I = Ideal.of(ctx, QQ, [g1, g2, g3])

res = is_gvd(I, "full", "assume")
assert res.decomposable and res.is_conditional()
doc = certificate_for_gvd(I, res, unmixed_mode="assume", command="gvd check")
d = roundtrip(doc, "running example full/assume (conditional)")
expect_fail(d, lambda b: b["result"].__setitem__("conditional", False),
            "conditional flag")
expect_fail(d, lambda b: b["result"]["node"].__setitem__("shed_var", "z"),
            "shed var")


def clip_basis(b):
    ref = b["result"]["node"]["canonical_gb"]
    b["pool"][ref]["basis"] = b["pool"][ref]["basis"][:-1]


expect_fail(d, clip_basis, "root basis")

# weak variant with principal CM evidence
g3w = P(ctx, [(1, {"w": 1, "r": 1, "x": 2}), (1, {"w": 1, "r": 1, "s": 2}),
              (1, {"w": 1, "r": 1, "z": 2}), (1, {"w": 2, "r": 2})])
Iw = Ideal.of(ctx, QQ, [g1, g2, g3w])
resw = is_gvd(Iw, "weak", "assume")
assert resw.decomposable and resw.is_conditional()
docw = certificate_for_gvd(Iw, resw, unmixed_mode="assume")
dw = roundtrip(docw, "weak variant (nondegenerate + principal CM)")
expect_fail(dw, lambda b: b["result"]["node"]["yfree_evidence"].__setitem__(
    "ok", True), "assumed evidence upgraded")

# full refutation of the weak example (backtracks through every variable)
resf = is_gvd(Iw, "full", "assume")
assert not resf.decomposable
docf = certificate_for_gvd(Iw, resf, unmixed_mode="assume")
df = roundtrip(docf, "full refutation with backtracking")
expect_fail(df, lambda b: b["result"]["refutation"]["tried"].pop(),
            "dropped tried variable")
expect_fail(df, lambda b: b["result"].__setitem__("decomposable", True),
            "flipped verdict shape")

# leaves
ctx4 = VarContext(("x1", "x2", "x3", "x4"))
Ind = Ideal.of(ctx4, QQ, [Polynomial.variable(ctx4, QQ, "x2"),
                          Polynomial.variable(ctx4, QQ, "x4")])
rl = is_gvd(Ind, "full", "certify")
roundtrip(certificate_for_gvd(Ind, rl, unmixed_mode="certify"),
          "indeterminates leaf")

# monomial modes
ctx3 = VarContext(("x", "y", "z"))
E = Ideal.of(ctx3, QQ, [P(ctx3, [(1, {"x": 1, "z": 1})])])
rE = is_gvd(E, "full", "monomial")
assert rE.decomposable and not rE.is_conditional()
dE = roundtrip(certificate_for_gvd(E, rE, unmixed_mode="monomial"),
               "monomial path ideal (exact, unconditional)")

M = Ideal.of(ctx3, QQ, [P(ctx3, [(1, {"x": 1, "y": 1})]),
                        P(ctx3, [(1, {"x": 1, "z": 1})])])
rM = is_gvd(M, "full", "monomial")
assert not rM.decomposable
dM = roundtrip(certificate_for_gvd(M, rM, unmixed_mode="monomial"),
               "mixed monomial ideal refuted via associated primes")
expect_fail(dM, lambda b: b["result"]["refutation"]["unmixedness"].__setitem__(
    "ok", True), "unmixedness verdict flip")

ctxc = VarContext(("x", "y", "z", "w"))
C4 = Ideal.of(ctxc, QQ, [P(ctxc, [(1, {a: 1, b: 1})])
                         for a, b in (("x", "y"), ("y", "z"), ("z", "w"), ("w", "x"))])
rc4 = is_gvd(C4, "full", "monomial")
assert not rc4.decomposable
dc4 = roundtrip(certificate_for_gvd(C4, rc4, unmixed_mode="monomial"),
                "4-cycle edge ideal refutation")

# order-compatible: Hankel certify + running-example refutation
ctxh = VarContext(("x3", "x2", "x1", "x0"))
m1 = P(ctxh, [(1, {"x3": 1, "x1": 1}), (-1, {"x2": 2})])
m2 = P(ctxh, [(1, {"x3": 1, "x0": 1}), (-1, {"x2": 1, "x1": 1})])
m3 = P(ctxh, [(1, {"x2": 1, "x0": 1}), (-1, {"x1": 2})])
H = Ideal.of(ctxh, QQ, [m1, m2, m3])
oc = is_order_compatible_gvd(H)
assert oc.decomposable
doch = certificate_for_order_check(H, oc)
dh = roundtrip(doch, "order-compatible Hankel d=3")
expect_fail(dh, lambda b: b["result"].__setitem__("initial_squarefree", False),
            "squarefree flag")

occ = is_order_compatible_gvd(I)
assert not occ.decomposable
docc = certificate_for_order_check(I, occ)
roundtrip(docc, "order-compatible refutation (running example)")

print("ALL CHUNK-2 CERTIFICATE TESTS PASSED")
