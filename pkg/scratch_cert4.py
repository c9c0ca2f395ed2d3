"""Smoke test for shape, sweep, vd, sr and gb documents (chunk 4)."""
import json
import time
from itertools import permutations

from gvdcert.certificates import (
    certificate_for_gb,
    certificate_for_shape,
    certificate_for_sr_complex,
    certificate_for_sr_ideal,
    certificate_for_sweep,
    certificate_for_vd,
    dumps_certificate,
    replay_certificate,
)
from gvdcert.corpus import hankel, minors
from gvdcert.errors import ReplayMismatch
from gvdcert.fields import QQ
from gvdcert.groebner import Ideal, gb_request_count
from gvdcert.gvd import clear_caches, is_order_compatible_gvd
from gvdcert.liaison import certify_groebner
from gvdcert.poly import MonomialOrder, Polynomial, VarContext, natural_order
from gvdcert.simplicial import (
    SimplicialComplex,
    complex_of,
    stanley_reisner,
    vertex_decomposable,
)


def P(ctx, terms):
    out = Polynomial.zero(ctx, QQ)
    for coeff, mono in terms:
        e = [0] * len(ctx)
        for name, exp in mono.items():
            e[ctx.index(name)] = exp
        out = out + Polynomial.monomial(ctx, QQ, tuple(e), QQ.from_int(coeff))
    return out


def roundtrip(doc, label):
    blob = dumps_certificate(doc)
    doc2 = json.loads(blob)
    before = gb_request_count()
    t0 = time.perf_counter()
    out = replay_certificate(doc2)
    dt = time.perf_counter() - t0
    after = gb_request_count()
    assert after == before, (
        f"{label}: replay made {after - before} basis requests"
    )
    assert out["ok"] is True
    print(f"{label}: {out['checks']} checks, {len(blob)} bytes, "
          f"{dt * 1000:.0f}ms replay: PASS")
    return doc2


def expect_mismatch(doc, mutate, label):
    bad = json.loads(dumps_certificate(doc))
    mutate(bad)
    try:
        replay_certificate(bad)
    except ReplayMismatch as e:
        print(f"  tamper caught ({label}): {e}")
        return
    raise AssertionError(f"tamper NOT caught: {label}")


def sweep_rows(ideal):
    """The sweep driver the CLI will use: light rows when not squarefree."""
    rows = []
    for perm in permutations(range(len(ideal.ctx))):
        order = MonomialOrder(ideal.ctx, perm)
        names = tuple(ideal.ctx.names[i] for i in perm)
        gb = ideal.groebner(order)
        squarefree = all(
            all(x <= 1 for x in e) for e in gb.leading_exponents()
        )
        if not squarefree:
            rows.append((names, None))
        else:
            rows.append((names, is_order_compatible_gvd(ideal, order)))
    return rows


# --- 1. shape certificate: 2x3 minors at x23 ---------------------------------
clear_caches()
I6 = minors(2, 2, 3).ideal
cert = certify_groebner(I6.gens, "x23")
assert not cert.conditional
doc_shape = certificate_for_shape(cert, unmixed_mode="certify",
                                  command="gb certify")
d1 = roundtrip(doc_shape, "shape certificate on 2x3 minors at x23")

# --- 2. shape certificate: hankel(3) at its greatest variable ----------------
clear_caches()
h = hankel(3)
top = h.order_names[0]
cert_h = certify_groebner(h.gens, top, order=h.order)
doc_shape_h = certificate_for_shape(cert_h, unmixed_mode="certify")
roundtrip(doc_shape_h, f"shape certificate on hankel(3) at {top} "
                       f"(conditional={cert_h.conditional})")

# --- 3. sweep, all orders refuted ---------------------------------------------
clear_caches()
ctx3 = VarContext(("x", "y", "z"))
nonsq = Ideal.of(ctx3, QQ, (
    P(ctx3, [(1, {"x": 2}), (1, {"y": 2})]),
    P(ctx3, [(1, {"x": 1, "z": 2})]),
))
rows = sweep_rows(nonsq)
assert all(res is None for _, res in rows)
doc_sweep1 = certificate_for_sweep(nonsq, rows, command="gvd check")
d3 = roundtrip(doc_sweep1, "sweep with all 6 orders non-squarefree")

# --- 4. sweep with certifying orders -------------------------------------------
clear_caches()
edge = Ideal.of(ctx3, QQ, (P(ctx3, [(1, {"x": 1, "y": 1})]),))
rows2 = sweep_rows(edge)
assert any(res is not None and res.decomposable for _, res in rows2)
doc_sweep2 = certificate_for_sweep(edge, rows2)
d4 = roundtrip(doc_sweep2, "sweep with certifying orders")

# --- 5. vertex-decomposition documents -----------------------------------------
verts = ("a", "b", "c", "d")
two_edges = SimplicialComplex.from_facets(verts, [("a", "c"), ("b", "d")])
res_bad = vertex_decomposable(two_edges, "pure")
assert not res_bad.decomposable
doc_vd1 = certificate_for_vd(two_edges, "pure", res_bad,
                             command="complex vd-check")
d5 = roundtrip(doc_vd1, "vd refutation of two disjoint edges")

path = SimplicialComplex.from_facets(verts, [("a", "b"), ("b", "c"),
                                             ("c", "d")])
res_path = vertex_decomposable(path, "pure")
assert res_path.decomposable
doc_vd2 = certificate_for_vd(path, "pure", res_path)
d6 = roundtrip(doc_vd2, "vd certificate of a path complex")

# --- 6. Stanley-Reisner transfer documents --------------------------------------
sr = stanley_reisner(path, QQ)
doc_sri = certificate_for_sr_ideal(path, sr, command="sr to-ideal")
d7 = roundtrip(doc_sri, "non-face ideal of the path complex")

back = complex_of(sr)
doc_src = certificate_for_sr_complex(sr, back, command="sr to-complex")
d8 = roundtrip(doc_src, "complex of the non-face ideal")
assert back.same_faces(path)

# --- 7. plain basis document -----------------------------------------------------
clear_caches()
doc_gb = certificate_for_gb(I6, natural_order(I6.ctx), command="gb compute")
d9 = roundtrip(doc_gb, "basis document for the 2x3 minors")

# --- 8. tampering ------------------------------------------------------------------
def shape_flip_conditional(doc):
    doc["result"]["conditional"] = True
    for row in doc["result"]["checks"]:
        if row[0] == "yfree-unmixed":
            row[1] = None


def shape_drop_saturation(doc):
    doc["result"]["saturations"].pop()


def shape_reorder_checks(doc):
    c = doc["result"]["checks"]
    c[0], c[1] = c[1], c[0]


def sweep_drop_row(doc):
    doc["result"]["rows"].pop()


def sweep_claim_decomposable(doc):
    doc["result"]["any_decomposable"] = True


def sweep_hide_check(doc):
    row = doc["result"]["rows"][0]
    assert "check" in row
    del row["check"]
    row["initial_squarefree"] = False
    row["order_gb"] = doc["result"]["rows"][0].get("order_gb", 0)


def vd_flip_verdict(doc):
    doc["result"]["decomposable"] = True
    doc["result"]["tree"] = doc["result"].pop("refutation")


def vd_tamper_tree(doc):
    doc["result"]["tree"]["vertex"] = "d"


def sr_tamper_gens(doc):
    doc["result"]["gens"].pop()


def sr_tamper_facets(doc):
    doc["result"]["facets"][0].append("d")


def gb_tamper_basis(doc):
    doc["result"]["basis"].pop()


expect_mismatch(d1, shape_flip_conditional, "shape conditionality faked")
expect_mismatch(d1, shape_drop_saturation, "saturation chain truncated")
expect_mismatch(d1, shape_reorder_checks, "shape checks reordered")
expect_mismatch(d3, sweep_drop_row, "sweep row dropped")
expect_mismatch(d3, sweep_claim_decomposable, "sweep verdict faked")
expect_mismatch(d4, sweep_hide_check, "certifying sweep row hidden")
expect_mismatch(d5, vd_flip_verdict, "vd verdict flipped")
expect_mismatch(d6, vd_tamper_tree, "vd tree vertex tampered")
expect_mismatch(d7, sr_tamper_gens, "non-face ideal generators truncated")
expect_mismatch(d8, sr_tamper_facets, "complex facets tampered")
expect_mismatch(d9, gb_tamper_basis, "displayed basis truncated")

print("ALL CHUNK-4 SMOKE TESTS PASS")
