"""Smoke test for chain and witness certificates (chunk 3)."""
import json
import time

from gvdcert.corpus import hankel, minors
from gvdcert.certificates import (
    certificate_for_chain,
    certificate_for_witness,
    dumps_certificate,
    replay_certificate,
)
from gvdcert.errors import ReplayMismatch
from gvdcert.fields import QQ
from gvdcert.groebner import Ideal, gb_request_count
from gvdcert.gvd import clear_caches
from gvdcert.liaison import build_witness, glicci_chain, ChainRefusal
from gvdcert.poly import Polynomial, VarContext


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


# --- 1. chain on the generic 2x3 minors (pure biliaison steps) --------------
clear_caches()
data = minors(2, 2, 3)
I6 = data.ideal
chain = glicci_chain(I6)
assert not isinstance(chain, ChainRefusal)
assert not chain.conditional
doc_minors = certificate_for_chain(I6, chain, unmixed_mode="certify",
                                   command="glicci chain")
d1 = roundtrip(doc_minors, "chain on 2x3 minors")

# --- 2. chain on the Hankel d=3 curve ----------------------------------------
clear_caches()
I_h = hankel(3).ideal
chain_h = glicci_chain(I_h)
assert not isinstance(chain_h, ChainRefusal)
doc_h = certificate_for_chain(I_h, chain_h, unmixed_mode="certify")
roundtrip(doc_h, f"chain on hankel(3) (conditional={chain_h.conditional})")

# --- 3. unit-rewrite chain ----------------------------------------------------
clear_caches()
ctx3 = VarContext(("x2", "x1", "x0"))
mixed = Ideal.of(ctx3, QQ, (
    P(ctx3, [(1, {"x2": 1})]),
    P(ctx3, [(1, {"x1": 1, "x0": 1})]),
))
chain_u = glicci_chain(mixed)
assert [s.kind for s in chain_u.steps][0] == "unit-rewrite"
doc_u = certificate_for_chain(mixed, chain_u, unmixed_mode="certify")
d3 = roundtrip(doc_u, f"unit-rewrite chain {[s.kind for s in chain_u.steps]}")

# --- 4. equal-radicals rewrite chain -----------------------------------------
clear_caches()
ctxa = VarContext(("x", "y", "z"))
absent = Ideal.of(ctxa, QQ, (P(ctxa, [(1, {"y": 1, "z": 1})]),))
chain_r = glicci_chain(absent)
assert not isinstance(chain_r, ChainRefusal), chain_r
kinds_r = [s.kind for s in chain_r.steps]
assert "equal-radicals-rewrite" in kinds_r, kinds_r
doc_r = certificate_for_chain(absent, chain_r, unmixed_mode="certify")
roundtrip(doc_r, f"equal-radicals chain {kinds_r}")

# --- 5. standalone witness document ------------------------------------------
clear_caches()
w = build_witness(I6, "x23")
assert w.ok and w.attempts == 1
doc_w = certificate_for_witness(I6, w, command="liaison witness")
d5 = roundtrip(doc_w, "standalone witness at x23")

# --- 6. tampering -------------------------------------------------------------
def flip_g0(doc):
    for step in doc["result"]["steps"]:
        if step["kind"] == "biliaison":
            step["g0_tag"] = "Assumed"
            return
    raise AssertionError("no biliaison step")


def perturb_scalar(doc):
    for step in doc["result"]["steps"]:
        if step["kind"] == "biliaison":
            step["witness"]["scalars"][0] = "7"
            return


def swap_steps(doc):
    s = doc["result"]["steps"]
    s[0], s[1] = s[1], s[0]


def flip_terminal(doc):
    doc["result"]["terminal"]["case"] = "zero"


def drop_lift(doc):
    doc["result"]["steps"][0]["lifted_next_gens"].pop()


def flip_conditional(doc):
    doc["result"]["conditional"] = not doc["result"]["conditional"]


def tamper_u(doc):
    doc["result"]["witness"]["u"] = doc["result"]["witness"]["v"]


def tamper_pairs(doc):
    doc["result"]["witness"]["pairs"].pop()


expect_mismatch(d1, flip_g0, "g0 tag flipped to Assumed on a prime shape")
expect_mismatch(d1, perturb_scalar, "witness scalar perturbed")
expect_mismatch(d3, swap_steps, "chain steps reordered")
expect_mismatch(d1, flip_terminal, "terminal case flipped")
expect_mismatch(d3, drop_lift, "pinned variable dropped from a lift")
expect_mismatch(d1, flip_conditional, "conditional flag flipped")
expect_mismatch(d5, tamper_u, "witness u replaced by v")
expect_mismatch(d5, tamper_pairs, "witness pair list truncated")

print("ALL CHUNK-3 SMOKE TESTS PASS")
