import json

from gvdcert.certificates import (
    RecordPool, Replay, decode_polys, encode_polys, dumps_certificate,
    dim_from_record, height_from_record,
)
from gvdcert.errors import ReplayMismatch
from gvdcert.fields import field_from_spec
from gvdcert.groebner import (
    Ideal, gb_request_count, intersect_full, saturate_poly_full,
    colon_poly_full, radical_member_full, dimension, height,
)
from gvdcert.parsing import parse_polynomial
from gvdcert.poly import VarContext, natural_order

QQ = field_from_spec("QQ")


def mk(names, *texts):
    ctx = VarContext(tuple(names))
    gens = tuple(parse_polynomial(t, ctx, QQ) for t in texts)
    return ctx, Ideal.of(ctx, QQ, gens)


def flat_replay(doc_checker):
    before = gb_request_count()
    out = doc_checker()
    after = gb_request_count()
    assert after == before, f"replay made {after - before} basis requests"
    return out


# 1. plain gb record round trip
ctx, I = mk(["x", "y", "z"], "x*y - z^2", "x^2 - y*z", "y^2 - x*z")
pool = RecordPool()
ref = pool.gb_of(I)
doc = {"schema_version": 1, "pool": pool.entries}
blob = json.dumps(doc, sort_keys=True)
doc2 = json.loads(blob)


want_basis = I.canonical_basis()
want_dim, want_ht = dimension(I), height(I)


def check_gb():
    rp = Replay(doc2)
    rec = rp.gb_for(ref, ctx, QQ, I.gens, natural_order(ctx))
    assert rec["basis"] == want_basis
    assert dim_from_record(rec) == want_dim
    assert height_from_record(rec) == want_ht
    return rp.checks


print("gb record verified, checks =", flat_replay(check_gb))

# 2. tampering detection: drop the last basis element
bad = json.loads(blob)
bad["pool"][ref]["basis"] = bad["pool"][ref]["basis"][:-1]
try:
    Replay(bad).gb(ref)
    raise SystemExit("tampered basis accepted!")
except ReplayMismatch as e:
    print("tamper caught:", e)

# tamper only the basis but keep plausible cofactors: basis=[1] must fail
bad2 = json.loads(blob)
one = [["1", [0, 0, 0]]]
bad2["pool"][ref]["basis"] = [one]
bad2["pool"][ref]["cofactors"] = [[one, [], []]]  # claims 1 = 1*(xy - z^2)?
try:
    Replay(bad2).gb(ref)
    raise SystemExit("basis=[1] accepted!")
except ReplayMismatch as e:
    print("unit-basis fraud caught:", e)

# 3. derived records
ctx2, A = mk(["x", "y"], "x^2")
_, B = mk(["x", "y"], "y")
d_int = intersect_full(A, B)
f = parse_polynomial("x", ctx2, QQ)
d_sat = saturate_poly_full(A, f)
d_col = colon_poly_full(A, f)
member, gbm, _t = radical_member_full(parse_polynomial("x", ctx2, QQ), A)
assert member

pool2 = RecordPool()
ri = pool2.derived_intersect(d_int, A, B)
rs = pool2.derived_saturate(d_sat, A)
rc = pool2.derived_colon(d_col, A)
rm = pool2.radical_member(gbm, A, f)
re_ = pool2.equality(A, Ideal.of(ctx2, QQ, (parse_polynomial("x^2", ctx2, QQ),)))
rmem = pool2.members(A, (parse_polynomial("x^3 + x^2", ctx2, QQ),))
doc3 = json.loads(json.dumps({"schema_version": 1, "pool": pool2.entries}))


def check_derived():
    rp = Replay(doc3)
    got = rp.derived(ri, "intersect", ctx2, QQ, left=A.gens, right=B.gens)
    assert got["result"] == d_int.ideal.gens
    got = rp.derived(rs, "saturate", ctx2, QQ, base=A.gens, divisor=f)
    assert got["result"] == d_sat.ideal.gens
    got = rp.derived(rc, "colon", ctx2, QQ, base=A.gens, divisor=f)
    assert got["result"] == d_col.ideal.gens
    got = rp.derived(rm, "radical-member", ctx2, QQ, base=A.gens, element=f)
    assert got["member"] is True
    rp.equality(re_, ctx2, QQ, A.gens,
                (parse_polynomial("x^2", ctx2, QQ),), expect=True)
    rp.members(rmem, ctx2, QQ, A.gens,
               (parse_polynomial("x^3 + x^2", ctx2, QQ),))
    return rp.checks


print("derived records verified, checks =", flat_replay(check_derived))

# 4. dedupe: same gb requested twice -> one entry
pool3 = RecordPool()
a = pool3.gb_of(I)
b = pool3.gb_of(I)
assert a == b and len(pool3.entries) == 1
print("pool dedupe ok")
print("ALL CORE CHECKS PASS")
