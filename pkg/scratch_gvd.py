import sys
sys.path.insert(0, "src")

from gvdcert.fields import QQ
from gvdcert.poly import Polynomial, VarContext, natural_order
from gvdcert.groebner import Ideal, ideal_equal
from gvdcert.gvd import (
    classify_degeneracy, geometric_split, is_gvd, is_order_compatible_gvd,
    monomial_min_primes, nonpure_gvd_check, squarefree_in_var, verify_split,
    clear_caches, NONDEGENERATE, DEGEN_RADICALS, DEGEN_UNIT,
)

def P(ctx, s_terms):
    # s_terms: list of (coeff, {var: exp})
    d = {}
    for c, mono in s_terms:
        e = tuple(mono.get(n, 0) for n in ctx.names)
        d[e] = QQ.from_int(c)
    return Polynomial.from_dict(ctx, QQ, d)

# --- running example: I = <y(zs-x^2), ywr, wr(z^2+zx+wr+s^2)> in k[x,y,z,w,r,s]
ctx = VarContext(("x", "y", "z", "w", "r", "s"))
g1 = P(ctx, [(1, {"y":1,"z":1,"s":1}), (-1, {"y":1,"x":2})])
g2 = P(ctx, [(1, {"y":1,"w":1,"r":1})])
g3 = P(ctx, [(1, {"w":1,"r":1,"z":2}), (1, {"w":1,"r":1,"z":1,"x":1}),
             (1, {"w":2,"r":2}), (1, {"w":1,"r":1,"s":2})])
I = Ideal.of(ctx, QQ, [g1, g2, g3])

assert not squarefree_in_var(I, "x")
assert squarefree_in_var(I, "y")
sp = geometric_split(I, "y")
C_expect = Ideal.of(ctx, QQ, [P(ctx, [(1,{"z":1,"s":1}),(-1,{"x":2})]),
                              P(ctx, [(1,{"w":1,"r":1})])])
N_expect = Ideal.of(ctx, QQ, [g3])
assert ideal_equal(sp.coeff_ideal, C_expect), "C mismatch"
assert ideal_equal(sp.yfree_ideal, N_expect), "N mismatch"
rep = verify_split(I, "y")
assert rep.holds and rep.colon_check and rep.plus_var_check
deg = classify_degeneracy(sp)
assert deg.kind == NONDEGENERATE, deg.kind
print("running example: split + equality + nondegeneracy OK")

res = is_gvd(I, "full", "assume")
assert res.decomposable, res.refutation and res.refutation.summary()
root = res.certificate
assert root.shed_var == "y"
assert root.degeneracy == NONDEGENERATE
assert res.is_conditional()  # unmixedness assumed
print("running example: full decomposability OK, shed order:",
      [n.shed_var for n in root.nodes() if n.shed_var])

# certify mode: no squarefree initial ideal exists -> Assumed -> conditional
clear_caches()
res2 = is_gvd(I, "full", "certify")
assert res2.decomposable and res2.is_conditional()
assert res2.certificate.unmixedness.tag == "Assumed"
print("running example: certify-mode conditional OK")

# C-branch contraction values from the worked example
sub = ctx.without("y")
Cc = sp.contracted_coeff()
spc = geometric_split(Cc, "z")
init_expect = Ideal.of(sub, QQ, [P(sub, [(1,{"z":1,"s":1})]), P(sub, [(1,{"w":1,"r":1})])])
assert ideal_equal(spc.initial_form_ideal, init_expect), "in_z C^c mismatch"
Nc = sp.contracted_yfree()
spn = geometric_split(Nc, "x")
inx_expect = Ideal.of(sub, QQ, [P(sub, [(1,{"w":1,"r":1,"z":1,"x":1})])])
assert ideal_equal(spn.initial_form_ideal, inx_expect), "in_x N^c mismatch"
print("contracted-branch initial ideals OK")

# --- weak variant example: third generator wr(x^2+s^2+z^2+wr)
g3w = P(ctx, [(1, {"w":1,"r":1,"x":2}), (1, {"w":1,"r":1,"s":2}),
              (1, {"w":1,"r":1,"z":2}), (1, {"w":2,"r":2})])
Iw = Ideal.of(ctx, QQ, [g1, g2, g3w])
for v in ("x", "z", "w", "r", "s"):
    assert not squarefree_in_var(Iw, v), v
assert squarefree_in_var(Iw, "y")
full_w = is_gvd(Iw, "full", "assume")
assert not full_w.decomposable
print("weak example: full variant refuted OK;",
      full_w.refutation.summary()[:90])
weak_w = is_gvd(Iw, "weak", "assume")
assert weak_w.decomposable
assert weak_w.certificate.shed_var == "y"
nev = weak_w.certificate.yfree_evidence
assert nev is not None and nev.cm_tag == "SufficientPrincipal" and nev.radical_tag == "Assumed"
assert weak_w.is_conditional()
print("weak example: weak variant OK (radical Assumed, CM principal)")

# --- leaves
ctx4 = VarContext(("x1", "x2", "x3", "x4"))
Ind = Ideal.of(ctx4, QQ, [Polynomial.variable(ctx4, QQ, "x2"),
                          Polynomial.variable(ctx4, QQ, "x4")])
r = is_gvd(Ind, "full", "certify")
assert r.decomposable and r.certificate.case == "indeterminates" and not r.is_conditional()
Z = Ideal.of(ctx4, QQ, [])
r = is_gvd(Z, "weak", "certify")
assert r.decomposable and r.certificate.case == "indeterminates"
U = Ideal.of(ctx4, QQ, [Polynomial.const(ctx4, QQ, QQ.from_int(3))])
r = is_gvd(U, "full", "certify")
assert r.decomposable and r.certificate.case == "unit"
print("leaves OK")

# --- failure of the defining equality: <y^2 - x>
ctx2 = VarContext(("x", "y"))
f = P(ctx2, [(1, {"y":2}), (-1, {"x":1})])
J = Ideal.of(ctx2, QQ, [f])
repJ = verify_split(J, "y")
assert not repJ.holds
assert repJ.colon_check is True and repJ.plus_var_check is True
assert not squarefree_in_var(J, "y")
print("y^2-x: equality fails, cross-checks still hold OK")

# --- nonpure check
ctx3 = VarContext(("x", "y", "z"))
xy = P(ctx3, [(1, {"x":1,"y":1})]); xz = P(ctx3, [(1, {"x":1,"z":1})])
K = Ideal.of(ctx3, QQ, [xy, xz])
np_rep = nonpure_gvd_check(K, "y")
assert not np_rep.holds and np_rep.case == "fails" and np_rep.equality_holds
assert "x" in np_rep.detail
print("nonpure <xy,xz> at y fails on shared minimal prime OK")

ctxd = VarContext(("y", "a", "b", "c"))
gens = [P(ctxd, [(1, {"y":1, v:1})]) for v in ("a", "b", "c")]
D = Ideal.of(ctxd, QQ, gens)
np2 = nonpure_gvd_check(D, "y")
assert np2.holds and np2.case == "disjoint-minimal-primes", (np2.case, np2.detail)
assert np2.yfree_min_primes == ((),)
print("nonpure cone ideal at y holds (disjoint minimal primes) OK")

# min primes sanity
mp = monomial_min_primes(K)
assert set(mp) == {("x",), ("y", "z")}, mp

# --- order-compatible: 2-minors of the 2x3 Hankel matrix
ctxh = VarContext(("x3", "x2", "x1", "x0"))
m1 = P(ctxh, [(1, {"x3":1,"x1":1}), (-1, {"x2":2})])
m2 = P(ctxh, [(1, {"x3":1,"x0":1}), (-1, {"x2":1,"x1":1})])
m3 = P(ctxh, [(1, {"x2":1,"x0":1}), (-1, {"x1":2})])
H = Ideal.of(ctxh, QQ, [m1, m2, m3])
oc = is_order_compatible_gvd(H)
assert oc.decomposable and oc.initial_is_squarefree
assert oc.complex_result is not None and oc.complex_result.decomposable
assert not oc.is_conditional()
print("order-compatible Hankel d=3 OK; direct root shed:",
      oc.direct.certificate.shed_var)

# order-compatible refutation: running example has no squarefree initial ideal
occ = is_order_compatible_gvd(I)
assert not occ.decomposable and not occ.initial_is_squarefree
print("order-compatible refutation for the running example OK:",
      occ.direct.refutation.reason[:70])

# absent-variable step: <x1*x0> in three variables, greatest var absent
ctxa = VarContext(("x2", "x1", "x0"))
A = Ideal.of(ctxa, QQ, [P(ctxa, [(1, {"x1":1,"x0":1})])])
oca = is_order_compatible_gvd(A)
assert oca.decomposable
assert oca.direct.certificate.shed_var == "x2"
assert oca.direct.certificate.degeneracy == DEGEN_RADICALS
print("absent-variable degenerate step OK")

# --- monomial exact unmixedness refutes mixed ideals
M = Ideal.of(ctx3, QQ, [P(ctx3, [(1, {"x":1,"y":1})]), P(ctx3, [(1, {"x":1,"z":1})])])
rm = is_gvd(M, "full", "monomial")
assert not rm.decomposable and rm.refutation.reason.startswith("not unmixed")
print("mixed monomial ideal refuted in monomial mode OK")

# unmixed squarefree monomial ideal that IS gvd: <xz> (path complex {xy, yz})
E = Ideal.of(ctx3, QQ, [P(ctx3, [(1, {"x":1,"z":1})])])
re_ = is_gvd(E, "full", "monomial")
assert re_.decomposable and not re_.is_conditional(), re_.refutation and re_.refutation.summary()
print("path complex ideal <xz> full GVD in monomial mode OK, sheds:",
      [n.shed_var for n in re_.certificate.nodes() if n.shed_var])

# unmixed but NOT decomposable: the 4-cycle edge ideal <xy,yz,zw,wx>
# (= <x,z> cap <y,w>, unmixed; its complex is two disjoint edges, not VD)
ctxc = VarContext(("x", "y", "z", "w"))
C4 = Ideal.of(ctxc, QQ, [P(ctxc, [(1, {a:1, b:1})])
                         for a, b in (("x","y"),("y","z"),("z","w"),("w","x"))])
rc4 = is_gvd(C4, "full", "monomial")
assert not rc4.decomposable
assert rc4.refutation.reason == "no variable admits a decomposition step"
assert len(rc4.refutation.tried) == 4
print("4-cycle edge ideal refuted after full backtracking OK")

print("ALL GVD SMOKE TESTS PASSED")
