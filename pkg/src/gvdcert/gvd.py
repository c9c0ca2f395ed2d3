"""Geometric vertex decomposition.

The central construction: for a variable y and an ideal I, the reduced
Groebner basis of I under a lex order with y greatest splits every element
as y^d * q + r with q, r free of y.  The ideal generated by all the q's
(the *coefficient ideal*) and the ideal generated by the elements that never
involved y (the *y-free ideal*) decompose the initial-form ideal:

    <initial y-forms of I> = coeff_ideal  intersect  (yfree_ideal + <y>)

whenever I is squarefree in y.  Recursing through these two ideals in the
ring without y is geometric vertex decomposability; this module decides it
(full, weak and order-compatible variants), classifies degeneracy, and
exposes the not-necessarily-unmixed check based on minimal primes.

Every decision carries a certificate tree or a refutation listing what was
tried, and the expensive subresults (bases, eliminations, radical-membership
runs) are kept on the nodes so a replay can re-verify them without search.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .errors import BadParameter, NotMonomial, StrategyDisagreement
from .groebner import (
    DerivedIdeal,
    GBResult,
    Ideal,
    ideal_equal,
    initial_ideal,
    intersect_full,
    radical_member_full,
    saturate_poly_full,
)
from .poly import (
    MonomialOrder,
    Polynomial,
    VarContext,
    natural_order,
    var_first_order,
)
from .simplicial import (
    SimplicialComplex,
    VDResult,
    complex_of,
    monomial_ass_primes,
    reisner_cm,
    vertex_decomposable,
)
from .transversals import minimal_transversals

# degeneracy classifications
DEGEN_UNIT = "unit-coefficient-ideal"
DEGEN_RADICALS = "equal-radicals"
NONDEGENERATE = "nondegenerate"

# evidence tags
EXACT = "Exact"
SUFFICIENT_VD = "SufficientViaVD"
SUFFICIENT_REISNER = "SufficientViaReisner"
SUFFICIENT_PRINCIPAL = "SufficientPrincipal"
ASSUMED = "Assumed"

UNMIXED_MODES = ("assume", "monomial", "certify")
VARIANTS = ("full", "weak")


# ---------------------------------------------------------------------------
# the split


@dataclass(frozen=True)
class GeometricSplit:
    """The coefficient/y-free decomposition of I at a variable.

    Computed from the reduced basis under the lex order with `shed_var`
    greatest.  triples[i] = (d, q, r) for basis element y^d*q + r, with q
    and r free of y.  coeff_gens collects every q; yfree_gens only those
    with d = 0; initial_gens are the initial y-forms y^d*q.
    """

    shed_var: str
    gb: GBResult
    triples: tuple
    coeff_gens: tuple
    yfree_gens: tuple
    initial_gens: tuple

    @property
    def ctx(self) -> VarContext:
        return self.gb.ctx

    @property
    def coeff_ideal(self) -> Ideal:
        return Ideal.of(self.ctx, self.gb.field, self.coeff_gens)

    @property
    def yfree_ideal(self) -> Ideal:
        return Ideal.of(self.ctx, self.gb.field, self.yfree_gens)

    @property
    def initial_form_ideal(self) -> Ideal:
        return Ideal.of(self.ctx, self.gb.field, self.initial_gens)

    def contracted_coeff(self) -> Ideal:
        sub = self.ctx.without(self.shed_var)
        return Ideal.of(sub, self.gb.field, [g.map_context(sub) for g in self.coeff_gens])

    def contracted_yfree(self) -> Ideal:
        sub = self.ctx.without(self.shed_var)
        return Ideal.of(sub, self.gb.field, [g.map_context(sub) for g in self.yfree_gens])


def shed_order(ctx: VarContext, var: str) -> MonomialOrder:
    """The lex order with `var` greatest (context order for the rest)."""
    return var_first_order(ctx, var)


def _split_element(g: Polynomial, j: int) -> tuple:
    """(d, q, r) with g = y^d*q + r, y = variable index j, q free of y."""
    d = max(e[j] for e, _ in g.terms)
    top = {}
    rest = {}
    for e, c in g.terms:
        if e[j] == d:
            top[tuple(x if i != j else 0 for i, x in enumerate(e))] = c
        else:
            rest[e] = c
    q = Polynomial.from_dict(g.ctx, g.field, top)
    r = Polynomial.from_dict(g.ctx, g.field, rest)
    return d, q, r


def geometric_split(ideal: Ideal, var: str) -> GeometricSplit:
    """Split I at a variable from its reduced var-greatest lex basis."""
    j = ideal.ctx.index(var)
    gb = ideal.groebner(shed_order(ideal.ctx, var))
    triples = []
    coeff = []
    yfree = []
    init = []
    ypoly = Polynomial.variable(ideal.ctx, ideal.field, var)
    for g in gb.basis:
        d, q, r = _split_element(g, j)
        triples.append((d, q, r))
        coeff.append(q)
        if d == 0:
            yfree.append(q)
        init.append(q * ypoly ** d if d else q)
    return GeometricSplit(
        var, gb, tuple(triples), tuple(coeff), tuple(yfree), tuple(init)
    )


def squarefree_in_var(ideal: Ideal, var: str) -> bool:
    """Whether the reduced var-greatest basis has var-degree <= 1 throughout."""
    j = ideal.ctx.index(var)
    gb = ideal.groebner(shed_order(ideal.ctx, var))
    return all(e[j] <= 1 for g in gb.basis for e, _ in g.terms)


# ---------------------------------------------------------------------------
# verification of one decomposition step


@dataclass(frozen=True)
class SplitReport:
    """Exact verification of one decomposition at a variable.

    `holds` is the defining equality
        initial_form_ideal == coeff_ideal intersect (yfree_ideal + <var>).
    The two cross-checks restate the order-independence facts:
    coeff_ideal == (initial_form_ideal : var^infinity), and
    yfree_ideal + <var> == initial_form_ideal + <var>.
    """

    shed_var: str
    split: Optional[GeometricSplit]
    coeff_ideal: Ideal
    yfree_ideal: Ideal
    initial_form_ideal: Ideal
    holds: bool
    colon_check: Optional[bool]
    plus_var_check: Optional[bool]
    intersection: DerivedIdeal
    saturation: Optional[DerivedIdeal]


def verify_split(
    ideal: Ideal,
    var: str,
    candidate: Optional[tuple] = None,
    cross_checks: bool = True,
) -> SplitReport:
    """Check the decomposition equality at `var`, exactly.

    With `candidate` = (coeff_gens, yfree_gens), those ideals are tested in
    place of the computed ones (the initial-form ideal always comes from
    the actual reduced basis).
    """
    ctx, fld = ideal.ctx, ideal.field
    split = geometric_split(ideal, var)
    if candidate is None:
        coeff = split.coeff_ideal
        yfree = split.yfree_ideal
        used_split: Optional[GeometricSplit] = split
    else:
        coeff = Ideal.of(ctx, fld, tuple(candidate[0]))
        yfree = Ideal.of(ctx, fld, tuple(candidate[1]))
        used_split = None
    init = split.initial_form_ideal
    ypoly = Polynomial.variable(ctx, fld, var)
    inter = intersect_full(coeff, yfree.plus_gens([ypoly]))
    holds = ideal_equal(init, inter.ideal)
    colon_check = None
    plus_var_check = None
    saturation = None
    if cross_checks:
        saturation = saturate_poly_full(init, ypoly)
        colon_check = ideal_equal(coeff, saturation.ideal)
        plus_var_check = ideal_equal(
            yfree.plus_gens([ypoly]), init.plus_gens([ypoly])
        )
    return SplitReport(
        var, used_split, coeff, yfree, init, holds,
        colon_check, plus_var_check, inter, saturation,
    )


# ---------------------------------------------------------------------------
# degeneracy


@dataclass(frozen=True)
class DegeneracyReport:
    kind: str  # DEGEN_UNIT | DEGEN_RADICALS | NONDEGENERATE
    witness: Optional[Polynomial]  # coeff generator outside rad(yfree), if any
    records: tuple  # (name, GBResult) pairs from the radical-membership runs


def classify_degeneracy(split: GeometricSplit) -> DegeneracyReport:
    """unit-coefficient-ideal, equal-radicals, or nondegenerate (with a
    witness generator that leaves the radical)."""
    coeff = split.coeff_ideal
    gb = coeff.groebner()
    if gb.is_unit():
        return DegeneracyReport(DEGEN_UNIT, None, (("coeff_gb", gb),))
    yfree = split.yfree_ideal
    records = [("coeff_gb", gb)]
    for i, q in enumerate(coeff.nonzero_gens()):
        member, rgb, _ = radical_member_full(q, yfree)
        records.append((f"coeff_gen_{i}_in_rad_yfree", rgb))
        if not member:
            return DegeneracyReport(NONDEGENERATE, q, tuple(records))
    # the reverse containment: yfree generators inside rad(coeff); these
    # are generators of coeff as well, but check literally
    for i, h in enumerate(yfree.nonzero_gens()):
        member, rgb, _ = radical_member_full(h, coeff)
        records.append((f"yfree_gen_{i}_in_rad_coeff", rgb))
        if not member:
            return DegeneracyReport(NONDEGENERATE, h, tuple(records))
    return DegeneracyReport(DEGEN_RADICALS, None, tuple(records))


# ---------------------------------------------------------------------------
# evidence


@dataclass(frozen=True)
class UnmixedEvidence:
    """How a node's unmixedness was settled.

    ok True with tag Exact or SufficientViaVD, ok False only from the exact
    monomial route (which refutes the node), ok None with tag Assumed.
    """

    tag: str
    detail: str
    ok: Optional[bool]
    records: tuple = ()


@dataclass(frozen=True)
class RadicalCMEvidence:
    """Radical + Cohen-Macaulay evidence for the y-free ideal at a weak
    nondegenerate step."""

    radical_tag: str
    radical_detail: str
    cm_tag: str
    cm_detail: str
    ok: Optional[bool]  # False = exactly refuted; None = assumed somewhere
    records: tuple = ()

    def is_conditional(self) -> bool:
        return ASSUMED in (self.radical_tag, self.cm_tag)


def _monomial_radical_gens(ideal: Ideal) -> Optional[Ideal]:
    """Radical of a monomial ideal (squarefree the generators); None if the
    input is not monomial."""
    if not ideal.is_monomial_ideal():
        return None
    gens = []
    for g in ideal.nonzero_gens():
        e, _ = g.terms[0]
        gens.append(
            Polynomial.monomial(ideal.ctx, ideal.field, tuple(1 if x else 0 for x in e))
        )
    return Ideal.of(ideal.ctx, ideal.field, gens)


def unmixedness_evidence(
    ideal: Ideal,
    mode: str,
    evidence_order: Optional[MonomialOrder] = None,
) -> UnmixedEvidence:
    """Evidence that the ideal is unmixed, per mode.

    monomial: exact associated-prime computation (monomial ideals only).
    certify: exact when monomial; otherwise the sufficient route through a
    squarefree initial ideal whose complex is pure and vertex decomposable
    (hence Cohen-Macaulay, hence unmixed); else Assumed.
    assume: recorded as Assumed without computation.
    """
    if mode not in UNMIXED_MODES:
        raise BadParameter(f"unknown unmixed mode {mode!r}")
    if mode == "assume":
        return UnmixedEvidence(ASSUMED, "unmixedness assumed (assume mode)", None)
    if ideal.is_monomial_ideal():
        dec = monomial_ass_primes(ideal)
        primes = ", ".join("<" + " ".join(p) + ">" for p in dec.associated_primes)
        if dec.is_unmixed():
            return UnmixedEvidence(
                EXACT, f"monomial associated primes all of one height: {primes}", True
            )
        return UnmixedEvidence(
            EXACT, f"monomial associated primes of mixed heights: {primes}", False
        )
    if mode == "monomial":
        raise NotMonomial("exact unmixedness requested for a non-monomial ideal")
    order = evidence_order or natural_order(ideal.ctx)
    gb = ideal.groebner(order)
    init = initial_ideal(ideal, order)
    if all(all(x <= 1 for x in e) for e in gb.leading_exponents()):
        delta = complex_of(init)
        if delta.is_pure():
            vd = vertex_decomposable(delta, "pure")
            if vd.decomposable:
                return UnmixedEvidence(
                    SUFFICIENT_VD,
                    "squarefree initial ideal with pure, vertex-decomposable "
                    "complex: Cohen-Macaulay, hence unmixed",
                    True,
                    (("evidence_gb", gb),),
                )
        return UnmixedEvidence(
            ASSUMED,
            "squarefree initial ideal but complex purity/decomposability "
            "not established; unmixedness assumed",
            None,
            (("evidence_gb", gb),),
        )
    return UnmixedEvidence(
        ASSUMED,
        "no squarefree initial ideal found under the inspected order; "
        "unmixedness assumed",
        None,
        (("evidence_gb", gb),),
    )


def radical_cm_evidence(ideal: Ideal) -> RadicalCMEvidence:
    """Evidence that an ideal is radical and Cohen-Macaulay.

    Exact for monomial ideals (squarefree generators; Reisner's criterion).
    For general ideals: a squarefree initial ideal certifies radicality;
    Cohen-Macaulayness via a pure vertex-decomposable initial complex, via
    Reisner on the initial complex, or via principality; otherwise Assumed.
    """
    if ideal.is_zero_ideal():
        return RadicalCMEvidence(
            EXACT, "zero ideal is radical",
            EXACT, "zero ideal: the ambient polynomial ring is Cohen-Macaulay",
            True,
        )
    if ideal.is_unit_ideal():
        return RadicalCMEvidence(
            EXACT, "unit ideal is radical",
            EXACT, "unit ideal: zero ring, vacuously Cohen-Macaulay",
            True,
        )
    if ideal.is_monomial_ideal():
        rad = _monomial_radical_gens(ideal)
        if not ideal_equal(rad, ideal):
            return RadicalCMEvidence(
                EXACT, "monomial ideal with non-squarefree minimal generators "
                "is not radical",
                ASSUMED, "not reached",
                False,
            )
        delta = complex_of(rad)
        cm = reisner_cm(delta, ideal.field)
        if cm:
            return RadicalCMEvidence(
                EXACT, "squarefree monomial ideal",
                EXACT, "links have vanishing reduced homology below top "
                "dimension (Reisner over the coefficient field)",
                True,
            )
        return RadicalCMEvidence(
            EXACT, "squarefree monomial ideal",
            EXACT, "a link has nonvanishing reduced homology below its "
            "dimension: not Cohen-Macaulay over the coefficient field",
            False,
        )
    order = natural_order(ideal.ctx)
    gb = ideal.groebner(order)
    records = (("evidence_gb", gb),)
    squarefree_initial = all(
        all(x <= 1 for x in e) for e in gb.leading_exponents()
    )
    if squarefree_initial:
        radical_tag, radical_detail = (
            EXACT,
            "squarefree initial ideal forces radicality",
        )
        delta = complex_of(initial_ideal(ideal, order))
        if delta.is_pure() and vertex_decomposable(delta, "pure").decomposable:
            return RadicalCMEvidence(
                radical_tag, radical_detail,
                SUFFICIENT_VD,
                "initial complex pure and vertex decomposable: the initial "
                "ideal is Cohen-Macaulay, hence so is the ideal",
                True, records,
            )
        if reisner_cm(delta, ideal.field):
            return RadicalCMEvidence(
                radical_tag, radical_detail,
                SUFFICIENT_REISNER,
                "initial complex Cohen-Macaulay by Reisner's criterion, "
                "hence the ideal is Cohen-Macaulay",
                True, records,
            )
        cm_tag, cm_detail = ASSUMED, (
            "initial complex neither vertex decomposable nor Reisner-"
            "verified; Cohen-Macaulayness assumed"
        )
    else:
        radical_tag, radical_detail = ASSUMED, (
            "no squarefree initial ideal under the inspected order; "
            "radicality assumed"
        )
        cm_tag, cm_detail = ASSUMED, "Cohen-Macaulayness assumed"
    nz = ideal.nonzero_gens()
    if cm_tag == ASSUMED and len(nz) == 1:
        cm_tag, cm_detail = (
            SUFFICIENT_PRINCIPAL,
            "principal ideal: a hypersurface ring is Cohen-Macaulay",
        )
    ok = None if ASSUMED in (radical_tag, cm_tag) else True
    return RadicalCMEvidence(
        radical_tag, radical_detail, cm_tag, cm_detail, ok, records
    )


# ---------------------------------------------------------------------------
# certificates and refutations


@dataclass(frozen=True, eq=False)
class GVDNode:
    """One node of a decomposability certificate tree."""

    context: tuple
    basis: tuple  # canonical reduced basis under the context order
    variant: str
    case: str  # "unit" | "indeterminates" | "decompose"
    unmixedness: UnmixedEvidence
    shed_var: Optional[str] = None
    degeneracy: Optional[str] = None
    split: Optional[GeometricSplit] = None
    equality: Optional[SplitReport] = None
    degeneracy_records: tuple = ()
    coeff_branch: Optional["GVDNode"] = None
    yfree_branch: Optional["GVDNode"] = None
    yfree_evidence: Optional[RadicalCMEvidence] = None
    records: tuple = ()

    def is_conditional(self) -> bool:
        """Whether any evidence in the tree is merely assumed."""
        if self.unmixedness.tag == ASSUMED:
            return True
        if self.yfree_evidence is not None and self.yfree_evidence.is_conditional():
            return True
        for child in (self.coeff_branch, self.yfree_branch):
            if child is not None and child.is_conditional():
                return True
        return False

    def nodes(self):
        yield self
        for child in (self.coeff_branch, self.yfree_branch):
            if child is not None:
                yield from child.nodes()


@dataclass(frozen=True, eq=False)
class TriedVariable:
    """Why one shedding candidate was rejected, with checkable evidence.

    kind "not-squarefree": shed_gb is the reduced var-greatest basis and
    some term of it has var-degree two or more.  kind "equality-failed":
    report is the failed SplitReport.  kind "coeff-branch"/"yfree-branch":
    branch is the contracted child's refutation and branch_gens are the
    generators handed to that child.  kind "yfree-evidence": evidence is
    the exact-false radical/Cohen-Macaulay evidence (weak variant).  kind
    "conditional-kept": the variable succeeded on assumed evidence and the
    scan continued.
    """

    var: str
    kind: str
    reason: str
    shed_gb: Optional[GBResult] = None
    report: Optional[SplitReport] = None
    branch: Optional["GVDRefutation"] = None
    branch_gens: tuple = ()
    evidence: Optional[RadicalCMEvidence] = None


@dataclass(frozen=True, eq=False)
class GVDRefutation:
    context: tuple
    basis: tuple
    variant: str
    reason: str
    tried: tuple = ()  # (variable, reason) pairs
    unmixedness: Optional[UnmixedEvidence] = None
    records: tuple = ()
    details: tuple = ()  # TriedVariable entries parallel to `tried`

    def summary(self) -> str:
        if not self.tried:
            return self.reason
        parts = "; ".join(f"{v}: {r}" for v, r in self.tried)
        return f"{self.reason} ({parts})"


@dataclass(frozen=True, eq=False)
class GVDResult:
    decomposable: bool
    certificate: Optional[GVDNode] = None
    refutation: Optional[GVDRefutation] = None

    def is_conditional(self) -> bool:
        return self.decomposable and self.certificate.is_conditional()


_GVD_MEMO: dict = {}
_GVD_LOCK = threading.Lock()


def clear_caches() -> None:
    with _GVD_LOCK:
        _GVD_MEMO.clear()


def _memo_get(key):
    with _GVD_LOCK:
        return _GVD_MEMO.get(key)


def _memo_put(key, value):
    with _GVD_LOCK:
        return _GVD_MEMO.setdefault(key, value)


# ---------------------------------------------------------------------------
# the decomposability search


def _leaf(ideal: Ideal, gb: GBResult, variant: str) -> Optional[GVDNode]:
    if gb.is_unit():
        return GVDNode(
            ideal.ctx.names, gb.basis, variant, "unit",
            UnmixedEvidence(EXACT, "unit ideal: no associated primes", True),
            records=(("canonical_gb", gb),),
        )
    if ideal.is_generated_by_indeterminates():
        detail = (
            "zero ideal" if gb.is_zero() else "prime ideal of indeterminates"
        )
        return GVDNode(
            ideal.ctx.names, gb.basis, variant, "indeterminates",
            UnmixedEvidence(EXACT, detail, True),
            records=(("canonical_gb", gb),),
        )
    return None


def is_gvd(
    ideal: Ideal,
    variant: str = "full",
    unmixed_mode: str = "certify",
) -> GVDResult:
    """Decide geometric vertex decomposability.

    full: both contracted ideals of every decomposition step must again be
    decomposable.  weak: degenerate steps recurse only on the y-free ideal;
    nondegenerate steps recurse on the coefficient ideal and carry radical
    + Cohen-Macaulay evidence for the y-free ideal.

    Variables are tried in context order with full backtracking; results
    are memoized on the canonical basis.  Certificates become conditional
    when any evidence is Assumed; refutations list every variable tried
    with the condition that failed.
    """
    if variant not in VARIANTS:
        raise BadParameter(f"unknown variant {variant!r}")
    if unmixed_mode not in UNMIXED_MODES:
        raise BadParameter(f"unknown unmixed mode {unmixed_mode!r}")
    if unmixed_mode == "monomial" and not ideal.is_monomial_ideal():
        raise NotMonomial("unmixed mode 'monomial' needs a monomial ideal")
    return _is_gvd(ideal, variant, unmixed_mode)


def _is_gvd(ideal: Ideal, variant: str, unmixed_mode: str) -> GVDResult:
    key = (ideal.canonical_key(), variant, unmixed_mode)
    hit = _memo_get(key)
    if hit is not None:
        return hit

    gb = ideal.groebner()
    leaf = _leaf(ideal, gb, variant)
    if leaf is not None:
        return _memo_put(key, GVDResult(True, certificate=leaf))

    evidence = unmixedness_evidence(ideal, unmixed_mode)
    if evidence.ok is False:
        ref = GVDRefutation(
            ideal.ctx.names, gb.basis, variant,
            "not unmixed: " + evidence.detail,
            unmixedness=evidence,
            records=(("canonical_gb", gb),),
        )
        return _memo_put(key, GVDResult(False, refutation=ref))

    tried: list = []
    details: list = []
    conditional_node: Optional[GVDNode] = None
    for var in ideal.ctx.names:
        if not squarefree_in_var(ideal, var):
            tried.append((var, "not squarefree in this variable"))
            details.append(TriedVariable(
                var, "not-squarefree", "not squarefree in this variable",
                shed_gb=ideal.groebner(shed_order(ideal.ctx, var)),
            ))
            continue
        report = verify_split(ideal, var)
        if not report.holds:
            tried.append((var, "decomposition equality failed"))
            details.append(TriedVariable(
                var, "equality-failed", "decomposition equality failed",
                report=report,
            ))
            continue
        split = report.split
        degen = classify_degeneracy(split)
        sub = ideal.ctx.without(var)
        coeff_c = split.contracted_coeff()
        yfree_c = split.contracted_yfree()

        if variant == "full":
            cres = _is_gvd(coeff_c, variant, unmixed_mode)
            if not cres.decomposable:
                reason = "coefficient branch: " + cres.refutation.summary()
                tried.append((var, reason))
                details.append(TriedVariable(
                    var, "coeff-branch", reason,
                    report=report, branch=cres.refutation,
                    branch_gens=coeff_c.gens,
                ))
                continue
            nres = _is_gvd(yfree_c, variant, unmixed_mode)
            if not nres.decomposable:
                reason = "y-free branch: " + nres.refutation.summary()
                tried.append((var, reason))
                details.append(TriedVariable(
                    var, "yfree-branch", reason,
                    report=report, branch=nres.refutation,
                    branch_gens=yfree_c.gens,
                ))
                continue
            node = GVDNode(
                ideal.ctx.names, gb.basis, variant, "decompose", evidence,
                shed_var=var, degeneracy=degen.kind, split=split,
                equality=report, degeneracy_records=degen.records,
                coeff_branch=cres.certificate, yfree_branch=nres.certificate,
                records=(("canonical_gb", gb),),
            )
            return _memo_put(key, GVDResult(True, certificate=node))

        # weak variant
        if degen.kind in (DEGEN_UNIT, DEGEN_RADICALS):
            nres = _is_gvd(yfree_c, variant, unmixed_mode)
            if not nres.decomposable:
                reason = "y-free branch: " + nres.refutation.summary()
                tried.append((var, reason))
                details.append(TriedVariable(
                    var, "yfree-branch", reason,
                    report=report, branch=nres.refutation,
                    branch_gens=yfree_c.gens,
                ))
                continue
            node = GVDNode(
                ideal.ctx.names, gb.basis, variant, "decompose", evidence,
                shed_var=var, degeneracy=degen.kind, split=split,
                equality=report, degeneracy_records=degen.records,
                yfree_branch=nres.certificate,
                records=(("canonical_gb", gb),),
            )
            return _memo_put(key, GVDResult(True, certificate=node))

        cres = _is_gvd(coeff_c, variant, unmixed_mode)
        if not cres.decomposable:
            reason = "coefficient branch: " + cres.refutation.summary()
            tried.append((var, reason))
            details.append(TriedVariable(
                var, "coeff-branch", reason,
                report=report, branch=cres.refutation,
                branch_gens=coeff_c.gens,
            ))
            continue
        nev = radical_cm_evidence(yfree_c)
        if nev.ok is False:
            reason = ("y-free ideal not radical and Cohen-Macaulay: "
                      + nev.radical_detail + "; " + nev.cm_detail)
            tried.append((var, reason))
            details.append(TriedVariable(
                var, "yfree-evidence", reason,
                report=report, branch_gens=yfree_c.gens, evidence=nev,
            ))
            continue
        node = GVDNode(
            ideal.ctx.names, gb.basis, variant, "decompose", evidence,
            shed_var=var, degeneracy=degen.kind, split=split,
            equality=report, degeneracy_records=degen.records,
            coeff_branch=cres.certificate, yfree_evidence=nev,
            records=(("canonical_gb", gb),),
        )
        if nev.ok is True:
            return _memo_put(key, GVDResult(True, certificate=node))
        # keep the conditional success but scan on for a variable whose
        # y-free evidence is exact
        if conditional_node is None:
            conditional_node = node
        reason = ("accepted with assumed y-free evidence; kept looking "
                  "for exact evidence")
        tried.append((var, reason))
        details.append(TriedVariable(var, "conditional-kept", reason))

    if conditional_node is not None:
        return _memo_put(key, GVDResult(True, certificate=conditional_node))

    ref = GVDRefutation(
        ideal.ctx.names, gb.basis, variant,
        "no variable admits a decomposition step",
        tuple(tried), evidence, (("canonical_gb", gb),),
        details=tuple(details),
    )
    return _memo_put(key, GVDResult(False, refutation=ref))


# ---------------------------------------------------------------------------
# order-compatible variant


@dataclass(frozen=True, eq=False)
class OrderCompatibleResult:
    """Outcome of the order-compatible check, with both strategies' output.

    direct: the recursion shedding only the greatest remaining variable.
    via_complex: squarefree initial ideal + order-compatible vertex
    decomposition of its complex.  The two verdicts must agree.
    """

    decomposable: bool
    order_names: tuple
    direct: GVDResult
    initial_is_squarefree: bool
    complex_result: Optional[VDResult]
    initial: Optional[Ideal]

    def is_conditional(self) -> bool:
        return self.decomposable and self.direct.is_conditional()


def _oc_direct(ideal: Ideal, names_desc: tuple) -> GVDResult:
    """Direct order-compatible recursion: shed exactly the greatest
    variable of the (current) ring; both contractions must succeed."""
    key = (ideal.canonical_key(), "order-compatible", names_desc)
    hit = _memo_get(key)
    if hit is not None:
        return hit

    gb = ideal.groebner()
    leaf = _leaf(ideal, gb, "order-compatible")
    if leaf is not None:
        return _memo_put(key, GVDResult(True, certificate=leaf))

    var = names_desc[0]
    rest = names_desc[1:]
    order = MonomialOrder(
        ideal.ctx, tuple(ideal.ctx.index(n) for n in names_desc)
    )

    if not squarefree_in_var(ideal, var):
        ref = GVDRefutation(
            ideal.ctx.names, gb.basis, "order-compatible",
            f"not squarefree in the greatest variable {var}",
            ((var, "not squarefree"),),
            records=(("canonical_gb", gb),),
            details=(TriedVariable(
                var, "not-squarefree", "not squarefree in this variable",
                shed_gb=ideal.groebner(shed_order(ideal.ctx, var)),
            ),),
        )
        return _memo_put(key, GVDResult(False, refutation=ref))

    evidence = unmixedness_evidence(
        ideal, "monomial" if ideal.is_monomial_ideal() else "certify",
        evidence_order=order,
    )
    if evidence.ok is not True:
        reason = (
            "not unmixed: " + evidence.detail
            if evidence.ok is False
            else "unmixedness not established via the initial complex: "
            + evidence.detail
        )
        ref = GVDRefutation(
            ideal.ctx.names, gb.basis, "order-compatible", reason,
            unmixedness=evidence, records=(("canonical_gb", gb),),
        )
        return _memo_put(key, GVDResult(False, refutation=ref))

    report = verify_split(ideal, var)
    if not report.holds:
        ref = GVDRefutation(
            ideal.ctx.names, gb.basis, "order-compatible",
            f"decomposition equality failed at {var}",
            ((var, "decomposition equality failed"),),
            records=(("canonical_gb", gb),),
            details=(TriedVariable(
                var, "equality-failed", "decomposition equality failed",
                report=report,
            ),),
        )
        return _memo_put(key, GVDResult(False, refutation=ref))
    split = report.split
    degen = classify_degeneracy(split)

    coeff_c = split.contracted_coeff()
    cres = _oc_direct(coeff_c, rest)
    if not cres.decomposable:
        ref = GVDRefutation(
            ideal.ctx.names, gb.basis, "order-compatible",
            "coefficient branch: " + cres.refutation.summary(),
            ((var, "coefficient branch refuted"),),
            records=(("canonical_gb", gb),),
            details=(TriedVariable(
                var, "coeff-branch", "coefficient branch refuted",
                report=report, branch=cres.refutation,
                branch_gens=coeff_c.gens,
            ),),
        )
        return _memo_put(key, GVDResult(False, refutation=ref))
    yfree_c = split.contracted_yfree()
    nres = _oc_direct(yfree_c, rest)
    if not nres.decomposable:
        ref = GVDRefutation(
            ideal.ctx.names, gb.basis, "order-compatible",
            "y-free branch: " + nres.refutation.summary(),
            ((var, "y-free branch refuted"),),
            records=(("canonical_gb", gb),),
            details=(TriedVariable(
                var, "yfree-branch", "y-free branch refuted",
                report=report, branch=nres.refutation,
                branch_gens=yfree_c.gens,
            ),),
        )
        return _memo_put(key, GVDResult(False, refutation=ref))
    node = GVDNode(
        ideal.ctx.names, gb.basis, "order-compatible", "decompose", evidence,
        shed_var=var, degeneracy=degen.kind, split=split, equality=report,
        degeneracy_records=degen.records,
        coeff_branch=cres.certificate, yfree_branch=nres.certificate,
        records=(("canonical_gb", gb),),
    )
    return _memo_put(key, GVDResult(True, certificate=node))


def is_order_compatible_gvd(
    ideal: Ideal, order: Optional[MonomialOrder] = None
) -> OrderCompatibleResult:
    """Decide order-compatible decomposability under a lex order.

    Runs the direct recursion (shedding the greatest remaining variable at
    every node) and, independently, the initial-ideal route: the initial
    ideal under the order must be squarefree and its complex must be
    vertex decomposable shedding greatest-first.  The verdicts are
    cross-checked and a disagreement raises, since the two are provably
    equivalent.
    """
    order = order or natural_order(ideal.ctx)
    if order.ctx != ideal.ctx:
        raise BadParameter("order is over a different context")
    names_desc = tuple(ideal.ctx.names[i] for i in order.perm)

    direct = _oc_direct(ideal, names_desc)

    init = initial_ideal(ideal, order)
    squarefree = all(
        all(x <= 1 for x in e)
        for g in init.gens
        for e, _ in g.terms
    )
    complex_result = None
    via_ok = False
    if squarefree:
        delta = complex_of(init)
        complex_result = vertex_decomposable(
            delta, "pure", vertex_order=names_desc
        )
        via_ok = complex_result.decomposable

    if direct.decomposable != via_ok:
        raise StrategyDisagreement(
            f"direct recursion says {direct.decomposable}, initial-complex "
            f"route says {via_ok} under order {' > '.join(names_desc)}"
        )
    return OrderCompatibleResult(
        direct.decomposable, names_desc, direct, squarefree,
        complex_result, init,
    )


# ---------------------------------------------------------------------------
# the not-necessarily-unmixed check


@dataclass(frozen=True, eq=False)
class NonpureReport:
    holds: bool
    case: str  # "equal-radicals" | "disjoint-minimal-primes" | "fails"
    detail: str
    equality_holds: bool
    coeff_min_primes: tuple
    yfree_min_primes: tuple
    split: GeometricSplit


def monomial_min_primes(ideal: Ideal) -> tuple:
    """Minimal primes of a monomial ideal: minimal transversals of the
    generator supports, as sorted variable tuples."""
    if not ideal.is_monomial_ideal():
        raise NotMonomial("minimal primes computed exactly only for monomial ideals")
    names = ideal.ctx.names
    supports = []
    for g in ideal.nonzero_gens():
        e, _ = g.terms[0]
        supports.append({names[i] for i, x in enumerate(e) if x})
    return tuple(
        tuple(sorted(t, key=names.index)) for t in minimal_transversals(supports)
    )


def nonpure_gvd_check(
    ideal: Ideal,
    var: str,
    asserted_min_primes: Optional[tuple] = None,
) -> NonpureReport:
    """The decomposition test without unmixedness: the defining equality
    must hold and additionally either the coefficient and y-free ideals
    have equal radicals, or they share no minimal prime.

    Exact for monomial ideals; for other ideals the caller must assert the
    two minimal-prime families (assisted mode).
    """
    report = verify_split(ideal, var, cross_checks=False)
    split = report.split
    if asserted_min_primes is not None:
        coeff_mp, yfree_mp = asserted_min_primes
        coeff_mp = tuple(tuple(p) for p in coeff_mp)
        yfree_mp = tuple(tuple(p) for p in yfree_mp)
    else:
        coeff_mp = monomial_min_primes(split.coeff_ideal)
        yfree_mp = monomial_min_primes(split.yfree_ideal)
    if not report.holds:
        return NonpureReport(
            False, "fails", "decomposition equality fails",
            False, coeff_mp, yfree_mp, split,
        )
    if set(coeff_mp) == set(yfree_mp):
        return NonpureReport(
            True, "equal-radicals",
            "coefficient and y-free ideals have the same minimal primes",
            True, coeff_mp, yfree_mp, split,
        )
    shared = sorted(set(coeff_mp) & set(yfree_mp))
    if not shared:
        return NonpureReport(
            True, "disjoint-minimal-primes",
            "no minimal prime is shared",
            True, coeff_mp, yfree_mp, split,
        )
    return NonpureReport(
        False, "fails",
        "shared minimal prime <" + " ".join(shared[0]) + ">",
        True, coeff_mp, yfree_mp, split,
    )
