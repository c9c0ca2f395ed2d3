"""Simplicial complexes: star/link/deletion, Stanley-Reisner transfer,
vertex decomposability (pure, nonpure, order-compatible), monomial primary
decomposition, and Reisner's Cohen-Macaulayness criterion.

Complexes are stored by their facets over an ordered vertex set.  Vertices
that appear in the vertex set but in no facet are allowed; they are
non-faces.  The void complex (no faces at all) and the empty complex
(single facet ``{}``) are distinguished values.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    BadParameter,
    NotMonomial,
    NotSquarefree,
    UnknownVertex,
    VoidComplex,
)
from .fields import QQ, Field
from .groebner import Ideal
from .linalg import rank
from .poly import Polynomial, VarContext
from .transversals import minimal_transversals, minimalize


def _facet_sort_key(vertices: Sequence[str]):
    index = {v: i for i, v in enumerate(vertices)}

    def key(facet: frozenset) -> tuple:
        return tuple(sorted(index[v] for v in facet))

    return key


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its inclusion-maximal faces."""

    vertices: tuple[str, ...]
    facets: tuple[frozenset, ...]

    @staticmethod
    def from_facets(
        vertices: Sequence[str], facets: Iterable[Iterable[str]]
    ) -> "SimplicialComplex":
        vtuple = tuple(vertices)
        vset = set(vtuple)
        if len(vset) != len(vtuple):
            raise BadParameter("duplicate vertices")
        fsets = []
        for f in facets:
            fs = frozenset(f)
            for v in fs:
                if v not in vset:
                    raise UnknownVertex(f"vertex {v!r} not in vertex set")
            fsets.append(fs)
        maximal = [set(f) for f in {frozenset(f) for f in fsets}]
        # drop faces contained in another listed face
        keep = [
            f
            for f in maximal
            if not any(f < g for g in maximal)
        ]
        key = _facet_sort_key(vtuple)
        canon = tuple(sorted((frozenset(f) for f in keep), key=key))
        return SimplicialComplex(vtuple, canon)

    # ---- basic structure -------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == (frozenset(),)

    @property
    def is_simplex(self) -> bool:
        """A single facet (the full simplex on that facet's vertices)."""
        return len(self.facets) == 1

    def face_vertices(self) -> tuple[str, ...]:
        """Vertices that actually occur in a face, in vertex order."""
        present = set().union(*self.facets) if self.facets else set()
        return tuple(v for v in self.vertices if v in present)

    def dim(self) -> int:
        """Dimension: max facet size - 1; -1 for the empty complex.

        Raises VoidComplex for the void complex (it has no faces).
        """
        if self.is_void:
            raise VoidComplex("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        """All facets share one cardinality (vacuously true when void)."""
        sizes = {len(f) for f in self.facets}
        return len(sizes) <= 1

    def has_face(self, face: Iterable[str]) -> bool:
        fs = frozenset(face)
        return any(fs <= g for g in self.facets)

    def faces(self) -> set:
        """Every face, as a set of frozensets (empty for the void complex)."""
        out: set = set()
        for facet in self.facets:
            elems = sorted(facet)
            n = len(elems)
            for mask in range(1 << n):
                out.add(frozenset(elems[i] for i in range(n) if mask >> i & 1))
        return out

    def contains_complex(self, other: "SimplicialComplex") -> bool:
        return all(self.has_face(f) for f in other.facets)

    def same_faces(self, other: "SimplicialComplex") -> bool:
        return self.contains_complex(other) and other.contains_complex(self)

    def canonical_key(self) -> tuple:
        return (self.vertices, self.facets)

    def __str__(self) -> str:
        if self.is_void:
            return "<void complex>"
        parts = []
        index = {v: i for i, v in enumerate(self.vertices)}
        for f in self.facets:
            parts.append("{" + " ".join(sorted(f, key=index.get)) + "}")
        return ", ".join(parts)

    # ---- star / link / deletion -----------------------------------------

    def _check_vertex(self, v: str) -> None:
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v!r} not in vertex set")

    def star(self, v: str) -> "SimplicialComplex":
        """Faces F with F + {v} still a face; void when v is in no face."""
        self._check_vertex(v)
        facets = [f for f in self.facets if v in f]
        return SimplicialComplex.from_facets(self.vertices, facets)

    def link(self, v: str) -> "SimplicialComplex":
        """Faces of the star not containing v."""
        self._check_vertex(v)
        facets = [f - {v} for f in self.facets if v in f]
        return SimplicialComplex.from_facets(self.vertices, facets)

    def deletion(self, v: str) -> "SimplicialComplex":
        """Faces not containing v."""
        self._check_vertex(v)
        facets = [f - {v} for f in self.facets]
        return SimplicialComplex.from_facets(self.vertices, facets)

    def link_of_face(self, face: Iterable[str]) -> "SimplicialComplex":
        """Faces G disjoint from `face` with G + face still a face."""
        fs = frozenset(face)
        if not self.has_face(fs):
            raise UnknownVertex(f"{sorted(fs)!r} is not a face")
        facets = [f - fs for f in self.facets if fs <= f]
        return SimplicialComplex.from_facets(self.vertices, facets)


def star_link_del(
    delta: SimplicialComplex, v: str
) -> tuple[SimplicialComplex, SimplicialComplex, SimplicialComplex]:
    """(star, link, deletion) at v; asserts star and deletion cover delta."""
    st = delta.star(v)
    lk = delta.link(v)
    dl = delta.deletion(v)
    # every facet lies in the star (contains v) or in the deletion
    for f in delta.facets:
        target = st if v in f else dl
        if not target.has_face(f):
            raise AssertionError("star/deletion do not cover the complex")
    return st, lk, dl


# ---- Stanley-Reisner transfer -------------------------------------------


def stanley_reisner(
    delta: SimplicialComplex, field: Field = QQ
) -> Ideal:
    """The squarefree monomial ideal of minimal non-faces of delta.

    A subset is a non-face exactly when it meets the complement of every
    facet, so the minimal non-faces are the minimal transversals of the
    facet complements.  The void complex maps to the unit ideal and the
    empty complex to the ideal of all variables.
    """
    ctx = VarContext(delta.vertices)
    complements = [set(delta.vertices) - set(f) for f in delta.facets]
    nonfaces = minimal_transversals(complements)
    gens = []
    for nf in nonfaces:
        exps = tuple(1 if v in nf else 0 for v in delta.vertices)
        gens.append(Polynomial.monomial(ctx, field, exps))
    return Ideal.of(ctx, field, gens)


def complex_of(ideal: Ideal) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is the given squarefree
    monomial ideal: facets are complements of the minimal transversals of
    the generator supports."""
    ctx = ideal.ctx
    supports = []
    for g in ideal.nonzero_gens():
        if not g.is_monomial():
            raise NotMonomial(f"{g} is not a monomial")
        exps, coeff = g.terms[0]
        if any(e > 1 for e in exps):
            raise NotSquarefree(f"{g} is not squarefree")
        supports.append({ctx.names[i] for i, e in enumerate(exps) if e})
    transversals = minimal_transversals(supports)
    facets = [set(ctx.names) - t for t in transversals]
    return SimplicialComplex.from_facets(ctx.names, facets)


# ---- vertex decomposability ----------------------------------------------


@dataclass(frozen=True)
class VDNode:
    """One node of a vertex-decomposition certificate tree."""

    complex: SimplicialComplex
    mode: str
    case: str  # "empty" | "simplex" | "shed"
    vertex: Optional[str] = None
    link_cert: Optional["VDNode"] = None
    del_cert: Optional["VDNode"] = None

    def to_dict(self) -> dict:
        out = {
            "facets": [sorted(f) for f in self.complex.facets],
            "mode": self.mode,
            "case": self.case,
        }
        if self.vertex is not None:
            out["vertex"] = self.vertex
            out["link"] = self.link_cert.to_dict()
            out["deletion"] = self.del_cert.to_dict()
        return out


@dataclass(frozen=True)
class VDRefutation:
    """Why no shedding vertex works, with one reason per candidate."""

    complex: SimplicialComplex
    mode: str
    reason: str
    tried: tuple[tuple[str, str], ...] = ()

    def to_dict(self) -> dict:
        return {
            "facets": [sorted(f) for f in self.complex.facets],
            "mode": self.mode,
            "reason": self.reason,
            "tried": [list(t) for t in self.tried],
        }


@dataclass(frozen=True)
class VDResult:
    decomposable: bool
    certificate: Optional[VDNode] = None
    refutation: Optional[VDRefutation] = None


_VD_MEMO: dict = {}
_VD_LOCK = threading.Lock()


def _vd_memo_get(key):
    with _VD_LOCK:
        return _VD_MEMO.get(key)


def _vd_memo_put(key, value):
    with _VD_LOCK:
        return _VD_MEMO.setdefault(key, value)


def vertex_decomposable(
    delta: SimplicialComplex,
    mode: str = "pure",
    vertex_order: Optional[Sequence[str]] = None,
) -> VDResult:
    """Decide vertex decomposability and return a certificate tree or a
    refutation.

    mode "pure": classical vertex decomposability; every complex in the
    recursion must be pure.  mode "nonpure": the shedding-vertex notion
    (no facet of the link is a facet of the deletion) without purity.
    Passing vertex_order (vertices listed from greatest to least) with
    mode "pure" restricts the shed at every node to the greatest vertex
    present in the complex and reports mode "order-compatible".

    The void complex and the empty complex are decomposable in all modes.
    Shedding candidates are searched in vertex order and the first
    success wins; certificates are deterministic and memoized.
    """
    if mode not in ("pure", "nonpure"):
        raise BadParameter(f"unknown mode {mode!r}")
    if vertex_order is not None:
        if mode != "pure":
            raise BadParameter("vertex_order requires pure mode")
        missing = set(delta.vertices) - set(vertex_order)
        if missing:
            raise BadParameter(f"vertex_order misses {sorted(missing)!r}")
        return _vd(delta, "order-compatible", tuple(vertex_order))
    return _vd(delta, mode, None)


def _vd(
    delta: SimplicialComplex,
    mode: str,
    order: Optional[tuple[str, ...]],
) -> VDResult:
    key = (delta.canonical_key(), mode, order)
    hit = _vd_memo_get(key)
    if hit is not None:
        return hit

    pure_required = mode in ("pure", "order-compatible")
    if pure_required and not delta.is_pure():
        sizes = sorted({len(f) for f in delta.facets})
        result = VDResult(
            False,
            refutation=VDRefutation(
                delta, mode, f"not pure: facet sizes {sizes}"
            ),
        )
        return _vd_memo_put(key, result)

    if delta.is_void or delta.is_empty_complex or delta.is_simplex:
        case = "simplex" if delta.facets and delta.facets[-1] else "empty"
        result = VDResult(True, certificate=VDNode(delta, mode, case))
        return _vd_memo_put(key, result)

    present = delta.face_vertices()
    if mode == "order-compatible":
        largest = next(v for v in order if v in present)
        candidates = [largest]
    else:
        candidates = list(present)

    tried: list[tuple[str, str]] = []
    for v in candidates:
        lk = delta.link(v)
        dl = delta.deletion(v)
        if mode == "nonpure":
            lk_facets = set(lk.facets)
            shared = [f for f in dl.facets if f in lk_facets]
            if shared:
                tried.append(
                    (v, "link facet {" + " ".join(sorted(shared[0])) + "} is a deletion facet")
                )
                continue
        lk_res = _vd(lk, mode, order)
        if not lk_res.decomposable:
            tried.append((v, f"link not decomposable: {lk_res.refutation.reason}"))
            continue
        dl_res = _vd(dl, mode, order)
        if not dl_res.decomposable:
            tried.append((v, f"deletion not decomposable: {dl_res.refutation.reason}"))
            continue
        node = VDNode(
            delta,
            mode,
            "shed",
            vertex=v,
            link_cert=lk_res.certificate,
            del_cert=dl_res.certificate,
        )
        return _vd_memo_put(key, VDResult(True, certificate=node))

    result = VDResult(
        False,
        refutation=VDRefutation(
            delta, mode, "no shedding vertex", tuple(tried)
        ),
    )
    return _vd_memo_put(key, result)


# ---- monomial primary decomposition --------------------------------------


def _min_exps(exps: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Minimal monomial generators: drop multiples of another generator."""
    uniq = sorted(set(exps))
    keep = []
    for e in uniq:
        if not any(
            f != e and all(fi <= ei for fi, ei in zip(f, e)) for f in uniq
        ):
            keep.append(e)
    return keep


def _exp_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_intersect(
    gens_a: list[tuple[int, ...]], gens_b: list[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    """Intersection of two monomial ideals via pairwise lcms."""
    return _min_exps([_exp_lcm(a, b) for a in gens_a for b in gens_b])


def _split_irreducible(
    gens: list[tuple[int, ...]],
) -> list[list[tuple[int, ...]]]:
    """Recursively split a monomial ideal into irreducible components,
    each generated by pure variable powers."""
    gens = _min_exps(gens)
    for g in gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) > 1:
            i = support[0]
            u = tuple(e if j == i else 0 for j, e in enumerate(g))
            v = tuple(0 if j == i else e for j, e in enumerate(g))
            rest = [h for h in gens if h != g]
            return _split_irreducible(rest + [u]) + _split_irreducible(
                rest + [v]
            )
    return [gens]


@dataclass(frozen=True)
class MonomialPrimaryDecomposition:
    """Irredundant decomposition into pure-power (irreducible, hence
    primary) monomial ideals, with the deduplicated radicals."""

    ideal: Ideal
    components: tuple[Ideal, ...]
    associated_primes: tuple[tuple[str, ...], ...]

    def is_unmixed(self) -> bool:
        heights = {len(p) for p in self.associated_primes}
        return len(heights) <= 1


def monomial_ass_primes(ideal: Ideal) -> MonomialPrimaryDecomposition:
    """Associated primes of a monomial ideal by coprime splitting into
    irreducible components; the intersection is re-verified exactly."""
    ctx, field = ideal.ctx, ideal.field
    exps = []
    for g in ideal.nonzero_gens():
        if not g.is_monomial():
            raise NotMonomial(f"{g} is not a monomial")
        exps.append(g.terms[0][0])
    if any(not any(e) for e in exps):  # a unit generator
        unit = Ideal.of(ctx, field, [Polynomial.const(ctx, field, field.one)])
        return MonomialPrimaryDecomposition(ideal, (unit,), ())
    if not exps:
        zero = Ideal.of(ctx, field, [])
        return MonomialPrimaryDecomposition(ideal, (zero,), ((),))

    components = [_min_exps(c) for c in _split_irreducible(exps)]
    # irredundancy: drop any component containing the intersection of the rest
    changed = True
    while changed:
        changed = False
        for i in range(len(components)):
            rest = components[:i] + components[i + 1 :]
            if not rest:
                break
            inter = rest[0]
            for c in rest[1:]:
                inter = monomial_intersect(inter, c)
            if _contains_monomial(components[i], inter):
                components = rest
                changed = True
                break
    # exact verification: components intersect back to the input
    inter = components[0]
    for c in components[1:]:
        inter = monomial_intersect(inter, c)
    if sorted(inter) != sorted(_min_exps(exps)):
        raise AssertionError("primary decomposition failed verification")

    def to_ideal(comp: list[tuple[int, ...]]) -> Ideal:
        return Ideal.of(
            ctx, field, [Polynomial.monomial(ctx, field, e) for e in comp]
        )

    radicals = []
    for comp in components:
        prime = tuple(
            ctx.names[i]
            for i in range(len(ctx.names))
            if any(e[i] for e in comp)
        )
        if prime not in radicals:
            radicals.append(prime)
    return MonomialPrimaryDecomposition(
        ideal,
        tuple(to_ideal(sorted(c)) for c in components),
        tuple(radicals),
    )


def _contains_monomial(
    gens: list[tuple[int, ...]], others: list[tuple[int, ...]]
) -> bool:
    """Whether the monomial ideal of `gens` contains every one of `others`."""
    return all(
        any(all(gi <= oi for gi, oi in zip(g, o)) for g in gens)
        for o in others
    )


def monomial_unmixed(ideal: Ideal) -> bool:
    """Exact unmixedness of a monomial ideal via associated primes."""
    return monomial_ass_primes(ideal).is_unmixed()


# ---- Reisner's criterion --------------------------------------------------


def _reduced_homology_ranks(
    faces: set, vertices: Sequence[str], field: Field
) -> list[int]:
    """Ranks of the reduced homology of a face set, indexed from dim 0."""
    index = {v: i for i, v in enumerate(vertices)}
    by_dim: dict[int, list[tuple]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(
            tuple(sorted(f, key=index.get))
        )
    top = max(by_dim)
    for d in by_dim:
        by_dim[d].sort()
    pos = {
        d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()
    }

    def boundary_rank(d: int) -> int:
        """Rank of the boundary map from dimension d to d - 1."""
        if d <= -1 or d not in by_dim or (d - 1) not in by_dim:
            return 0
        rows, cols = by_dim[d - 1], by_dim[d]
        matrix = [[field.zero for _ in cols] for _ in rows]
        one = field.one
        for j, face in enumerate(cols):
            sign = one
            for k in range(len(face)):
                sub = face[:k] + face[k + 1 :]
                matrix[pos[d - 1][sub]][j] = sign
                sign = field.neg(sign)
        return rank(matrix, field)

    ranks = []
    for d in range(0, top + 1):
        n_d = len(by_dim.get(d, []))
        ranks.append(n_d - boundary_rank(d) - boundary_rank(d + 1))
    return ranks


def reisner_cm(delta: SimplicialComplex, field: Field = QQ) -> bool:
    """Cohen-Macaulayness of the Stanley-Reisner ring over `field`:
    for every face, the reduced homology of its link vanishes below the
    link's dimension."""
    if delta.is_void:
        raise VoidComplex("Reisner's criterion needs a nonvoid complex")
    all_faces = delta.faces()
    seen: set = set()
    for face in sorted(all_faces, key=len):
        link_faces = {g - face for g in all_faces if face <= g}
        key = frozenset(link_faces)
        if key in seen:
            continue
        seen.add(key)
        link_dim = max(len(g) for g in link_faces) - 1
        if link_dim <= 0:
            # below dimension 0 only reduced H_{-1} could fail to vanish,
            # and it vanishes whenever the link has a vertex
            continue
        ranks = _reduced_homology_ranks(link_faces, delta.vertices, field)
        if any(ranks[i] != 0 for i in range(link_dim)):
            return False
    return True
