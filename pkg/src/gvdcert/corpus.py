"""Deterministic generator families for experiments and regression suites.

  * minors(r, m, n): the r x r minors of an m x n generic matrix;
  * hankel(d): the 2 x 2 minors of the 2 x (d) catalecticant matrix
    [[x_0 .. x_{d-1}], [x_1 .. x_d]], cutting out the degree-d rational
    normal curve;
  * schubert(w): the Schubert determinantal ideal of a permutation, via
    rank conditions on northwest submatrices restricted to the essential
    set, in a ring ordered so that every minor leads with its antidiagonal
    term;
  * stanley_reisner_file(facets): the squarefree monomial ideal of the
    complex generated by the given facets.

Each returns printable file data (see parsing.print_ideal_file), so the
same family feeds both the command line and the test suites.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .errors import BadParameter
from .fields import Field, QQ
from .groebner import Ideal
from .parsing import IdealFileData, ideal_file_for
from .poly import Polynomial, VarContext, natural_order
from .simplicial import SimplicialComplex, stanley_reisner


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _det(ctx: VarContext, field: Field, entries) -> Polynomial:
    """Leibniz determinant of a square matrix of variable names."""
    k = len(entries)
    out = Polynomial.zero(ctx, field)
    for perm in permutations(range(k)):
        e = [0] * len(ctx)
        for row in range(k):
            e[ctx.index(entries[row][perm[row]])] += 1
        out = out + Polynomial.monomial(
            ctx, field, tuple(e), field.from_int(_perm_sign(perm))
        )
    return out


def _lead_positive(g: Polynomial) -> Polynomial:
    """Flip the sign when the ring-order leading coefficient is negative
    (rationals only; prime-field residues carry no sign)."""
    if g.is_zero() or g.field.kind != "QQ":
        return g
    _, c = g.leading_data(natural_order(g.ctx))
    if c < 0:
        return Polynomial.const(g.ctx, g.field, -1) * g
    return g


def _entry_name(i: int, j: int, wide: bool) -> str:
    return f"x{i}_{j}" if wide else f"x{i}{j}"


def minors(r: int, m: int, n: int, field: Field = QQ) -> IdealFileData:
    """The r x r minors of an m x n matrix of distinct variables, listed by
    ascending row set then column set; variables in row-major order."""
    if r < 1 or m < 1 or n < 1:
        raise BadParameter("minor size and matrix shape must be positive")
    if r > min(m, n):
        raise BadParameter(f"no {r} x {r} minors in an {m} x {n} matrix")
    wide = m > 9 or n > 9
    names = tuple(
        _entry_name(i, j, wide) for i in range(1, m + 1) for j in range(1, n + 1)
    )
    ctx = VarContext(names)
    gens = []
    for rows in combinations(range(1, m + 1), r):
        for cols in combinations(range(1, n + 1), r):
            entries = [
                [_entry_name(i, j, wide) for j in cols] for i in rows
            ]
            gens.append(_lead_positive(_det(ctx, field, entries)))
    return ideal_file_for(Ideal.of(ctx, field, gens))


def hankel(d: int, field: Field = QQ) -> IdealFileData:
    """The 2 x 2 minors x_i x_{j+1} - x_{i+1} x_j (0 <= i < j < d) of the
    catalecticant matrix, in the ring ordered x_d > ... > x_0.  d = 1 gives
    the zero ideal (the matrix has a single column)."""
    if d < 1:
        raise BadParameter("degree must be positive")
    ctx = VarContext(tuple(f"x{k}" for k in range(d, -1, -1)))
    gens = []
    for i, j in combinations(range(d), 2):
        a = Polynomial.variable(ctx, field, f"x{i}")
        b = Polynomial.variable(ctx, field, f"x{j + 1}")
        c = Polynomial.variable(ctx, field, f"x{i + 1}")
        e = Polynomial.variable(ctx, field, f"x{j}")
        gens.append(a * b - c * e)
    return ideal_file_for(Ideal.of(ctx, field, gens))


def _parse_permutation(perm) -> tuple:
    if isinstance(perm, str):
        text = perm.strip()
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
        else:
            parts = list(text)
        try:
            vals = tuple(int(p) for p in parts)
        except ValueError:
            raise BadParameter(f"bad permutation {perm!r}") from None
    else:
        vals = tuple(int(p) for p in perm)
    n = len(vals)
    if n == 0 or sorted(vals) != list(range(1, n + 1)):
        raise BadParameter(f"{vals} is not a permutation of 1..{len(vals)}")
    return vals


def rank_table(perm) -> list:
    """r[i][j] = #{k <= i : w(k) <= j} for 1 <= i, j <= n (one-based)."""
    w = _parse_permutation(perm)
    n = len(w)
    r = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            r[i][j] = sum(1 for k in range(1, i + 1) if w[k - 1] <= j)
    return r


def diagram(perm) -> set:
    """The cells (i, j) with w(i) > j and w^{-1}(j) > i (one-based)."""
    w = _parse_permutation(perm)
    n = len(w)
    winv = [0] * (n + 1)
    for i, wi in enumerate(w, start=1):
        winv[wi] = i
    return {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if w[i - 1] > j and winv[j] > i
    }


def essential_set(perm) -> list:
    """Southeast corners of the diagram, in row-major order."""
    cells = diagram(perm)
    return sorted(
        (i, j)
        for (i, j) in cells
        if (i + 1, j) not in cells and (i, j + 1) not in cells
    )


def schubert(perm, field: Field = QQ) -> IdealFileData:
    """The Schubert determinantal ideal of a permutation of 1..n.

    For each essential cell (i, j), the (r[i][j] + 1)-minors of the
    northwest i x j submatrix of a generic n x n matrix, deduplicated in
    order of first appearance.  The ring lists row 1 first with columns
    descending within each row, so each minor's leading term under the
    ring order is its antidiagonal."""
    w = _parse_permutation(perm)
    n = len(w)
    wide = n > 9
    names = tuple(
        _entry_name(i, j, wide)
        for i in range(1, n + 1)
        for j in range(n, 0, -1)
    )
    ctx = VarContext(names)
    r = rank_table(w)
    gens = []
    seen = set()
    for (i, j) in essential_set(w):
        size = r[i][j] + 1
        if size > min(i, j):
            continue
        for rows in combinations(range(1, i + 1), size):
            for cols in combinations(range(1, j + 1), size):
                entries = [
                    [_entry_name(a, b, wide) for b in cols] for a in rows
                ]
                g = _lead_positive(_det(ctx, field, entries))
                key = g.terms
                if key not in seen:
                    seen.add(key)
                    gens.append(g)
    return ideal_file_for(Ideal.of(ctx, field, gens))


def stanley_reisner_file(
    facets: Iterable[Iterable[str]],
    vertices: Optional[Sequence[str]] = None,
    field: Field = QQ,
) -> IdealFileData:
    """File data for the Stanley-Reisner ideal of the complex the facets
    generate.  Vertex order defaults to first appearance across facets."""
    facet_lists = [list(f) for f in facets]
    if vertices is None:
        seen: dict = {}
        for f in facet_lists:
            for v in f:
                seen.setdefault(v, None)
        vertices = tuple(seen)
    delta = SimplicialComplex.from_facets(tuple(vertices), facet_lists)
    return ideal_file_for(stanley_reisner(delta, field))
