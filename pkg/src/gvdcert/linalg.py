"""Exact dense linear algebra over a coefficient field.

Only what the rest of the package needs: rank (for simplicial homology) and
one solution of a linear system (for recovering liaison preimages). Matrices
are lists of row lists of field elements; everything stays exact.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .fields import Field


def _echelon(rows: List[list], field: Field, width: int):
    """Row-reduce in place; returns list of (row_index, pivot_col)."""
    pivots = []
    r = 0
    for col in range(width):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [field.mul(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append((r, col))
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(matrix: Sequence[Sequence], field: Field) -> int:
    """Exact rank; the empty matrix (no rows or no columns) has rank 0."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    return len(_echelon(rows, field, len(rows[0])))


def solve(matrix: Sequence[Sequence], rhs: Sequence, field: Field) -> Optional[list]:
    """One exact solution x of A x = b, or None when inconsistent.

    Free variables are set to zero, which keeps the result deterministic.
    """
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    if not rows:
        return []
    width = len(rows[0]) - 1
    pivots = _echelon(rows, field, width)
    for i in range(len(rows)):
        if rows[i][-1] and not any(rows[i][j] for j in range(width)):
            return None
    x = [field.zero] * width
    for r, col in pivots:
        x[col] = rows[r][-1]
    return x
