"""Hypergraph transversal helpers shared by ideal dimension and complex code.

A transversal of a family of sets is a set meeting every member. Minimal
transversals connect the two sides of Stanley-Reisner duality: the facets of
a complex are the complements of the minimal transversals of its ideal's
generator supports, and vice versa. Inputs here are small (desk scale), so a
straightforward Berge product with pruning is enough.
"""

from __future__ import annotations

from typing import FrozenSet, Iterable, List, Sequence


def minimalize(families: Iterable[Iterable]) -> list:
    """Inclusion-minimal members, deduplicated, deterministically sorted."""
    fams = sorted({frozenset(f) for f in families}, key=lambda s: (len(s), sorted(s)))
    out: list = []
    for s in fams:
        if not any(t <= s for t in out):
            out.append(s)
    return out


def minimal_transversals(supports: Sequence[frozenset]) -> list:
    """All minimal transversals of the family.

    With no sets to meet, the empty set is the unique minimal transversal.
    If any member is empty, no transversal exists and the result is [].
    """
    current: list = [frozenset()]
    for s in minimalize(supports):
        if not s:
            return []
        nxt = {t | {v} for t in current for v in s if not (t & s)}
        nxt.update(t for t in current if t & s)
        current = minimalize(nxt)
    return sorted(current, key=lambda t: (len(t), sorted(t)))


def min_transversal_size(supports: Sequence[frozenset]) -> int:
    """Size of a minimum transversal, by branch and bound."""
    mins = minimalize(supports)
    if any(not s for s in mins):
        raise ValueError("no transversal exists: family contains the empty set")
    best = [sum(len(s) for s in mins) + 1]

    def rec(remaining: List[frozenset], chosen: int) -> None:
        if chosen >= best[0]:
            return
        if not remaining:
            best[0] = chosen
            return
        branch = min(remaining, key=len)
        for v in sorted(branch):
            rec([t for t in remaining if v not in t], chosen + 1)

    rec(mins, 0)
    return best[0]
