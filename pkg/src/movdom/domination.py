"""Domination predicates and pair-movability search.

All set arguments are int bitmasks over the graph's vertices.  The
movability disjunction for a pair (x, y) inside a set T: either
T \\ {x, y} still satisfies the base predicate, or some outside pair
(u, v) with u ~ x and v ~ y makes (T \\ {x, y}) | {u, v} satisfy it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, bits


@dataclass(frozen=True)
class MoveWitness:
    """Evidence that pair (x, y) of a witnessed set is movable."""

    x: int
    y: int
    action: str  # "remove" | "replace"
    u: Optional[int] = None
    v: Optional[int] = None

    def __post_init__(self):
        if self.action not in ("remove", "replace"):
            raise ValueError(f"bad action {self.action!r}")
        if self.action == "replace" and (self.u is None or self.v is None):
            raise ValueError("replace witness needs u and v")
        if self.action == "remove" and not (self.u is None and self.v is None):
            raise ValueError("remove witness carries no replacements")


def closed_neighborhood(g: Graph, s: int) -> int:
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return (out | s) if s else 0


def open_neighborhood(g: Graph, s: int) -> int:
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out


def is_dominating(g: Graph, s: int) -> bool:
    return closed_neighborhood(g, s) == g.full_mask


def is_total_dominating(g: Graph, s: int) -> bool:
    return open_neighborhood(g, s) == g.full_mask


def _passes(g: Graph, s: int, total: bool) -> bool:
    if total:
        return is_total_dominating(g, s)
    return is_dominating(g, s)


def find_pair_move(
    g: Graph,
    t: int,
    x: int,
    y: int,
    total: bool,
    allow_equal_replacements: bool = False,
) -> Optional[MoveWitness]:
    """Search the movability disjunction for one unordered pair of t.

    Removal is tried first; otherwise replacements (u, v), u an outside
    neighbor of x and v an outside neighbor of y, in ascending (u, v)
    order.  Iterating all ordered (u, v) also covers the swapped
    role assignment, so callers pass each unordered pair once.
    Returns None when no move exists.
    """
    if x == y:
        raise ValueError("pair vertices must be distinct")
    if not (t >> x & 1) or not (t >> y & 1):
        raise ValueError(f"pair ({x},{y}) not contained in the set")
    if not _passes(g, t, total):
        raise ValueError("set fails the base predicate")
    base = t & ~((1 << x) | (1 << y))
    if _passes(g, base, total):
        return MoveWitness(x, y, "remove")
    outside = g.full_mask & ~t
    u_cands = g.adj[x] & outside
    v_cands = g.adj[y] & outside
    for u in bits(u_cands):
        bu = 1 << u
        for v in bits(v_cands):
            if u == v and not allow_equal_replacements:
                continue
            if _passes(g, base | bu | (1 << v), total):
                return MoveWitness(x, y, "replace", u, v)
    return None


def is_2movable(
    g: Graph,
    t: int,
    total: bool,
    allow_equal_replacements: bool = False,
):
    """Decide 2-movability of t under the chosen base predicate.

    Returns (True, witnesses) with one MoveWitness per unordered pair,
    or (False, failing_pair).  A failing base predicate reports the
    pair (None, None).  Sets of size < 2 are vacuously 2-movable when
    the base predicate holds (arises only for the non-total kind).
    """
    if not _passes(g, t, total):
        return False, (None, None)
    members = list(bits(t))
    witnesses: list[MoveWitness] = []
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            x, y = members[i], members[j]
            w = find_pair_move(g, t, x, y, total, allow_equal_replacements)
            if w is None:
                return False, (x, y)
            witnesses.append(w)
    return True, witnesses


def apply_move(t: int, w: MoveWitness) -> int:
    """Resulting set after performing a witnessed move on t."""
    out = t & ~((1 << w.x) | (1 << w.y))
    if w.action == "replace":
        out |= (1 << w.u) | (1 << w.v)
    return out
