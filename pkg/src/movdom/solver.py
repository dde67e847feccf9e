"""Exact minimum-cardinality solvers for the four domination invariants.

`solve` enumerates candidate sets in ascending cardinality, skipping
only sets that fail the kind's base predicate (provably sound: every
2-movable set is in particular a (total) dominating set).  `solve_naive`
is the independent oracle: it pushes every one of the 2^p subsets
through a table-driven re-statement of the predicate with no pruning.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .domination import MoveWitness, find_pair_move, is_2movable
from .formats import Certificate, write_graph6
from .graphs import Graph, LimitExceededError, mask_of

KINDS = ("gamma", "gamma_t", "gamma_m2", "gamma_mt2")
_TOTAL = {"gamma": False, "gamma_t": True, "gamma_m2": False, "gamma_mt2": True}
_MOVABLE = {"gamma": False, "gamma_t": False, "gamma_m2": True, "gamma_mt2": True}

NAIVE_MAX_ORDER = 16
ALLSETS_MAX_ORDER = 20


@dataclass
class SolveStats:
    subsets_examined: int = 0
    elapsed: float = 0.0


@dataclass
class InvariantResult:
    kind: str
    value: Optional[int]
    certificate: Certificate
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def nonexistent(self) -> bool:
        return self.value is None


def _check_kind(kind: str):
    if kind not in KINDS:
        raise ValueError(f"unknown invariant kind {kind!r}; expected one of {KINDS}")


def _base_passes(g: Graph, s: int, total: bool) -> bool:
    cover = 0
    m = s
    while m:
        low = m & -m
        cover |= g.adj[low.bit_length() - 1]
        m ^= low
    if not total:
        cover |= s
    return cover == g.full_mask


def _predicate_mask(g: Graph, s: int, kind: str, allow_eq: bool) -> bool:
    if not _base_passes(g, s, _TOTAL[kind]):
        return False
    if not _MOVABLE[kind]:
        return True
    ok, _ = is_2movable(g, s, _TOTAL[kind], allow_eq)
    return ok


def _certificate(g: Graph, kind: str, value, witness_mask, moves) -> Certificate:
    witness = tuple(sorted_bits(witness_mask)) if witness_mask is not None else ()
    return Certificate(
        kind=kind,
        graph6=write_graph6(g),
        value=value,
        nonexistent=value is None,
        witness=witness,
        moves=tuple(moves),
    )


def sorted_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def solve(g: Graph, kind: str, allow_equal_replacements: bool = False) -> InvariantResult:
    """First passing set in (cardinality, lexicographic) order, or nonexistence."""
    _check_kind(kind)
    if g.p < 1:
        raise ValueError("graph must have at least one vertex")
    start = time.perf_counter()
    total = _TOTAL[kind]
    movable = _MOVABLE[kind]
    stats = SolveStats()
    k_min = 2 if total else 1
    for k in range(k_min, g.p + 1):
        for combo in combinations(range(g.p), k):
            stats.subsets_examined += 1
            s = mask_of(combo)
            if not _base_passes(g, s, total):
                continue
            moves: list[MoveWitness] = []
            if movable:
                ok, detail = is_2movable(g, s, total, allow_equal_replacements)
                if not ok:
                    continue
                moves = detail
            stats.elapsed = time.perf_counter() - start
            return InvariantResult(kind, k, _certificate(g, kind, k, s, moves), stats)
    stats.elapsed = time.perf_counter() - start
    return InvariantResult(kind, None, _certificate(g, kind, None, None, []), stats)


def _open_table(g: Graph) -> list[int]:
    """open_neighborhood(S) for every subset mask S, by subset DP."""
    table = [0] * (1 << g.p)
    for m in range(1, 1 << g.p):
        low = m & -m
        table[m] = table[m ^ low] | g.adj[low.bit_length() - 1]
    return table


def solve_naive(g: Graph, kind: str, allow_equal_replacements: bool = False) -> InvariantResult:
    """Unpruned oracle: test all 2^p subsets, keep the minimum-cardinality
    lexicographically-least passing set."""
    _check_kind(kind)
    if g.p > NAIVE_MAX_ORDER:
        raise LimitExceededError(f"naive oracle limited to p <= {NAIVE_MAX_ORDER}")
    start = time.perf_counter()
    total = _TOTAL[kind]
    movable = _MOVABLE[kind]
    full = g.full_mask
    open_t = _open_table(g)
    nbr_lists = [sorted_bits(g.adj[v]) for v in range(g.p)]

    def passes(m: int) -> bool:
        cover = open_t[m] if total else (open_t[m] | m)
        if cover != full:
            return False
        if not movable:
            return True
        members = sorted_bits(m)
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                x, y = members[i], members[j]
                base = m & ~((1 << x) | (1 << y))
                cov = open_t[base] if total else (open_t[base] | base)
                if cov == full:
                    continue
                found = False
                for u in nbr_lists[x]:
                    if m >> u & 1:
                        continue
                    bu = 1 << u
                    for v in nbr_lists[y]:
                        if m >> v & 1:
                            continue
                        if u == v and not allow_equal_replacements:
                            continue
                        nm = base | bu | (1 << v)
                        cov = open_t[nm] if total else (open_t[nm] | nm)
                        if cov == full:
                            found = True
                            break
                    if found:
                        break
                if not found:
                    return False
        return True

    stats = SolveStats()
    best_key = None
    best_mask = None
    for m in range(1, 1 << g.p):
        stats.subsets_examined += 1
        if passes(m):
            key = (m.bit_count(), tuple(sorted_bits(m)))
            if best_key is None or key < best_key:
                best_key = key
                best_mask = m
    stats.elapsed = time.perf_counter() - start
    if best_mask is None:
        return InvariantResult(kind, None, _certificate(g, kind, None, None, []), stats)
    moves: list[MoveWitness] = []
    if movable:
        _, moves = is_2movable(g, best_mask, total, allow_equal_replacements)
    value = best_mask.bit_count()
    return InvariantResult(
        kind, value, _certificate(g, kind, value, best_mask, moves), stats
    )


def all_minimum_sets(
    g: Graph, kind: str, allow_equal_replacements: bool = False
) -> list[int]:
    """Every minimum-cardinality passing set as a bitmask, lexicographic
    order; empty list when no set of any size passes."""
    _check_kind(kind)
    if g.p > ALLSETS_MAX_ORDER:
        raise LimitExceededError(f"all_minimum_sets limited to p <= {ALLSETS_MAX_ORDER}")
    total = _TOTAL[kind]
    k_min = 2 if total else 1
    for k in range(k_min, g.p + 1):
        found = []
        for combo in combinations(range(g.p), k):
            s = mask_of(combo)
            if _predicate_mask(g, s, kind, allow_equal_replacements):
                found.append(s)
        if found:
            return found
    return []


def recheck_certificate(g: Graph, c: Certificate, allow_equal_replacements: bool = False) -> bool:
    """Re-verify a certificate against its graph: witness passes the
    kind's predicate and each recorded move re-validates."""
    if c.nonexistent:
        return solve(g, c.kind, allow_equal_replacements).value is None
    s = mask_of(c.witness)
    if len(c.witness) != (c.value or 0):
        return False
    if not _predicate_mask(g, s, c.kind, allow_equal_replacements):
        return False
    for w in c.moves:
        got = find_pair_move(g, s, w.x, w.y, _TOTAL[c.kind], allow_equal_replacements)
        if got is None:
            return False
    return True
