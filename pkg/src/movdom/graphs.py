"""Immutable simple-graph representation with bitset adjacency rows.

Vertices are dense integers 0..p-1. A vertex set is a plain Python int
used as a bitmask (bit v set <=> vertex v is a member), so all set
algebra is int bit-ops. The library is deliberately capped at p <= 64
so a row always fits one machine word in any port of this design.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

MAX_VERTICES = 64
ENUM_MAX_ORDER = 7  # 2^21 edge masks is the desk-scale ceiling
RANDOM_MAX_REJECTIONS = 10**6

FAMILY_KINDS = ("path", "cycle", "complete", "star", "empty")


class LimitExceededError(Exception):
    """Raised when an input exceeds a documented desk-scale bound."""


class RandomGraphExhaustedError(Exception):
    """Rejection sampling failed to produce a connected graph."""


def bits(mask: int):
    """Iterate the set vertex indices of a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def triangle_pairs(n: int):
    """Upper-triangle vertex pairs (i, j), i < j, in column order.

    Pair (i, j) has index j*(j-1)//2 + i.  This is the same bit order
    graph6 uses for its adjacency bitstream.
    """
    for j in range(1, n):
        for i in range(j):
            yield i, j


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: order p, bitmask adjacency row per vertex."""

    p: int
    adj: tuple[int, ...]

    @property
    def q(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.p) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        for i, j in triangle_pairs(self.p):
            if self.adj[i] >> j & 1:
                yield i, j

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int):
        return bits(self.adj[v])

    def induced(self, vertices: list[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is vertices[i]."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))


def make_graph(p: int, edges) -> Graph:
    """Build a Graph from an edge list; duplicate edges collapse silently."""
    if p < 0 or p > MAX_VERTICES:
        raise LimitExceededError(f"order {p} outside supported range 0..{MAX_VERTICES}")
    rows = [0] * p
    for u, v in edges:
        if not (0 <= u < p and 0 <= v < p):
            raise ValueError(f"edge endpoint out of range: ({u},{v}) with p={p}")
        if u == v:
            raise ValueError(f"loop edge ({u},{u}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(p, tuple(rows))


def family(kind: str, n: int) -> Graph:
    """Canonical labeled graph families: path, cycle, complete, star, empty."""
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family {kind!r}")
    if n < 1:
        raise ValueError("family order must be >= 1")
    if kind == "empty":
        return make_graph(n, [])
    if kind == "path":
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycle requires n >= 3")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return make_graph(n, list(itertools.combinations(range(n), 2)))
    # star: center 0
    return make_graph(n, [(0, i) for i in range(1, n)])


def join(g: Graph, h: Graph) -> Graph:
    """Join G+H: disjoint union plus every G-H cross edge.

    H's vertex i is relabeled g.p + i.
    """
    if g.p < 1 or h.p < 1:
        raise ValueError("join operands must be non-empty")
    p = g.p + h.p
    if p > MAX_VERTICES:
        raise LimitExceededError(f"join order {p} exceeds {MAX_VERTICES}")
    h_all = ((1 << h.p) - 1) << g.p
    g_all = (1 << g.p) - 1
    rows = [g.adj[v] | h_all for v in range(g.p)]
    rows += [(h.adj[v] << g.p) | g_all for v in range(h.p)]
    return Graph(p, tuple(rows))


@dataclass(frozen=True)
class CoronaLayout:
    """Vertex-id bookkeeping for a corona product.

    Vertex a of G keeps id a ("center"); vertex j of copy H^a gets id
    g_order + a*h_order + j.
    """

    g_order: int
    h_order: int

    @property
    def total_order(self) -> int:
        return self.g_order * (1 + self.h_order)

    def copy_vertex(self, a: int, j: int) -> int:
        return self.g_order + a * self.h_order + j

    def is_center(self, vid: int) -> bool:
        return vid < self.g_order

    def copy_of(self, vid: int) -> int:
        """Center index a of the copy holding vid (vid itself for centers)."""
        if vid < self.g_order:
            return vid
        return (vid - self.g_order) // self.h_order

    def within_copy(self, vid: int) -> int:
        """H-label of a copy vertex."""
        if vid < self.g_order:
            raise ValueError(f"vertex {vid} is a center, not a copy vertex")
        return (vid - self.g_order) % self.h_order

    def copy_vertices(self, a: int) -> list[int]:
        base = self.g_order + a * self.h_order
        return list(range(base, base + self.h_order))

    def copy_mask(self, a: int) -> int:
        return ((1 << self.h_order) - 1) << (self.g_order + a * self.h_order)

    def centers_mask(self) -> int:
        return (1 << self.g_order) - 1


def corona(g: Graph, h: Graph) -> tuple[Graph, CoronaLayout]:
    """Corona G∘H: one copy H^a per vertex a of G, a joined to all of H^a."""
    if g.p < 1 or h.p < 1:
        raise ValueError("corona operands must be non-empty")
    layout = CoronaLayout(g.p, h.p)
    p = layout.total_order
    if p > MAX_VERTICES:
        raise LimitExceededError(f"corona order {p} exceeds {MAX_VERTICES}")
    rows = [0] * p
    for a in range(g.p):
        rows[a] = g.adj[a] | layout.copy_mask(a)
        base = g.p + a * h.p
        for j in range(h.p):
            rows[base + j] = (h.adj[j] << base) | (1 << a)
    return Graph(p, tuple(rows)), layout


def is_connected(g: Graph) -> bool:
    """Bitset BFS from vertex 0."""
    if g.p < 1:
        raise ValueError("connectivity undefined for the empty graph")
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= g.adj[v]
        frontier = reach & ~seen
        seen |= reach
    return seen == g.full_mask


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph on n vertices from an upper-triangle edge bitmask (column order)."""
    rows = [0] * n
    k = 0
    for i, j in triangle_pairs(n):
        if mask >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        k += 1
    return Graph(n, tuple(rows))


def enumerate_connected(n: int):
    """Yield every labeled connected graph on n vertices exactly once.

    Order: ascending upper-triangle edge bitmask (column order).
    Counts for n = 1..6: 1, 1, 4, 38, 728, 26704.
    """
    if not 1 <= n <= ENUM_MAX_ORDER:
        raise LimitExceededError(f"enumeration supports 1 <= n <= {ENUM_MAX_ORDER}")
    if n == 1:
        yield Graph(1, (0,))
        return
    m = n * (n - 1) // 2
    pairs = list(triangle_pairs(n))
    full = (1 << n) - 1
    for mask in range(1 << m):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= rows[low.bit_length() - 1]
                f ^= low
            frontier = reach & ~seen
            seen |= reach
        if seen == full:
            yield Graph(n, tuple(rows))


class _SplitMix64:
    """splitmix64 PRNG (Steele, Lea & Flood), fixed so that seeded runs
    reproduce bit-for-bit in any language."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def next_unit(self) -> float:
        # 53-bit mantissa, uniform in [0, 1)
        return (self.next_u64() >> 11) / float(1 << 53)


def random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """One G(n, edge_prob) draw; edges sampled in column pair order."""
    rng = _SplitMix64(seed)
    return _sample(n, edge_prob, rng)


def _sample(n: int, edge_prob: float, rng: _SplitMix64) -> Graph:
    rows = [0] * n
    for i, j in triangle_pairs(n):
        if rng.next_unit() < edge_prob:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def random_connected(n: int, edge_prob: float, seed: int) -> Graph:
    """Rejection-sample G(n, edge_prob) until connected; deterministic per seed."""
    if not 0 < edge_prob <= 1:
        raise ValueError("edge_prob must be in (0, 1]")
    if n < 1 or n > MAX_VERTICES:
        raise LimitExceededError(f"order {n} outside supported range 1..{MAX_VERTICES}")
    rng = _SplitMix64(seed)
    for _ in range(RANDOM_MAX_REJECTIONS):
        g = _sample(n, edge_prob, rng)
        if is_connected(g):
            return g
    raise RandomGraphExhaustedError(
        f"no connected graph after {RANDOM_MAX_REJECTIONS} samples "
        f"(n={n}, edge_prob={edge_prob}, seed={seed})"
    )
