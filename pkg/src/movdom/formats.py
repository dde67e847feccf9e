"""graph6 and edge-list parsing/writing, certificate and report serialization.

graph6 (short form, n <= 62 only): first byte n+63; the remaining
bytes each carry 6 adjacency bits (byte value - 63, MSB first),
concatenated in upper-triangle column order x(0,1), x(0,2), x(1,2),
x(0,3), ...  Pad bits must be zero on write; nonzero pads are accepted
with a warning on read.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

from .domination import MoveWitness
from .graphs import Graph, LimitExceededError, triangle_pairs

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62


class GraphFormatError(Exception):
    """Malformed graph6 or edge-list input."""


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise GraphFormatError("empty graph6 string")
    data = line.encode("ascii", errors="replace")
    for b in data:
        if not 63 <= b <= 126:
            raise GraphFormatError(f"graph6 byte {b} outside 63..126")
    n = data[0] - 63
    if n == 63:
        raise GraphFormatError("long-form graph6 (n > 62) unsupported")
    nbits = n * (n - 1) // 2
    stream = 0
    got = 0
    for b in data[1:]:
        stream = (stream << 6) | (b - 63)
        got += 6
    if got < nbits:
        raise GraphFormatError(f"bit-stream too short: {got} bits, need {nbits}")
    pad = got - nbits
    if pad and stream & ((1 << pad) - 1):
        warnings.warn("graph6 string has nonzero padding bits", stacklevel=2)
    rows = [0] * n
    k = nbits - 1
    for i, j in triangle_pairs(n):
        # bit for pair index t sits at stream position got-1-t (MSB first)
        if stream >> (pad + k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        k -= 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    if g.p > GRAPH6_MAX_ORDER:
        raise LimitExceededError(f"graph6 short form limited to p <= {GRAPH6_MAX_ORDER}")
    n = g.p
    out = [n + 63]
    nbits = n * (n - 1) // 2
    stream = 0
    for i, j in triangle_pairs(n):
        stream = (stream << 1) | (g.adj[i] >> j & 1)
    pad = (-nbits) % 6
    stream <<= pad
    for shift in range(nbits + pad - 6, -1, -6):
        out.append((stream >> shift & 0x3F) + 63)
    return bytes(out).decode("ascii")


def parse_edgelist(text: str) -> Graph:
    """Edge-list format: header line "n m", then m lines "u v", 0-based.

    '#' starts a comment.  A declared m that disagrees with the
    deduplicated edge count only warns.
    """
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if not lines:
        raise GraphFormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"bad header line {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as e:
        raise GraphFormatError(f"bad header line {lines[0]!r}") from e
    if n < 0:
        raise GraphFormatError(f"negative order {n}")
    if n > 64:
        raise LimitExceededError(f"order {n} exceeds the 64-vertex bound")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(lines) - 1} lines")
    edges = []
    for body in lines[1:]:
        parts = body.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {body!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise GraphFormatError(f"bad edge line {body!r}") from e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range in {body!r} (n={n})")
        if u == v:
            raise GraphFormatError(f"loop edge in {body!r}")
        edges.append((u, v))
    g_rows = [0] * n
    for u, v in edges:
        g_rows[u] |= 1 << v
        g_rows[v] |= 1 << u
    g = Graph(n, tuple(g_rows))
    if g.q != m:
        warnings.warn(f"declared size {m} != deduplicated size {g.q}", stacklevel=2)
    return g


@dataclass(frozen=True)
class Certificate:
    """Self-contained, re-checkable witness for one invariant value.

    Embeds the graph as a graph6 string; for 2-movable kinds every
    unordered pair of the witness appears exactly once in moves.
    """

    kind: str
    graph6: str
    value: int | None
    nonexistent: bool
    witness: tuple[int, ...] = ()
    moves: tuple[MoveWitness, ...] = field(default=())


def _move_to_dict(w: MoveWitness) -> dict:
    d = {"x": w.x, "y": w.y, "action": w.action}
    if w.action == "replace":
        d["u"] = w.u
        d["v"] = w.v
    return d


def _move_from_dict(d: dict) -> MoveWitness:
    return MoveWitness(d["x"], d["y"], d["action"], d.get("u"), d.get("v"))


def certificate_to_dict(c: Certificate) -> dict:
    return {
        "kind": c.kind,
        "graph6": c.graph6,
        "value": c.value,
        "nonexistent": c.nonexistent,
        "witness": list(c.witness),
        "moves": [_move_to_dict(w) for w in c.moves],
    }


def certificate_from_dict(d: dict) -> Certificate:
    return Certificate(
        kind=d["kind"],
        graph6=d["graph6"],
        value=d["value"],
        nonexistent=d["nonexistent"],
        witness=tuple(d["witness"]),
        moves=tuple(_move_from_dict(m) for m in d["moves"]),
    )


def emit_certificate(c: Certificate) -> str:
    """Deterministic key-ordered JSON; parse_certificate inverts it."""
    return json.dumps(certificate_to_dict(c), sort_keys=True, indent=2)


def parse_certificate(text: str) -> Certificate:
    return certificate_from_dict(json.loads(text))


def report_to_dict(report) -> dict:
    """TheoremReport -> JSON-shaped dict (schema shared with the CLI)."""
    return {
        "theorem": report.theorem,
        "mode": report.mode,
        "instances_total": report.total,
        "instances_checked": report.checked,
        "instances_skipped": report.skipped,
        "counterexamples": [
            {
                "operands": list(ce.operands),
                "expected": ce.expected,
                "got": ce.got,
                "certificate": certificate_to_dict(ce.certificate)
                if ce.certificate is not None
                else None,
            }
            for ce in report.counterexamples
        ],
        "extras": report.extras,
        "elapsed": report.elapsed,
    }


def emit_report(report) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2)
