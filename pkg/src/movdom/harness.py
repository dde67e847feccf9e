"""Theorem and lemma checks plus sweeps over enumerated instance families.

Each check_* function verdicts one instance; sweep() aggregates a
family of instances into a TheoremReport with counterexample
certificates that re-verify against the reconstructed operands.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .domination import is_2movable, is_total_dominating
from .formats import Certificate, write_graph6
from .graphs import (
    CoronaLayout,
    Graph,
    LimitExceededError,
    bits,
    corona,
    enumerate_connected,
    family,
    join,
    random_connected,
)
from .solver import all_minimum_sets, solve

JOIN_OPERAND_MAX_ORDER = 6
CORONA_MAX_TOTAL_ORDER = 16

PASS, FAIL, SKIP = "pass", "fail", "skip"

THEOREMS = ("thm3.1", "thm3.3", "thm3.4", "thm3.8")


@dataclass
class Verdict:
    status: str  # pass | fail | skip
    expected: Optional[int] = None
    got: Optional[int] = None
    certificate: Optional[Certificate] = None
    note: str = ""


@dataclass
class Counterexample:
    operands: tuple[str, ...]  # graph6 strings
    expected: Optional[int]
    got: Optional[int]
    certificate: Optional[Certificate]


@dataclass
class TheoremReport:
    theorem: str
    mode: str
    total: int = 0
    checked: int = 0
    skipped: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_thm_monotone(g: Graph, allow_eq: bool = False) -> Verdict:
    """2-movable domination number <= 2-movable total domination number,
    vacuous when the total variant does not exist.  Also re-checks that
    every minimum 2-movable total dominating set is 2-movable dominating."""
    mt2 = solve(g, "gamma_mt2", allow_eq)
    if mt2.value is None:
        return Verdict(PASS, note="gamma_mt2 nonexistent; vacuous")
    m2 = solve(g, "gamma_m2", allow_eq)
    if m2.value is None or m2.value > mt2.value:
        return Verdict(FAIL, expected=mt2.value, got=m2.value, certificate=mt2.certificate)
    for t in all_minimum_sets(g, "gamma_mt2", allow_eq):
        ok, _ = is_2movable(g, t, total=False, allow_equal_replacements=allow_eq)
        if not ok:
            return Verdict(
                FAIL, expected=mt2.value, got=m2.value, certificate=mt2.certificate,
                note=f"minimum set {t:#x} is not 2-movable dominating",
            )
    return Verdict(PASS, expected=mt2.value, got=m2.value)


def check_thm_join(g: Graph, h: Graph, allow_eq: bool = False) -> Verdict:
    """Join of two graphs of order >= 2 has 2-movable total domination
    number exactly 2; also cross-checks the one-vertex-per-side witness."""
    if g.p < 2 or h.p < 2:
        return Verdict(SKIP, note="operand order < 2")
    gh = join(g, h)
    res = solve(gh, "gamma_mt2", allow_eq)
    if res.value != 2:
        return Verdict(FAIL, expected=2, got=res.value, certificate=res.certificate)
    witness = (1 << 0) | (1 << g.p)  # least-index vertex from each side
    ok, _ = is_2movable(gh, witness, total=True, allow_equal_replacements=allow_eq)
    if not ok:
        return Verdict(
            FAIL, expected=2, got=res.value, certificate=res.certificate,
            note="cross-pair witness is not 2-movable total dominating",
        )
    return Verdict(PASS, expected=2, got=2, certificate=res.certificate)


def check_thm_join_k1(g: Graph, allow_eq: bool = False) -> Verdict:
    """Joining one apex vertex to a graph of order >= 3 gives a 2-movable
    total domination number equal to the base graph's total domination
    number."""
    if g.p < 3:
        return Verdict(SKIP, note="order < 3")
    gt = solve(g, "gamma_t")
    if gt.value is None:
        return Verdict(SKIP, note="gamma_t nonexistent")
    gh = join(g, family("complete", 1))
    res = solve(gh, "gamma_mt2", allow_eq)
    if res.value != gt.value:
        return Verdict(FAIL, expected=gt.value, got=res.value, certificate=res.certificate)
    return Verdict(PASS, expected=gt.value, got=res.value, certificate=res.certificate)


def _copy_subgraph(gh: Graph, layout: CoronaLayout, a: int) -> Graph:
    return gh.induced(layout.copy_vertices(a))


def _project_into_copy(layout: CoronaLayout, a: int, t: int) -> int:
    """Members of t inside copy a, relabeled to 0..h_order-1."""
    out = 0
    for vid in bits(t & layout.copy_mask(a)):
        out |= 1 << layout.within_copy(vid)
    return out


def check_lemma_projection_in(
    gh: Graph, layout: CoronaLayout, t: int, a: int, allow_eq: bool = False
) -> Verdict:
    """Projection property when the center a belongs to the set: for each
    copy member u, either the copy projection minus u totally dominates the
    copy, or a pair of in-copy replacements (one for a, one a copy-neighbor
    of u) restores total domination of the copy."""
    if not layout.is_center(a):
        raise ValueError(f"{a} is not a center vertex")
    if not (t >> a & 1):
        raise ValueError(f"center {a} not in the set")
    ok, _ = is_2movable(gh, t, total=True, allow_equal_replacements=allow_eq)
    if not ok:
        raise ValueError("set is not a 2-movable total dominating set of the corona")
    copy = _copy_subgraph(gh, layout, a)
    ta = _project_into_copy(layout, a, t)
    for u in bits(ta):
        rest = ta & ~(1 << u)
        if is_total_dominating(copy, rest):
            continue
        found = False
        for xa in range(copy.p):  # the center is adjacent to all of its copy
            for xu in bits(copy.adj[u]):
                if is_total_dominating(copy, rest | (1 << xa) | (1 << xu)):
                    found = True
                    break
            if found:
                break
        if not found:
            return Verdict(FAIL, note=f"copy {a}, member {u}: no disjunct holds")
    return Verdict(PASS)


def check_lemma_projection_out(
    gh: Graph, layout: CoronaLayout, t: int, a: int
) -> Verdict:
    """When the center a is outside a total dominating set of the corona,
    the set's trace on copy a totally dominates the copy."""
    if not layout.is_center(a):
        raise ValueError(f"{a} is not a center vertex")
    if t >> a & 1:
        raise ValueError(f"center {a} is in the set")
    if not is_total_dominating(gh, t):
        raise ValueError("set is not a total dominating set of the corona")
    copy = _copy_subgraph(gh, layout, a)
    ta = _project_into_copy(layout, a, t)
    if is_total_dominating(copy, ta):
        return Verdict(PASS)
    return Verdict(FAIL, note=f"copy {a}: trace is not total dominating")


def check_thm_corona(
    g: Graph, h: Graph, hypothesis_mode: str = "both", allow_eq: bool = False
) -> Verdict:
    """Corona product value: |V(G)| times the total domination number of H.

    hypothesis_mode picks the side condition: "statement" requires
    gamma_t(H) < |V(G)|, "proof" requires gamma_t(H) < |V(H)|, "both"
    their conjunction.
    """
    if hypothesis_mode not in ("statement", "proof", "both"):
        raise ValueError(f"bad hypothesis mode {hypothesis_mode!r}")
    gh, _ = corona(g, h)
    if gh.p < 3:
        return Verdict(SKIP, note="product order < 3")
    gt_h = solve(h, "gamma_t")
    if gt_h.value is None:
        return Verdict(SKIP, note="gamma_t(H) nonexistent")
    stmt_ok = gt_h.value < g.p
    proof_ok = gt_h.value < h.p
    wanted = {"statement": stmt_ok, "proof": proof_ok, "both": stmt_ok and proof_ok}
    if not wanted[hypothesis_mode]:
        return Verdict(SKIP, note="hypothesis filter unmet")
    expected = g.p * gt_h.value
    res = solve(gh, "gamma_mt2", allow_eq)
    status = PASS if res.value == expected else FAIL
    return Verdict(status, expected=expected, got=res.value, certificate=res.certificate)


def _connected_upto(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from enumerate_connected(n)


def _instances(theorem, max_order, pg, ph, sample, seed, edge_prob):
    """Operand tuples for one sweep: exhaustive enumeration, or a seeded
    random family of `sample` instances at the top order."""
    if sample is not None:
        if theorem == "thm3.1":
            return [(random_connected(max_order, edge_prob, seed + i),)
                    for i in range(sample)]
        if theorem == "thm3.3":
            return [
                (
                    random_connected(max(max_order, 2), edge_prob, seed + 2 * i),
                    random_connected(max(max_order, 2), edge_prob, seed + 2 * i + 1),
                )
                for i in range(sample)
            ]
        if theorem == "thm3.4":
            return [(random_connected(max(max_order, 3), edge_prob, seed + i),)
                    for i in range(sample)]
        return [
            (
                random_connected(pg, edge_prob, seed + 2 * i),
                random_connected(ph, edge_prob, seed + 2 * i + 1),
            )
            for i in range(sample)
        ]
    if theorem == "thm3.1":
        return [(g,) for g in _connected_upto(1, max_order)]
    if theorem == "thm3.3":
        operands = list(_connected_upto(2, max_order))
        return [(g, h) for g in operands for h in operands]
    if theorem == "thm3.4":
        return [(g,) for g in _connected_upto(3, max_order)]
    return [(g, h) for g in enumerate_connected(pg) for h in enumerate_connected(ph)]


def _check_instance(payload):
    """Worker: verdict one instance plus theorem-specific extra data.

    Top-level so it pickles for process pools; returns
    (verdict, operands_graph6, extra).
    """
    theorem, operands, mode, allow_eq = payload
    extra = None
    if theorem == "thm3.1":
        v = check_thm_monotone(operands[0], allow_eq)
    elif theorem == "thm3.3":
        v = check_thm_join(operands[0], operands[1], allow_eq)
    elif theorem == "thm3.4":
        g = operands[0]
        v = check_thm_join_k1(g, allow_eq)
        if v.status != SKIP:
            # recorded as data only: does every minimum total dominating
            # set of G already satisfy the movability disjunction in G?
            sets = all_minimum_sets(g, "gamma_t")
            extra = all(
                is_2movable(g, s, total=True, allow_equal_replacements=allow_eq)[0]
                for s in sets
            )
    else:  # thm3.8
        g, h = operands
        v = check_thm_corona(g, h, mode, allow_eq)
        gt_h = solve(h, "gamma_t").value
        if gt_h is not None and (gt_h < g.p) != (gt_h < h.p):
            single = check_thm_corona(
                g, h, "statement" if gt_h < g.p else "proof", allow_eq
            )
            extra = {
                "operands": [write_graph6(g), write_graph6(h)],
                "statement_hypothesis": gt_h < g.p,
                "proof_hypothesis": gt_h < h.p,
                "status": single.status,
                "expected": single.expected,
                "got": single.got,
            }
    return v, tuple(write_graph6(x) for x in operands), extra


def sweep(
    theorem: str,
    max_order: int = 4,
    pg: int | None = None,
    ph: int | None = None,
    mode: str = "both",
    allow_equal_replacements: bool = False,
    sample: int | None = None,
    seed: int = 0,
    edge_prob: float = 0.5,
    jobs: int = 1,
) -> TheoremReport:
    """Run one theorem's checker over an instance family.

    Exhaustive families: thm3.1 takes all connected graphs with
    p <= max_order; thm3.3 all ordered pairs of connected operands with
    2 <= p <= max_order; thm3.4 all connected G with 3 <= p <= max_order;
    thm3.8 all connected pairs with fixed operand orders (pg, ph).
    With `sample` set, a seeded random family of that many instances at
    the top order replaces enumeration.  `jobs` > 1 partitions instances
    across worker processes; reports merge in instance order, so the
    result is identical for any worker count.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    if theorem in ("thm3.3", "thm3.4") and max_order > JOIN_OPERAND_MAX_ORDER:
        raise LimitExceededError(
            f"join sweeps limited to operand order <= {JOIN_OPERAND_MAX_ORDER}"
        )
    if theorem == "thm3.8":
        if pg is None or ph is None:
            raise ValueError("thm3.8 sweep needs pg and ph operand orders")
        if pg * (1 + ph) > CORONA_MAX_TOTAL_ORDER:
            raise LimitExceededError(
                f"corona sweeps limited to total order <= {CORONA_MAX_TOTAL_ORDER}"
            )

    start = time.perf_counter()
    report = TheoremReport(theorem=theorem, mode=mode if theorem == "thm3.8" else "n/a")
    payloads = [
        (theorem, operands, mode, allow_equal_replacements)
        for operands in _instances(theorem, max_order, pg, ph, sample, seed, edge_prob)
    ]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_instance, payloads, chunksize=64))
    else:
        results = [_check_instance(p) for p in payloads]

    extras_34 = {"instances": 0, "all_min_tds_movable": 0}
    discrepancies = []
    for verdict, operand_g6, extra in results:
        report.total += 1
        if verdict.status == SKIP:
            report.skipped += 1
        else:
            report.checked += 1
            if verdict.status == FAIL:
                report.counterexamples.append(
                    Counterexample(
                        operands=operand_g6,
                        expected=verdict.expected,
                        got=verdict.got,
                        certificate=verdict.certificate,
                    )
                )
        if theorem == "thm3.4" and verdict.status != SKIP:
            extras_34["instances"] += 1
            extras_34["all_min_tds_movable"] += bool(extra)
        if theorem == "thm3.8" and extra is not None:
            discrepancies.append(extra)
    if theorem == "thm3.4":
        report.extras["gamma_t_set_movability"] = extras_34
    if theorem == "thm3.8":
        report.extras["hypothesis_discrepancies"] = discrepancies

    report.elapsed = time.perf_counter() - start
    return report
