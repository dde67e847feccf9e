"""Exact small-graph solvers for 2-movable total domination, join and
corona constructions, graph6 I/O, and theorem verification sweeps."""

from .domination import (
    MoveWitness,
    apply_move,
    closed_neighborhood,
    find_pair_move,
    is_2movable,
    is_dominating,
    is_total_dominating,
    open_neighborhood,
)
from .formats import (
    Certificate,
    GraphFormatError,
    emit_certificate,
    emit_report,
    parse_certificate,
    parse_edgelist,
    parse_graph6,
    write_graph6,
)
from .graphs import (
    CoronaLayout,
    Graph,
    LimitExceededError,
    RandomGraphExhaustedError,
    bits,
    corona,
    enumerate_connected,
    family,
    is_connected,
    join,
    make_graph,
    mask_of,
    random_connected,
)
from .harness import (
    Counterexample,
    TheoremReport,
    Verdict,
    check_lemma_projection_in,
    check_lemma_projection_out,
    check_thm_corona,
    check_thm_join,
    check_thm_join_k1,
    check_thm_monotone,
    sweep,
)
from .solver import (
    KINDS,
    InvariantResult,
    all_minimum_sets,
    recheck_certificate,
    solve,
    solve_naive,
)

__all__ = [
    "Certificate",
    "CoronaLayout",
    "Counterexample",
    "Graph",
    "GraphFormatError",
    "InvariantResult",
    "KINDS",
    "LimitExceededError",
    "MoveWitness",
    "RandomGraphExhaustedError",
    "TheoremReport",
    "Verdict",
    "all_minimum_sets",
    "apply_move",
    "bits",
    "check_lemma_projection_in",
    "check_lemma_projection_out",
    "check_thm_corona",
    "check_thm_join",
    "check_thm_join_k1",
    "check_thm_monotone",
    "closed_neighborhood",
    "corona",
    "emit_certificate",
    "emit_report",
    "enumerate_connected",
    "family",
    "find_pair_move",
    "is_2movable",
    "is_connected",
    "is_dominating",
    "is_total_dominating",
    "join",
    "make_graph",
    "mask_of",
    "open_neighborhood",
    "parse_certificate",
    "parse_edgelist",
    "parse_graph6",
    "random_connected",
    "recheck_certificate",
    "solve",
    "solve_naive",
    "sweep",
    "write_graph6",
]
