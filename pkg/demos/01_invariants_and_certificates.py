#!/usr/bin/env python3
"""Walkthrough: the four domination invariants and their certificates.

A set T totally dominates a graph when every vertex (members included)
has a neighbor in T.  T is 2-movable when every pair of its members can
be removed outright or replaced by outside neighbors while staying a
(total) dominating set.  The minimum cardinalities of the four
variants are gamma, gamma_t, gamma_m2 and gamma_mt2.
"""

from movdom import emit_certificate, family, solve, solve_naive

# The 4-cycle: gamma = 2 but any two adjacent vertices already totally
# dominate, so gamma_t = 2 as well.
c4 = family("cycle", 4)
for kind in ("gamma", "gamma_t", "gamma_m2", "gamma_mt2"):
    res = solve(c4, kind)
    print(f"C4 {kind:9s} = {res.value}")

# P4 is the classic nonexistence example: it has total dominating sets,
# but none of them survives every pair move.
p4 = family("path", 4)
res = solve(p4, "gamma_mt2")
print("\nP4 gamma_mt2:", "nonexistent" if res.nonexistent else res.value)

# K4 = K2 + K2; any cross pair is 2-movable, so the value is 2.  The
# certificate records one move witness per pair of the witness set and
# embeds the graph6 string so it can be re-checked in isolation.
k4 = family("complete", 4)
res = solve(k4, "gamma_mt2")
print("\nK4 gamma_mt2 certificate:")
print(emit_certificate(res.certificate))

# The unpruned oracle walks all 2^p subsets and must agree exactly.
naive = solve_naive(k4, "gamma_mt2")
assert (naive.value, naive.certificate.witness) == (res.value, res.certificate.witness)
print("\noracle agrees:", naive.value, naive.certificate.witness)
