#!/usr/bin/env python3
"""Walkthrough: join and corona products, and the graph6 interchange format.

join(G, H) keeps G's labels, shifts H's by |V(G)|, and adds every cross
edge.  corona(G, H) attaches a private copy of H to each vertex of G;
the returned layout answers "which copy does this vertex live in".
"""

from movdom import corona, family, join, parse_graph6, solve, write_graph6

p3 = family("path", 3)
k1 = family("complete", 1)

# The fan P3 + K1: hub vertex 3 sees everything.
fan = join(p3, k1)
print("fan = join(P3, K1):", write_graph6(fan), f"p={fan.p} q={fan.q}")
print("hub neighbors:", sorted(fan.neighbors(3)))

# corona(C3, P3): three centers 0..2, copies occupy ids 3..11.
gh, layout = corona(family("cycle", 3), p3)
print(f"\ncorona(C3, P3): p={gh.p} q={gh.q} graph6={write_graph6(gh)!r}")
for a in range(layout.g_order):
    print(f"  copy of center {a}: vertices {layout.copy_vertices(a)}")

# Every vertex id maps back to its copy.
assert layout.copy_of(layout.copy_vertex(2, 1)) == 2

# graph6 round trip is bit-exact; 'D?{' decodes to the star K_{1,4}.
star = parse_graph6("D?{")
print("\n'D?{' decodes to:", sorted(star.edges()))
assert write_graph6(star) == "D?{"

# The corona value formula: |V(G)| * gamma_t(H) = 3 * 2 = 6.
print("gamma_mt2(C3∘P3) =", solve(gh, "gamma_mt2").value)
