"""
Reductions from other problems
==============================

Two families of generated instances: sentences whose truth on the bowtie
encodes a sentence with constants, and posets whose phi_k truth encodes
hitting sets of a hypergraph.
"""

from posetmc import bowtie, check, cover_degree
from posetmc.poset import depth
from posetmc.generators import (
    Const,
    ExistentialSentence,
    Hypergraph,
    bowtie_reduce,
    bowtie_star_holds,
    hitting_set_exists,
    hypergraph_to_cover3,
    hypergraph_to_depth2,
    phi_k,
)

# c0 and c2 have the common upper bound 1; c1 and c3 have none
for a, b in [(0, 2), (1, 3)]:
    psi = ExistentialSentence(("u",), ((Const(a), "u"), (Const(b), "u")))
    phi = bowtie_reduce(psi)
    print(psi, "|", bowtie_star_holds(psi), check(bowtie(), phi).truth, f"({len(phi)} variables)")

# triangle: no single vertex meets every edge, two vertices do
H = Hypergraph(("a", "b", "c"), {"ab": {"a", "b"}, "bc": {"b", "c"}, "ac": {"a", "c"}})
d, c = hypergraph_to_depth2(H), hypergraph_to_cover3(H)
print("depth(d(H)) =", depth(d), " cover-degree(c(H)) =", cover_degree(c), f" |c(H)| = {c.n}")
for k in (1, 2, 3):
    print(f"k={k}: hitting set {hitting_set_exists(H, k)}, phi_k on d(H) {check(d, phi_k(k)).truth}, on c(H) {check(c, phi_k(k)).truth}")
