"""
Level sets and variable depth
=============================

The solver only needs to look at the outer layers of a poset.  How many
layers depends on how deep the existential variables sit in the sentence.
"""

import numpy as np

from posetmc import ReducedSentence, level_sets, parse, variable_depths
from posetmc.generators import phi_k, random_poset_bounded_width

d = variable_depths(ReducedSentence(parse("exists y1 y2 : y1 <= y2")))
print("sides:", {y: str(s) for y, s in d.side.items()}, "depths:", d.depth, "b =", d.b)

d2 = variable_depths(phi_k(2))
print("phi_2 depths:", d2.depth)

# a width-2 poset on 400 elements: the first levels are tiny
P = random_poset_bounded_width(400, 2, 4 / 400**2, seed=1)
ls = level_sets(P, 3)
for i, (nl, nu, npi) in enumerate(ls.sizes()):
    print(f"level {i}: |L|={nl:3d} |U|={nu:3d} |P|={npi:3d}")

print("elements placed on some level:", int((ls.depth >= 0).sum()), "of", P.n)
