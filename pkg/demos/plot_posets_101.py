"""
Posets as boolean matrices
==========================

Build a few small posets and look at their invariants.
"""

import numpy as np

from posetmc import poset as po

# the bowtie: two bottoms, both below two tops
B = po.bowtie()
print(B.leq.astype(int))
print("covers:", B.cover_pairs())

# width comes from a maximum matching, depth from the cover DAG
for name, P in [("bowtie", B), ("chain(5)", po.chain(5)), ("antichain(7)", po.antichain(7))]:
    print(f"{name:>13}  width={po.width(P)} depth={po.depth(P)}")

# a hub sits above every minimal and below every maximal element
print("hub of bowtie:", po.hub(B))
print("hub of bowtie + top:", po.hub(po.with_top(B)))

# the text format keeps only the covers
text = po.dumps_poset(B)
print(text)
assert po.loads_poset(text) == B

# cycles are reported with a witness
try:
    po.from_order_pairs(3, [(0, 1), (1, 2), (2, 0)])
except po.CycleError as exc:
    print("rejected:", exc)
