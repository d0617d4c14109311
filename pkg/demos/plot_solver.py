"""
Deciding sentences
==================

``check`` chains the reducer, the hub test and a game on a small slice of
the poset.  ``check_both`` also runs the plain game for comparison.
"""

from posetmc import antichain, bowtie, check, check_both, from_order_pairs
from posetmc.generators import phi_k, random_poset_bounded_width

phi2 = phi_k(2)
print(phi2)

for name, P in [
    ("bowtie", bowtie()),
    ("bowtie minus 0<3", from_order_pairs(4, [(0, 1), (2, 1), (2, 3)])),
    ("antichain(4)", antichain(4)),
]:
    res, brute = check_both(P, phi2)
    print(f"{name:>17}: {res.truth} via {res.method}, brute force says {brute}")

# large width-2 posets stay cheap
P = random_poset_bounded_width(2000, 2, 4 / 2000**2, seed=8)
res = check(P, phi2)
print(res.truth, res.method)
print(res.stats.record())
