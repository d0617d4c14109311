"""
Scaling with n
==============

Memo states of the game for phi_2 on width-2 posets of growing size.
"""

from posetmc.bench import growth_exponent, run_bench
from posetmc.generators import phi_k

records = run_bench(phi_k(2), [125, 250, 500, 1000, 2000], w=2, seeds=3, seed=0)
for r in records:
    print(r.line())
print("growth exponent of memo states:", growth_exponent(records))
