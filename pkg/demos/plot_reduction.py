"""
Reduced form
============

The reducer rewrites a sentence on a fixed poset until it is in reduced
form, or until the answer is obvious.
"""

from posetmc import bowtie, chain, format_sentence, hub_accept, parse, reduce
from posetmc.reducer import Decided

for P, name in [(chain(3), "chain(3)"), (bowtie(), "bowtie")]:
    for text in ["exists y forall x : x <= y", "forall x xp : x <= xp", "forall x1 x2 exists y : y <= x1 & y <= x2"]:
        out = reduce(P, parse(text))
        if isinstance(out, Decided):
            verdict = f"decided {out.value} ({out.reason})"
        else:
            verdict = "reduced to  " + format_sentence(out.sentence.inner)
        print(f"{name:>8} | {text:<45} | {verdict}")
        for step in out.trace[1:]:
            print(" " * 11, step)

# with a hub element, every reduced sentence is true
print("chain(3) has a hub:", hub_accept(chain(3)))
