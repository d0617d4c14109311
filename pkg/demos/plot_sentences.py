"""
Sentences and the evaluation game
=================================

Parse conjunctive sentences and decide them by playing the game.
"""

from posetmc import RelativizedDomains, bowtie, brute_force_check, format_sentence, parse, relativized_check, restrict

B = bowtie()

phi = parse("forall x exists y : y <= x")
print(format_sentence(phi), "->", brute_force_check(B, phi))

# B has no top, so nothing is above everything
psi = parse("exists y forall x : x <= y")
print(format_sentence(psi), "->", brute_force_check(B, psi))

# '=' is sugar for two atoms
print(parse("exists y forall x : x = y").atoms)

# restricting the variables can only make a true sentence easier
chain3 = parse("forall x exists y w : x <= y & y <= w")
print(format_sentence(restrict(chain3, {"x", "y"})))

# shrink the range of y: minimal elements are enough ...
print(relativized_check(B, phi, RelativizedDomains(None, {"y": [0, 2]})))
# ... but a single top element is not
print(relativized_check(B, phi, RelativizedDomains(None, {"y": [1]})))
