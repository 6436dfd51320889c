"""
Flips and antiflips
===================

All members of a flipping family share one flip, an extremal P-resolution
written [chain] - c - [chain].  Going back, each side of a P-resolution
gives an initial neighborhood, and its family lists every antiflip.
"""
from antiflip import ExtremalNbhd, PResolution, flip, initial_neighborhoods, mori_sequence, presolution_target

p = flip(ExtremalNbhd((1, 1), (5, 3)))
print(p.short(), "delta", p.delta, "resolves 1/%d(1,%d)" % tuple(presolution_target(p)))

for e in initial_neighborhoods(p):
    members = mori_sequence(e, 5)
    same = all(flip(s.nbhd) == p for s in members)
    print(*e.pairs, "->", " ".join(str(s.pairs[1]) for s in members), "| all flip back:", same)

# central curve -4 between two smooth points
bare = PResolution((1, 1), (1, 1), 4)
print(initial_neighborhoods(bare))
