"""
Wahl singularities
==================

The singularity 1/m^2 (1, ma-1) is recorded by the pair (m, a).  Its chain
can be read from m^2/(ma-1) or glued from the expansions of m/a and
m/(m-a); the library computes both and insists they agree.
"""
from antiflip import canonical, conjugate, recognize_wahl, wahl_chain

for w in [(2, 1), (3, 1), (5, 2), (14, 9)]:
    print(w, wahl_chain(w))

# (m, a) and (m, m-a) are the same point read from opposite ends
print(wahl_chain((14, 5)) == wahl_chain((14, 9))[::-1])
print(conjugate((5, 3)), canonical((5, 4)))

print(recognize_wahl([6, 2, 2]))   # (4, 1)
print(recognize_wahl([2, 2]))      # None
