"""
Blowing up and down linear chains
=================================

A chain lists the magnitudes k of the self-intersections -k of curves in
a row.  A 1 is a (-1)-curve and can be contracted.
"""
from antiflip import blow_down_at, blow_up_between, blown_up_vertex_chain, hj_expand, reduce, reverse

chain = (3, 3)
up = blow_up_between(chain, 0)
print(up, "->", blow_down_at(up, 1))

# contract every (-1)-curve, leftmost first
print(reduce((3, 5, 2, 1, 3)))     # (3, 3)

# expansion of n/a, a (-1)-curve, then the reversed dual expansion: a single 0-curve
n, a = 7, 3
print(reduce((*hj_expand(n, a), 1, *reverse(hj_expand(n, n - a)))))

# blowing up the last vertex enough times exposes a Wahl chain
print(blown_up_vertex_chain(5, 2))       # (3, 5, 2, 1, 3, 2)
