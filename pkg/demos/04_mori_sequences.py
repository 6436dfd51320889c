"""
Mori sequences
==============

A curve through two Wahl points (m1, a1), (m2, a2) has
delta = m2*a1 + m1*a2 - m1*m2.  Starting from an initial neighborhood,
the recursion x(i+1) = delta*x(i) - x(i-1) produces a whole family.
"""
from antiflip import ExtremalNbhd, classify, mori_sequence
from antiflip.mori import sequence_display

e = ExtremalNbhd((1, 1), (5, 3))
print(e.delta, classify(e).value, e.canonical_degree)
for step in mori_sequence(e, 4):
    w1, w2 = step.pairs
    print(f"E_{step.index}: {w1}, {w2}  {step.nbhd.display()}")
print("...-" + sequence_display(mori_sequence(e, 3)))

# delta = 1: the family has exactly two members
print(sequence_display(mori_sequence(ExtremalNbhd((1, 1), (4, 1)), 10)))

# delta*m1 = m2: a divisorial family
print(sequence_display(mori_sequence(ExtremalNbhd((2, 1), (4, 3)), 4)))
