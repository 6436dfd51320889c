"""
Rational homology balls from Mori sequences
===========================================

Consecutive pairs of a Mori sequence give disjoint balls B_{p,q}.  Three
ambient spaces are covered: the neighborhood of a chain, a Wahl ball with
one blow-up, and the Milnor fiber over an extremal P-resolution.
"""
import json

from antiflip import PResolution, embed_blowup, embed_linear, embed_milnor, usual_flip_sequence

r = embed_linear([4], 5)
print(" ".join(f"B_{{{m},{a}}}" for m, a in r.balls()))

# flipping the usual neighborhood repeatedly gives back the chain
print([c for c, _ in usual_flip_sequence([3, 2, 4])])

print(embed_linear([2, 2, 3], 10).finite)
print(embed_linear([2, 2], 3).note)

print([f"{w1} {w2}" for w1, w2 in embed_blowup((2, 1), 3).pairs])

for report in embed_milnor(PResolution.one_sided((2, 1), 3), 3):
    print(report.target, "|", "; ".join(f"{w1} {w2}" for w1, w2 in report.pairs))

print(json.dumps(embed_linear([3, 3], 2).to_dict(), ensure_ascii=False)[:120], "...")
