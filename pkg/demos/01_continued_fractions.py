"""
Hirzebruch-Jung continued fractions
===================================

Every coprime n > a >= 1 has a unique expansion n/a = e1 - 1/(e2 - ...)
with all entries at least 2.
"""
from antiflip import hj_dual, hj_evaluate, hj_expand

print(hj_expand(25, 9))            # (3, 5, 2)
print(hj_evaluate([3, 5, 2]))      # back to 25/9

# the dual fraction n/(n-a) has its own expansion
dual, entries = hj_dual(5, 2)
print(dual, entries)               # 5/3 = [2, 3]

# integers are unbounded
n = 10**50 + 3
print(len(hj_expand(n, 7)), hj_evaluate(hj_expand(n, 7)) == (n, 7))
