"""
Balanced sets and their partitions
==================================

Every finite set of roots carves the ring into residue classes. This script
walks through a few sets over Z_(2) and Z_(3) and shows which of them are
balanced.
"""

from intvalpoly import DvrContext, associated_partition, balanced_subset, is_balanced
from intvalpoly.dvr import format_class

zp2 = DvrContext.zp(2)
zp3 = DvrContext.zp(3)

###############################################################################
# The partition of {0, 1, 2}: 1 sits alone in 1+M, while 0 and 2 need one
# more digit to be told apart.

P = associated_partition(zp2, [0, 1, 2])
for s, block in zip(P.representatives, P.blocks):
    print(f"{s}: block {format_class(zp2, block)}, rho = {P.rho(s)}")

###############################################################################
# Balancedness asks whether the smallest class isolating each root covers
# the whole ring. {0, 2} misses every odd number.

for S in ([0, 1], [0, 2], [0, 1, 2], [5]):
    check = is_balanced(zp2, S)
    print(S, "balanced" if check else f"not balanced, e.g. {check.uncovered} is uncovered")

###############################################################################
# With q = 3 the residue class of a block only splits when all three
# children meet the set, so {0, 1} stays inside a single block R.

print(associated_partition(zp3, [0, 1]).blocks)
print(bool(is_balanced(zp3, [0, 1])), bool(is_balanced(zp3, [0, 1, 2])))

###############################################################################
# Any finite set contains a balanced subset with the same partition: keep
# the least root of every block.

S_prime, _ = balanced_subset(zp2, [0, 1, 4, 8])
print("balanced subset of {0, 1, 4, 8}:", S_prime)
