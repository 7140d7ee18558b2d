"""
Equalizing polynomials two ways
===============================

For a balanced set there is exactly one choice of root multiplicities that
makes the valuation of the product constant on all poor neighborhoods. We
compute it from the partition matrix and again bottom-up over the class
tree, then confirm the poor values by evaluating the polynomial.
"""

from intvalpoly import (
    DvrContext,
    associated_partition,
    determinant,
    equalizing_polynomial,
    equalizing_polynomial_lcm,
    partition_matrix,
    poor_values,
    posh_set,
    rich_set,
)
from intvalpoly.dvr import format_class
from intvalpoly.equalizer import evaluate, poor_witnesses

zp2 = DvrContext.zp(2)
S = (0, 1, 2)

###############################################################################
# The partition matrix holds block levels on the diagonal and valuations of
# differences elsewhere.

A = partition_matrix(associated_partition(zp2, S))
for row in A.rows:
    print(row)
print("det =", determinant(A))

###############################################################################
# Both constructions give x (x - 1)^3 (x - 2) / 2^3.

f = equalizing_polynomial(zp2, S)
g = equalizing_polynomial_lcm(zp2, S)
print(f.to_json(expanded=True))
assert f == g

###############################################################################
# On each poor neighborhood the valuation is the same number, and a point
# picked from each one confirms it by direct evaluation.

values = poor_values(zp2, S, f.mult)
for block, w in poor_witnesses(zp2, S, f.mult).items():
    direct = zp2.valuation(evaluate(zp2, S, f.mult, w))
    print(f"{format_class(zp2, block)}: formula {values[block]}, f({w}) has valuation {direct}")

###############################################################################
# The posh set of the equalizing polynomial is exactly the rich set, of
# measure 1/q.

u = posh_set(zp2, S, f.mult)
print(u, u.measure(), u == rich_set(zp2, associated_partition(zp2, S)))

###############################################################################
# Over F_4[t] the four constants form a balanced set with all
# multiplicities equal to one.

f4 = DvrContext.fqt(2, 2)
print(equalizing_polynomial(f4, f4.residues(1)).to_json())
