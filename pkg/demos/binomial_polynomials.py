"""
P-orderings and binomial polynomials
====================================

A greedy P-ordering picks, at each step, an element where the product of
differences to the earlier picks has the least valuation. Its valuation
sequence is the Legendre sum, and its first q^n terms give an absolutely
irreducible generalized binomial polynomial.
"""

from intvalpoly import (
    DvrContext,
    fixed_divisor_val,
    generalized_binomial_check,
    greedy_p_ordering,
    legendre_alpha,
)

###############################################################################
# The first ten terms over Z_(2) and their valuation sequence.

zp2 = DvrContext.zp(2)
o = greedy_p_ordering(zp2, 10, 4)
print("seq  ", o.seq)
print("alpha", o.alpha)
print("sum  ", tuple(legendre_alpha(2, k) for k in range(10)))

###############################################################################
# The fixed divisor of the product of the first m linear factors has the
# same valuation.

print([fixed_divisor_val(zp2, o.seq[:m], (1,) * m) for m in range(1, 10)])

###############################################################################
# Generalized binomials for small prime powers.

for p, n in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]:
    r = generalized_binomial_check(DvrContext.zp(p), n)
    print(f"p={p} n={n}: {r.verdict.value}, denominator p^{r.polynomial.const_val}")
