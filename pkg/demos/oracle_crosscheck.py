"""
Classifier versus brute force
=============================

The classifier decides absolute irreducibility from the structure of the
root set. The oracle searches for a smaller polynomial whose posh set fits
inside, which would show the answer is negative. The two are run side by
side on every balanced set of level at most 2 over Z_(3).
"""

import time

from intvalpoly import (
    DvrContext,
    OracleConfig,
    SplitPolynomial,
    classify,
    enumerate_balanced,
    equalizing_polynomial,
    fixed_divisor_val,
    oracle_check,
)

zp3 = DvrContext.zp(3)

###############################################################################
# x^2 (x - 1) over Z_(2) is not absolutely irreducible; the oracle's first
# witness is x itself.

zp2 = DvrContext.zp(2)
f = SplitPolynomial(zp2, [0, 1], [2, 1], fixed_divisor_val(zp2, [0, 1], [2, 1]))
print(classify(f).to_json()["failed_condition"], oracle_check(f, OracleConfig(2)).to_json())

###############################################################################
# Sweep: confirm each equalizing polynomial and refute each one-step bump
# of its multiplicities.

start = time.perf_counter()
agree = total = 0
for S in enumerate_balanced(zp3, 2, 16, least_only=True):
    f = equalizing_polynomial(zp3, S)
    candidates = [f]
    for i in range(len(S)):
        m = list(f.mult)
        m[i] += 1
        candidates.append(SplitPolynomial(zp3, S, m, fixed_divisor_val(zp3, S, m)))
    for g in candidates:
        verdict = classify(g).absolutely_irreducible
        refuted = oracle_check(g, OracleConfig(2 * max(g.mult))).refuted
        agree += verdict != refuted
        total += 1
    print(f"{S}: mult {f.mult}, const_val {f.const_val}")
print(f"{agree}/{total} agree in {time.perf_counter() - start:.1f}s")
