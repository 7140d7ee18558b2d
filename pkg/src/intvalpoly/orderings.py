"""P-orderings, their valuation sequence, and generalized binomial polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .classifier import ClassificationReport, classify
from .dvr import DvrContext, valuation_diff
from .equalizer import SplitPolynomial
from .exceptions import PoolTooShallowError


@dataclass(frozen=True)
class POrdering:
    ctx: DvrContext
    seq: tuple
    alpha: tuple

    def to_json(self) -> dict:
        return {"seq": [self.ctx.format(a) for a in self.seq], "alpha": list(self.alpha)}


def legendre_alpha(q: int, k: int) -> int:
    """``sum_{j >= 1} floor(k / q**j)``."""
    if q < 2 or k < 0:
        raise ValueError("need q >= 2 and k >= 0")
    total = 0
    power = q
    while power <= k:
        total += k // power
        power *= q
    return total


def min_pool_level(q: int, n: int) -> int:
    """Least ``L`` with ``q**L >= n``.

    While fewer than ``q**L`` terms are chosen, some class modulo ``M**L``
    holds none of them, and its canonical representative scores exactly like
    the best element of ``R``; so this pool depth already gives true values.
    """
    j = 0
    while q**j < n:
        j += 1
    return j


def greedy_p_ordering(ctx: DvrContext, length: int, pool_level: int) -> POrdering:
    """Greedy P-ordering drawn from the representatives modulo ``M**pool_level``.

    Each step picks the pool element minimizing ``v(prod (a - a_i))`` over the
    elements chosen so far, breaking ties by the least representative.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    needed = min_pool_level(ctx.q, length)
    if pool_level < needed:
        raise PoolTooShallowError(f"pool level {pool_level} < {needed} for length {length}")
    pool = ctx.residues(pool_level)
    # running valuation of prod (a - a_i) for every pool element
    score = [0] * len(pool)
    taken = [False] * len(pool)
    seq, alpha = [], []
    for _ in range(length):
        best = min((i for i in range(len(pool)) if not taken[i]), key=lambda i: score[i])
        a = pool[best]
        seq.append(a)
        alpha.append(score[best])
        taken[best] = True
        for i, b in enumerate(pool):
            if not taken[i]:
                score[i] += valuation_diff(ctx, b, a)
    return POrdering(ctx, tuple(seq), tuple(alpha))


def is_complete_residue_system(ctx: DvrContext, elements, n: int) -> bool:
    residues = {ctx.reduce(a, n) for a in elements}
    return len(elements) == ctx.q**n and len(residues) == ctx.q**n


def generalized_binomial_check(ctx: DvrContext, n: int) -> ClassificationReport:
    """Classify ``c**-1 * prod_{i < q**n} (x - a_i)`` for a greedy P-ordering ``a``.

    The constant has valuation ``alpha(q**n)``; the first ``q**n`` terms must
    form a complete residue system modulo ``M**n``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    size = ctx.q**n
    ordering = greedy_p_ordering(ctx, size, min_pool_level(ctx.q, size))
    if not is_complete_residue_system(ctx, ordering.seq, n):
        raise AssertionError(f"initial segment of length {size} is not a residue system mod M^{n}")
    poly = SplitPolynomial(ctx, ordering.seq, (1,) * size, legendre_alpha(ctx.q, size))
    return classify(poly)
