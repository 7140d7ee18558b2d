"""Split polynomials, fixed divisors, posh sets and equalizing polynomials.

A split polynomial is stored as its root set, root multiplicities and the
valuation of the constant it is divided by. Values of ``f = prod (x - s)**h_s``
are never obtained by expanding ``f``: on a poor neighborhood of a block the
valuation of ``f`` is a fixed linear combination of block levels and
pairwise valuations, and on a rich neighborhood it is strictly larger.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .dvr import (
    DvrContext,
    Element,
    ResidueClass,
    class_member_outside,
    subclasses,
    valuation_diff,
)
from .exactla import partition_matrix, solve_equalizing
from .exceptions import NotBalancedError
from .partition import (
    ClassUnion,
    associated_partition,
    is_balanced,
    poor_neighborhoods,
    rich_neighborhoods,
    rich_set,
)

Multiplicities = Union[Sequence[int], Mapping[Element, int]]


@dataclass(frozen=True)
class SplitPolynomial:
    """``F = c**-1 * prod_{s in roots} (x - s)**mult[s]`` with ``v(c) = const_val``.

    Roots are kept in key order and ``mult`` is aligned with them.
    """

    ctx: DvrContext
    roots: tuple
    mult: tuple
    const_val: int = 0

    def __post_init__(self):
        ctx = self.ctx
        roots = tuple(ctx.element(s) for s in self.roots)
        mult = tuple(self.mult)
        if not roots:
            raise ValueError("a split polynomial needs at least one root")
        if len(set(roots)) != len(roots):
            raise ValueError("roots must be distinct")
        if len(mult) != len(roots):
            raise ValueError("one multiplicity per root is required")
        if any(isinstance(h, bool) or not isinstance(h, int) or h < 1 for h in mult):
            raise ValueError("multiplicities must be positive integers")
        order = sorted(range(len(roots)), key=lambda i: ctx.key(roots[i]))
        object.__setattr__(self, "roots", tuple(roots[i] for i in order))
        object.__setattr__(self, "mult", tuple(mult[i] for i in order))

    @property
    def degree(self) -> int:
        return sum(self.mult)

    def multiplicities(self) -> dict:
        return dict(zip(self.roots, self.mult))

    def scaled(self, factor: int) -> "SplitPolynomial":
        """``F**factor``."""
        return SplitPolynomial(
            self.ctx, self.roots, tuple(factor * h for h in self.mult), factor * self.const_val
        )

    def to_json(self, expanded: bool = False) -> dict:
        out = {
            "roots": [self.ctx.format(s) for s in self.roots],
            "mult": list(self.mult),
            "const_val": self.const_val,
        }
        if expanded and self.ctx.backend == "zp":
            out["coefficients"] = [str(c) for c in expand(self.ctx, self.roots, self.mult)]
            out["denominator"] = str(self.ctx.p**self.const_val)
        return out


def _weights(ctx, S, mult):
    S = tuple(ctx.element(s) for s in S)
    if isinstance(mult, Mapping):
        h = {ctx.element(s): mult[s] for s in S}
    else:
        mult = tuple(mult)
        if len(mult) != len(S):
            raise ValueError("one multiplicity per root is required")
        h = dict(zip(S, mult))
    if any(x < 1 for x in h.values()):
        raise ValueError("multiplicities must be positive")
    return associated_partition(ctx, S), h


def poor_values(ctx: DvrContext, S: Iterable[Element], mult: Multiplicities) -> dict:
    """Valuation of ``f`` on the poor neighborhoods of each block.

    For a block with representative ``u`` this is
    ``rho(u) * (roots in the block) + sum over other blocks t of v(u - t) * (roots in t)``,
    roots counted with multiplicity.
    """
    P, h = _weights(ctx, S, mult)
    weight = {b: 0 for b in P.blocks}
    for s, hs in h.items():
        weight[P.block_of(s)] += hs
    w = [weight[b] for b in P.blocks]
    # rows of the partition matrix: rho on the diagonal, v(u - t) elsewhere
    rows = partition_matrix(P).rows
    return {b: sum(a * x for a, x in zip(row, w)) for b, row in zip(P.blocks, rows)}


def fixed_divisor_val(ctx: DvrContext, S: Iterable[Element], mult: Multiplicities) -> int:
    """``v(d(f))``: the least value of ``v(f)`` on ``R``, attained on poor neighborhoods."""
    return min(poor_values(ctx, S, mult).values())


def posh_set(ctx: DvrContext, S: Iterable[Element], mult: Multiplicities) -> ClassUnion:
    """Where ``v(f)`` exceeds its minimum: the rich set plus the poor parts of blocks above the minimum."""
    P, h = _weights(ctx, S, mult)
    values = poor_values(ctx, S, h)
    low = min(values.values())
    poor = poor_neighborhoods(ctx, P)
    extra = [c for b, v in values.items() if v > low for c in poor[b]]
    # rich and poor neighborhoods are pairwise disjoint subclasses of distinct blocks
    return ClassUnion.of(ctx, list(rich_set(ctx, P).classes) + extra, disjoint=True)


def valuation_at(ctx: DvrContext, S, mult, w: Element):
    """``v(f(w))`` as a sum of root valuations."""
    _, h = _weights(ctx, S, mult)
    return sum((hs * valuation_diff(ctx, w, s) for s, hs in h.items()), 0)


def evaluate(ctx: DvrContext, S, mult, w: Element) -> Element:
    """``f(w)`` by explicit multiplication of the linear factors."""
    _, h = _weights(ctx, S, mult)
    value = ctx.one
    for s, hs in h.items():
        value = ctx.mul(value, ctx.power(ctx.sub(w, s), hs))
    return value


def expand(ctx: DvrContext, S, mult) -> list:
    """Coefficients of ``prod (x - s)**h_s`` over ``R``, lowest degree first."""
    _, h = _weights(ctx, S, mult)
    coeffs = [ctx.one]
    for s, hs in h.items():
        minus_s = ctx.neg(s)
        for _ in range(hs):
            shifted = [ctx.zero] + coeffs
            scaled = [ctx.mul(minus_s, c) for c in coeffs] + [ctx.zero]
            coeffs = [ctx.add(a, b) for a, b in zip(shifted, scaled)]
    return coeffs


def poor_witnesses(ctx: DvrContext, S, mult) -> dict:
    """One explicit element from a poor neighborhood of each block."""
    P, _ = _weights(ctx, S, mult)
    rich = rich_neighborhoods(P)
    return {b: class_member_outside(ctx, b, rich[b]) for b in P.blocks}


def _require_balanced(ctx, S):
    check = is_balanced(ctx, S)
    if not check:
        raise NotBalancedError(
            f"{[ctx.format(s) for s in S]} is not balanced; "
            f"{ctx.format(check.uncovered)} lies outside every isolating class",
            check,
        )


def equalizing_polynomial(ctx: DvrContext, S: Iterable[Element]) -> SplitPolynomial:
    """The equalizing polynomial of a balanced set, divided by its fixed divisor.

    Multiplicities are the unimodular solution of the partition-matrix
    system; the constant has valuation equal to the common right-hand side.
    """
    S = ctx.sorted(ctx.element(s) for s in S)
    _require_balanced(ctx, S)
    P = associated_partition(ctx, S)
    mv = solve_equalizing(partition_matrix(P))
    m = dict(zip(P.representatives, mv.m))
    return SplitPolynomial(ctx, S, tuple(m[s] for s in S), mv.e)


def equalizing_polynomial_lcm(ctx: DvrContext, S: Iterable[Element]) -> SplitPolynomial:
    """The same polynomial, built bottom-up over the partition tree.

    Every class that is a union of blocks gets multiplicities making ``v(f)``
    constant on its poor neighborhoods. A block holds a single root with
    multiplicity 1. A split class combines its children ``f_i`` as
    ``prod f_i**(c / d_i)`` where ``d_i`` is the gap between the inner poor
    value of ``f_i`` and its value on the sibling classes and
    ``c = lcm(d_i)``. The final vector is divided by its gcd.
    """
    S = ctx.sorted(ctx.element(s) for s in S)
    _require_balanced(ctx, S)
    blocks = set(associated_partition(ctx, S).blocks)

    def build(cls, members):
        if cls in blocks:
            (s,) = members
            return {s: 1}, cls.level
        parts = []
        for child in subclasses(ctx, cls):
            inside = [s for s in members if ctx.reduce(s, child.level) == child.rep]
            k, inner = build(child, inside)
            outer = cls.level * sum(k.values())
            parts.append((k, inner, outer))
        c = math.lcm(*(inner - outer for _, inner, outer in parts))
        mult = {}
        value = c
        for k, inner, outer in parts:
            ci = c // (inner - outer)
            for s, ks in k.items():
                mult[s] = ci * ks
            value += ci * outer
        return mult, value

    mult, value = build(ResidueClass(ctx.zero, 0), S)
    g = math.gcd(*mult.values())
    return SplitPolynomial(ctx, S, tuple(mult[s] // g for s in S), value // g)
