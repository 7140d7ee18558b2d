"""M-adic partitions of R attached to finite sets.

For a finite set ``S`` the associated partition splits ``R`` top-down: a
class is broken into its ``q`` subclasses exactly when every subclass meets
``S``; otherwise it becomes a block. The level of the block holding ``s``
is ``rho_S(s)``. Inside a block, the subclasses one level down that meet
``S`` are *rich*, the others *poor*.
"""

from __future__ import annotations

import functools
import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .dvr import (
    DvrContext,
    Element,
    ResidueClass,
    class_contains,
    class_key,
    class_member_outside,
    class_of,
    class_to_json,
    classes_meet,
    contains,
    format_class,
    parent,
    subclasses,
    valuation_diff,
)


def _root(ctx):
    return ResidueClass(ctx.zero, 0)


# -- finite unions of residue classes -------------------------------------------


def _normalize(ctx, classes, disjoint=False):
    cs = set(classes)
    while True:
        if not disjoint:
            # drop classes with an ancestor in the set
            cs = {
                c
                for c in cs
                if not any(ResidueClass(ctx.reduce(c.rep, j), j) in cs for j in range(c.level))
            }
        siblings = defaultdict(int)
        for c in cs:
            if c.level > 0:
                siblings[parent(ctx, c)] += 1
        full = [par for par, count in siblings.items() if count == ctx.q]
        if not full:
            return frozenset(cs)
        if disjoint:
            # the children of a merged parent are exactly its q stored siblings
            full_set = set(full)
            cs = {c for c in cs if c.level == 0 or parent(ctx, c) not in full_set}
        cs.update(full)


def _covered(ctx, c, classes):
    if any(class_contains(ctx, b, c) for b in classes):
        return True
    inner = [b for b in classes if class_contains(ctx, c, b)]
    if not inner:
        return False
    return all(_covered(ctx, child, inner) for child in subclasses(ctx, c))


@dataclass(frozen=True)
class ClassUnion:
    """A finite union of residue classes in canonical form.

    No stored class contains another and no complete family of ``q``
    siblings is stored (it is merged into the parent), so two unions are
    equal as sets exactly when they compare equal.
    """

    ctx: DvrContext
    classes: frozenset

    @classmethod
    def of(cls, ctx: DvrContext, classes: Iterable[ResidueClass] = (), disjoint: bool = False) -> "ClassUnion":
        """Canonical union; pass ``disjoint=True`` only for pairwise disjoint classes."""
        return cls(ctx, _normalize(ctx, classes, disjoint))

    def sorted_classes(self) -> list:
        return sorted(self.classes, key=lambda c: class_key(self.ctx, c))

    def measure(self) -> Fraction:
        return sum((Fraction(1, self.ctx.q**c.level) for c in self.classes), Fraction(0))

    def __contains__(self, a: Element) -> bool:
        return any(contains(self.ctx, c, a) for c in self.classes)

    def covers(self, c: ResidueClass) -> bool:
        return _covered(self.ctx, c, self.classes)

    def issubset(self, other: "ClassUnion") -> bool:
        return all(_covered(self.ctx, c, other.classes) for c in self.classes)

    def __le__(self, other):
        return self.issubset(other)

    def __lt__(self, other):
        return self != other and self.issubset(other)

    def __or__(self, other: "ClassUnion") -> "ClassUnion":
        return ClassUnion.of(self.ctx, self.classes | other.classes)

    def isdisjoint(self, other: "ClassUnion") -> bool:
        return not any(classes_meet(self.ctx, a, b) for a in self.classes for b in other.classes)

    def to_json(self) -> list:
        return [class_to_json(self.ctx, c) for c in self.sorted_classes()]

    def __str__(self):
        if not self.classes:
            return "{}"
        return " u ".join(format_class(self.ctx, c) for c in self.sorted_classes())


def measure(u: ClassUnion) -> Fraction:
    """The sigma-measure: each class ``r + M**n`` weighs ``q**-n``."""
    return u.measure()


# -- the associated partition ---------------------------------------------------


@dataclass(frozen=True)
class PointedPartition:
    """The partition ``C_S`` together with the set ``S`` it came from.

    ``reps`` pairs each block with its least element of ``S`` and the block
    level; ``blocks[i]`` is the block of ``reps[i][0]``. Blocks are listed in
    key order of their representatives.
    """

    ctx: DvrContext
    elements: tuple
    reps: tuple
    blocks: tuple
    assignment: dict = field(compare=False, repr=False)

    def rho(self, s: Element) -> int:
        return self.assignment[s].level

    def block_of(self, s: Element) -> ResidueClass:
        return self.assignment[s]

    @property
    def representatives(self) -> tuple:
        return tuple(s for s, _ in self.reps)

    def members(self, block: ResidueClass) -> tuple:
        """``S_t``: the elements of ``S`` lying in ``block``."""
        return tuple(s for s in self.elements if self.assignment[s] == block)

    def to_json(self) -> dict:
        ctx = self.ctx
        return {
            "blocks": [
                {
                    "rep": ctx.format(s),
                    "rho": rho,
                    "class": class_to_json(ctx, b),
                    "members": [ctx.format(t) for t in self.members(b)],
                }
                for (s, rho), b in zip(self.reps, self.blocks)
            ]
        }


def _check_set(ctx, S):
    S = tuple(ctx.element(s) for s in S)
    if not S:
        raise ValueError("the set must be nonempty")
    if len(set(S)) != len(S):
        raise ValueError("the set must not contain repeated elements")
    return ctx.sorted(S)


@functools.lru_cache(maxsize=4096)
def _associated_partition(ctx, S):
    assignment = {}
    blocks = []

    def build(cls, members):
        buckets = defaultdict(list)
        for s in members:
            buckets[ctx.digit(s, cls.level)].append(s)
        if len(buckets) == ctx.q:
            for child in subclasses(ctx, cls):
                build(child, buckets[ctx.digit(child.rep, cls.level)])
        else:
            blocks.append(cls)
            for s in members:
                assignment[s] = cls

    build(_root(ctx), S)
    first = {}
    for s in S:
        first.setdefault(assignment[s], s)
    blocks.sort(key=lambda b: ctx.key(first[b]))
    reps = tuple((first[b], b.level) for b in blocks)
    return PointedPartition(ctx, S, reps, tuple(blocks), assignment)


def associated_partition(ctx: DvrContext, S: Iterable[Element]) -> PointedPartition:
    """Build ``C_S`` by splitting classes all of whose subclasses meet ``S``."""
    return _associated_partition(ctx, _check_set(ctx, S))


@dataclass(frozen=True)
class BalanceCheck:
    """Outcome of :func:`is_balanced`; truthy iff the set is balanced.

    ``levels`` maps each element to its minimal isolating level ``n_s``;
    ``union`` is the union of the isolating classes and ``uncovered`` an
    element of ``R`` outside it (``None`` when balanced).
    """

    balanced: bool
    levels: dict
    union: ClassUnion
    uncovered: Element = None

    def __bool__(self):
        return self.balanced

    def to_json(self) -> dict:
        ctx = self.union.ctx
        out = {
            "balanced": self.balanced,
            "levels": {ctx.format(s): n for s, n in self.levels.items()},
            "measure": str(self.union.measure()),
        }
        if self.uncovered is not None:
            out["uncovered"] = ctx.format(self.uncovered)
        return out


def is_balanced(ctx: DvrContext, S: Iterable[Element]) -> BalanceCheck:
    """Decide whether the minimal isolating classes of ``S`` cover ``R``.

    Works from pairwise valuations only: ``n_s`` is one more than the largest
    ``v(s - t)``, and coverage is decided by the measure of the union.
    """
    S = _check_set(ctx, S)
    levels = {}
    for s in S:
        others = [valuation_diff(ctx, s, t) for t in S if t != s]
        levels[s] = 1 + max(others) if others else 0
    classes = [class_of(ctx, s, n) for s, n in levels.items()]
    union = ClassUnion.of(ctx, classes)
    if union.measure() == 1:
        return BalanceCheck(True, levels, union)
    return BalanceCheck(False, levels, union, class_member_outside(ctx, _root(ctx), classes))


@functools.lru_cache(maxsize=4096)
def _neighborhoods(P: PointedPartition) -> tuple:
    """Per block, the subclasses one level down split into those meeting ``S`` and the rest."""
    ctx = P.ctx
    out = []
    for block in P.blocks:
        members = P.members(block)
        kids = subclasses(ctx, block)
        meets = [any(contains(ctx, c, s) for s in members) for c in kids]
        out.append((
            tuple(c for c, m in zip(kids, meets) if m),
            tuple(c for c, m in zip(kids, meets) if not m),
        ))
    return tuple(out)


def rich_neighborhoods(P: PointedPartition) -> dict:
    """Per block, the subclasses one level down that meet ``S``."""
    return {b: list(rich) for b, (rich, _) in zip(P.blocks, _neighborhoods(P))}


def poor_neighborhoods(ctx: DvrContext, P: PointedPartition) -> dict:
    """Per block, the subclasses one level down that miss ``S`` (at least one each)."""
    return {b: list(poor) for b, (_, poor) in zip(P.blocks, _neighborhoods(P))}


@functools.lru_cache(maxsize=4096)
def _rich_set(P: PointedPartition) -> ClassUnion:
    return ClassUnion.of(P.ctx, (c for rich, _ in _neighborhoods(P) for c in rich), disjoint=True)


def rich_set(ctx: DvrContext, P: PointedPartition) -> ClassUnion:
    return _rich_set(P)


def balanced_subset(ctx: DvrContext, S: Iterable[Element]):
    """A balanced ``S' <= S`` with the same partition: the least element of each block."""
    P = associated_partition(ctx, S)
    return P.representatives, P


# -- enumeration -----------------------------------------------------------------


def _partitions(ctx, cls, max_level, budget):
    """Partitions of ``cls`` into at most ``budget`` blocks of level <= max_level."""
    if budget < 1:
        return
    yield [cls]
    if cls.level < max_level and budget >= ctx.q:
        yield from _split(ctx, subclasses(ctx, cls), max_level, budget)


def _split(ctx, children, max_level, budget):
    if not children:
        yield []
        return
    head, rest = children[0], children[1:]
    # every remaining child needs at least one block
    for part in _partitions(ctx, head, max_level, budget - len(rest)):
        for tail in _split(ctx, rest, max_level, budget - len(part)):
            yield part + tail


def enumerate_partitions(ctx: DvrContext, max_level: int, max_size: int) -> Iterator[list]:
    """Every M-adic partition with blocks of level <= ``max_level`` and at most ``max_size`` blocks."""
    yield from _partitions(ctx, _root(ctx), max_level, max_size)


def _block_members(ctx, block, max_level):
    # the canonical representatives modulo M**max_level that lie in block
    base = ctx.key(block.rep)
    step = ctx.q**block.level
    return [ctx.from_key(base + i * step) for i in range(ctx.q ** (max_level - block.level))]


def enumerate_balanced(
    ctx: DvrContext, max_level: int, max_size: int, least_only: bool = False
) -> Iterator[tuple]:
    """Balanced subsets of the representatives modulo ``M**max_level`` with at most ``max_size`` elements.

    Partitions are generated as trees (a leaf is kept or split into its ``q``
    children), and each block then receives every representative it
    contains. With ``least_only`` each partition is reported once, by the
    canonical representatives of its blocks.
    """
    if max_level < 1 or max_size < 1:
        raise ValueError("max_level and max_size must be >= 1")
    for blocks in enumerate_partitions(ctx, max_level, max_size):
        if least_only:
            yield ctx.sorted(b.rep for b in blocks)
            continue
        choices = [_block_members(ctx, b, max_level) for b in blocks]
        yield from _product_sets(ctx, choices)


def _product_sets(ctx, choices):
    if not choices:
        yield ()
        return
    for combo in itertools.product(*choices):
        yield ctx.sorted(combo)
