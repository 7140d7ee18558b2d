"""Exact rational linear algebra for the partition-matrix system."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dvr import valuation_diff
from .exceptions import EqualizingError
from .partition import PointedPartition


@dataclass(frozen=True)
class PartitionMatrix:
    """Rows and columns indexed by block representatives.

    The diagonal holds the block levels, the off-diagonal entries the
    valuations of differences of representatives.
    """

    index: tuple
    rows: tuple

    def __len__(self):
        return len(self.index)


@dataclass(frozen=True)
class MultiplicityVector:
    """The unimodular positive solution ``m`` of ``A m = e * 1``."""

    m: tuple
    e: int


@functools.lru_cache(maxsize=4096)
def partition_matrix(P: PointedPartition) -> PartitionMatrix:
    ctx = P.ctx
    index = P.representatives
    rho = dict(P.reps)
    rows = tuple(
        tuple(rho[s] if s == t else valuation_diff(ctx, s, t) for t in index)
        for s in index
    )
    return PartitionMatrix(index, rows)


def _square(A) -> list:
    rows = A.rows if isinstance(A, PartitionMatrix) else A
    rows = [list(row) for row in rows]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("matrix must be square")
    return rows


def _integer_rows(rows) -> tuple:
    """Scale each row to integers; returns the rows and the product of the scale factors."""
    out, scale = [], 1
    for row in rows:
        if all(isinstance(x, int) for x in row):
            out.append(list(row))
            continue
        row = [Fraction(x) for x in row]
        d = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
        scale *= d
    return out, scale


def determinant(A) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    a, scale = _integer_rows(_square(A))
    n = len(a)
    sign, prev = 1, 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) // prev
            a[r][col] = 0
        prev = a[col][col]
    return Fraction(sign * (a[n - 1][n - 1] if n else 1), scale)


def solve(A, b: Sequence) -> list:
    """The unique solution of ``A x = b``; ``None`` when ``A`` is singular.

    Gauss-Jordan over the integers: rows are combined by cross-multiplication
    and divided by their content, so no rational arithmetic is needed until
    the final quotients.
    """
    rows = _square(A)
    n = len(rows)
    aug, _ = _integer_rows(row + [bi] for row, bi in zip(rows, b))
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        top = aug[col]
        for r in range(n):
            x = aug[r][col]
            if r != col and x:
                row = [y * top[col] - x * t for y, t in zip(aug[r], top)]
                g = math.gcd(*row)
                aug[r] = [y // g for y in row] if g > 1 else row
    return [Fraction(aug[i][n], aug[i][i]) for i in range(n)]


def solve_equalizing(A) -> MultiplicityVector:
    """Solve ``A x = 1``, clear denominators and cancel the content.

    Raises :class:`EqualizingError` if the system is singular or the solution
    has a nonpositive coordinate; neither happens for a partition matrix.
    """
    rows = [list(r) for r in (A.rows if isinstance(A, PartitionMatrix) else A)]
    n = len(rows)
    if n == 1:
        return MultiplicityVector((1,), 0)
    x = solve(rows, [1] * n)
    if x is None:
        raise EqualizingError("singular", rows)
    if any(xi <= 0 for xi in x):
        raise EqualizingError("nonpositive-solution", rows)
    scale = math.lcm(*(xi.denominator for xi in x))
    m = [int(xi * scale) for xi in x]
    g = math.gcd(*m)
    m = tuple(mi // g for mi in m)
    e = sum(a * mi for a, mi in zip(rows[0], m))
    return MultiplicityVector(m, e)


def system_to_json(ctx, A: PartitionMatrix, mv: MultiplicityVector = None) -> dict:
    out = {"index": [ctx.format(s) for s in A.index], "rows": [list(r) for r in A.rows]}
    if mv is not None:
        out["m"] = list(mv.m)
        out["e"] = mv.e
    return out
