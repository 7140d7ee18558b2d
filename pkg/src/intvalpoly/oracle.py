"""Bounded brute-force check of absolute irreducibility.

An image-primitive ``F`` with monic part ``f`` is absolutely irreducible iff
every monic ``g`` whose roots lie among those of ``f`` and whose posh set is
contained in that of ``f`` is a power of ``f``. For split ``f`` the
candidates are ``g = prod_{t in T} (x - t)**k_t`` with ``T`` a nonempty
subset of the roots; the search below walks them under a multiplicity bound.
It never solves the equalizing system; it only compares posh sets, computed
from partition data.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .equalizer import SplitPolynomial, fixed_divisor_val, posh_set
from .exceptions import NotImagePrimitiveError
from .exactla import partition_matrix
from .partition import ClassUnion, associated_partition, poor_neighborhoods, rich_set

CONFIRMED = "confirmed-up-to-bound"
REFUTED = "refuted"


@dataclass(frozen=True)
class OracleConfig:
    """Search bounds.

    ``max_mult`` caps every candidate multiplicity ``k_t``. ``max_power``
    restricts candidates to divisors of ``f**n`` with ``n <= max_power``,
    i.e. ``k_t <= max_power * m_t``; ``None`` means no restriction beyond
    ``max_mult``.
    """

    max_mult: int = 4
    max_power: Optional[int] = None

    def __post_init__(self):
        if self.max_mult < 1:
            raise ValueError("max_mult must be >= 1")
        if self.max_power is not None and self.max_power < 1:
            raise ValueError("max_power must be >= 1")


@dataclass(frozen=True)
class OracleResult:
    status: str
    witness: Optional[SplitPolynomial] = None
    candidates: int = 0

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED

    def to_json(self) -> dict:
        out = {"verdict": self.status, "candidates": self.candidates}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


_CHUNK = 1 << 16


def _is_power(k, m) -> bool:
    if k[0] % m[0]:
        return False
    ell = k[0] // m[0]
    return all(ki == ell * mi for ki, mi in zip(k, m))


def _candidate_filter(ctx, T, target):
    """Decide posh(g) <= target for every ``g`` with root set ``T`` at once.

    Returns ``None`` when no ``g`` can fit (its rich set already escapes), else
    a ``(gain, strict)`` pair. ``k @ gain`` gives the poor value of ``g`` on
    every block of ``C_T``; the poor part of a block joins the posh set exactly
    when that value is above the minimum, so ``g`` fits iff every ``strict``
    block sits at the minimum.
    """
    P = associated_partition(ctx, T)
    if not rich_set(ctx, P).issubset(target):
        return None
    rows = partition_matrix(P).rows
    slot = [P.blocks.index(P.block_of(t)) for t in T]
    gain = np.array([[row[j] for row in rows] for j in slot], dtype=np.int64)
    poor = poor_neighborhoods(ctx, P)
    strict = np.array([not ClassUnion.of(ctx, poor[b]).issubset(target) for b in P.blocks])
    return gain, strict


def _first_fit(gain, strict, bounds, skip_powers_of):
    """Index of the first lexicographic ``k`` that fits, or ``None``."""
    total = math.prod(bounds)
    strides = [math.prod(bounds[i + 1:]) for i in range(len(bounds))]
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        k = np.stack([(idx // st) % b + 1 for st, b in zip(strides, bounds)], axis=1)
        values = k @ gain
        ok = ((values == values.min(axis=1, keepdims=True)) | ~strict).all(axis=1)
        if skip_powers_of is not None:
            m = np.array(skip_powers_of, dtype=np.int64)
            power = (k[:, 0] % m[0] == 0) & (k * m[0] == k[:, :1] * m).all(axis=1)
            ok &= ~power
        hits = np.flatnonzero(ok)
        if hits.size:
            return lo + int(hits[0])
    return None


def oracle_check(poly: SplitPolynomial, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """Search for a monic ``g`` that is not a power of ``f`` yet fits inside its posh set.

    Candidates run by ``|T|`` ascending, then ``T`` in key order, then ``k``
    lexicographically; the first hit is returned as the witness (divided by
    its fixed divisor). ``candidates`` counts the vectors looked at, powers of
    ``f`` included.
    """
    ctx, S, m = poly.ctx, poly.roots, poly.mult
    if poly.const_val != fixed_divisor_val(ctx, S, m):
        raise NotImagePrimitiveError("oracle_check needs the image-primitive representative")
    target = posh_set(ctx, S, m)
    mult_of = dict(zip(S, m))
    checked = 0
    for size in range(1, len(S) + 1):
        for T in itertools.combinations(S, size):
            filt = _candidate_filter(ctx, T, target)
            if filt is None:
                continue
            bounds = [
                cfg.max_mult if cfg.max_power is None else min(cfg.max_mult, cfg.max_power * mult_of[t])
                for t in T
            ]
            hit = _first_fit(*filt, bounds, m if size == len(S) else None)
            if hit is None:
                checked += math.prod(bounds)
                continue
            checked += hit + 1
            k = tuple(int(hit // math.prod(bounds[i + 1:])) % b + 1 for i, b in enumerate(bounds))
            if not posh_set(ctx, T, k).issubset(target):
                raise AssertionError(f"posh filter disagrees for T={T}, k={k}")
            g = SplitPolynomial(ctx, T, k, fixed_divisor_val(ctx, T, k))
            return OracleResult(REFUTED, g, checked)
    return OracleResult(CONFIRMED, None, checked)


def strict_witness(f_poly: SplitPolynomial, g_poly: SplitPolynomial) -> bool:
    """True iff ``g`` shows ``f`` is not absolutely irreducible by a strict inclusion.

    Requires ``roots(g) <= roots(f)`` and ``posh(g) <= posh(f)`` with at least
    one of the two inclusions strict.
    """
    ctx = f_poly.ctx
    roots_f, roots_g = set(f_poly.roots), set(g_poly.roots)
    if not roots_g <= roots_f:
        return False
    posh_f = posh_set(ctx, f_poly.roots, f_poly.mult)
    posh_g = posh_set(ctx, g_poly.roots, g_poly.mult)
    if not posh_g.issubset(posh_f):
        return False
    return roots_g < roots_f or posh_g != posh_f
