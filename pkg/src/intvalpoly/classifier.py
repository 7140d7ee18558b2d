"""Decide absolute irreducibility of split integer-valued polynomials."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .dvr import DvrContext
from .equalizer import SplitPolynomial, equalizing_polynomial, fixed_divisor_val
from .exceptions import RootInRError
from .partition import is_balanced


class Verdict(str, enum.Enum):
    ABSOLUTELY_IRREDUCIBLE = "absolutely-irreducible"
    NOT_ABSOLUTELY_IRREDUCIBLE = "not-absolutely-irreducible"
    NOT_INTEGER_VALUED = "not-integer-valued"
    NOT_IMAGE_PRIMITIVE = "not-image-primitive"

    def __str__(self):
        return self.value


class FailedCondition(str, enum.Enum):
    NOT_BALANCED = "not-balanced"
    WRONG_MULTIPLICITIES = "wrong-multiplicities"
    WRONG_CONSTANT = "wrong-constant"
    SIZE_CONGRUENCE_PREFILTER = "size-congruence-prefilter"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    failed_condition: FailedCondition = None
    witness: dict = field(default=None, compare=False)
    polynomial: SplitPolynomial = field(default=None, compare=False)

    @property
    def absolutely_irreducible(self) -> bool:
        return self.verdict is Verdict.ABSOLUTELY_IRREDUCIBLE

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value}
        if self.failed_condition is not None:
            out["failed_condition"] = self.failed_condition.value
        if self.witness is not None:
            out["witness"] = self.witness
        if self.polynomial is not None:
            out["polynomial"] = self.polynomial.to_json()
        return out


def classify(poly: SplitPolynomial) -> ClassificationReport:
    """Classify ``c**-1 * prod (x - s)**m_s``.

    The checks run in order: integer-valued, image-primitive, the size
    congruence ``|S| = 1 mod (q - 1)``, balancedness, and finally equality of
    the multiplicities with the unimodular equalizing vector. The first
    failure decides the report.
    """
    ctx, S = poly.ctx, poly.roots
    d = fixed_divisor_val(ctx, S, poly.mult)
    if poly.const_val != d:
        verdict = Verdict.NOT_INTEGER_VALUED if poly.const_val > d else Verdict.NOT_IMAGE_PRIMITIVE
        return ClassificationReport(
            verdict, FailedCondition.WRONG_CONSTANT, {"const_val": d}, poly
        )

    if len(S) % (ctx.q - 1) != 1 % (ctx.q - 1):
        return ClassificationReport(
            Verdict.NOT_ABSOLUTELY_IRREDUCIBLE,
            FailedCondition.SIZE_CONGRUENCE_PREFILTER,
            {"size": len(S), "modulus": ctx.q - 1},
            poly,
        )

    check = is_balanced(ctx, S)
    if not check:
        return ClassificationReport(
            Verdict.NOT_ABSOLUTELY_IRREDUCIBLE, FailedCondition.NOT_BALANCED, check.to_json(), poly
        )

    expected = equalizing_polynomial(ctx, S)
    if expected.mult != poly.mult:
        return ClassificationReport(
            Verdict.NOT_ABSOLUTELY_IRREDUCIBLE,
            FailedCondition.WRONG_MULTIPLICITIES,
            {"mult": list(expected.mult), "const_val": expected.const_val},
            poly,
        )
    return ClassificationReport(Verdict.ABSOLUTELY_IRREDUCIBLE, polynomial=poly)


def classify_linear_kr(ctx: DvrContext, a_val: int, b_is_unit: bool) -> Verdict:
    """Classify ``a x - b`` given ``v(a)`` and whether ``b`` is a unit.

    With ``v(a) >= 1`` the root ``b / a`` lies outside ``R``; the polynomial is
    absolutely irreducible exactly when ``b`` is a unit, since then every
    value ``a r - b`` is a unit. A unit ``a`` puts the root in ``R``, which is
    :func:`classify`'s job.
    """
    if a_val < 0:
        raise ValueError("a must lie in R")
    if a_val == 0:
        raise RootInRError("a is a unit, so the root b/a lies in R; use classify()")
    if b_is_unit:
        return Verdict.ABSOLUTELY_IRREDUCIBLE
    return Verdict.NOT_ABSOLUTELY_IRREDUCIBLE
