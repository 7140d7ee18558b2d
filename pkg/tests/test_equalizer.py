from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALL_CONTEXTS, F4, ZP2, ZP3, residue_sets
from intvalpoly import (
    ClassUnion,
    NotBalancedError,
    ResidueClass,
    SplitPolynomial,
    associated_partition,
    enumerate_balanced,
    equalizing_polynomial,
    equalizing_polynomial_lcm,
    fixed_divisor_val,
    poor_values,
    posh_set,
    rich_set,
)
from intvalpoly.dvr import subclasses
from intvalpoly.equalizer import evaluate, expand, poor_witnesses, valuation_at

C = ResidueClass


def test_poor_values_examples():
    assert poor_values(ZP2, [0, 1], (1, 1)) == {C(0, 1): 1, C(1, 1): 1}
    assert poor_values(ZP2, [0, 1], (2, 1)) == {C(0, 1): 2, C(1, 1): 1}
    assert set(poor_values(ZP2, [0, 1, 2], (1, 3, 1)).values()) == {3}
    assert poor_values(ZP2, [0, 1], {1: 1, 0: 2}) == {C(0, 1): 2, C(1, 1): 1}


def test_fixed_divisor_examples():
    assert fixed_divisor_val(ZP2, [0, 1], (1, 1)) == 1
    assert fixed_divisor_val(ZP2, [0, 1, 2, 3], (1, 1, 1, 1)) == 3
    for ctx in ALL_CONTEXTS:
        assert fixed_divisor_val(ctx, [ctx.one], (1,)) == 0


def test_posh_set_examples():
    assert posh_set(ZP2, [0, 1], (1, 1)) == ClassUnion.of(ZP2, [C(0, 2), C(1, 2)])
    u = posh_set(ZP2, [0, 1], (2, 1))
    assert u == ClassUnion.of(ZP2, [C(0, 2), C(1, 2), C(2, 2)])
    assert str(u) == "0+M u 1+M^2" and u.measure() == Fraction(3, 4)
    for ctx in ALL_CONTEXTS:
        assert posh_set(ctx, [ctx.one], (1,)) == ClassUnion.of(ctx, [C(ctx.one, 1)])


def test_equalizing_examples():
    for build in (equalizing_polynomial, equalizing_polynomial_lcm):
        f = build(ZP2, [0, 1])
        assert (f.mult, f.const_val) == ((1, 1), 1)
        f = build(ZP2, [2, 0, 1])
        assert (f.roots, f.mult, f.const_val) == ((0, 1, 2), (1, 3, 1), 3)
        f = build(ZP2, [0, 1, 2, 3])
        assert (f.mult, f.const_val) == ((1, 1, 1, 1), 3)
        f = build(ZP3, [7])
        assert (f.mult, f.const_val) == ((1,), 0)


def test_equalizing_rejects_unbalanced():
    for build in (equalizing_polynomial, equalizing_polynomial_lcm):
        with pytest.raises(NotBalancedError) as err:
            build(ZP2, [0, 2])
        assert not err.value.certificate
        assert err.value.certificate.uncovered == 1


def test_split_polynomial_validation_and_json():
    f = SplitPolynomial(ZP2, [2, 0, 1], [1, 1, 3], 3)
    assert f.roots == (0, 1, 2) and f.mult == (1, 3, 1) and f.degree == 5
    assert f.to_json() == {"roots": ["0", "1", "2"], "mult": [1, 3, 1], "const_val": 3}
    full = f.to_json(expanded=True)
    assert full["coefficients"] == ["0", "2", "-7", "9", "-5", "1"] and full["denominator"] == "8"
    assert f.scaled(2).mult == (2, 6, 2) and f.scaled(2).const_val == 6
    with pytest.raises(ValueError):
        SplitPolynomial(ZP2, [], [])
    with pytest.raises(ValueError):
        SplitPolynomial(ZP2, [0, 0], [1, 1])
    with pytest.raises(ValueError):
        SplitPolynomial(ZP2, [0, 1], [1, 0])
    with pytest.raises(ValueError):
        SplitPolynomial(ZP2, [0, 1], [1])


def test_expand_and_evaluate_agree():
    coeffs = expand(ZP3, [0, 1, 5], (2, 1, 1))
    for w in range(-5, 12):
        assert sum(c * w**i for i, c in enumerate(coeffs)) == evaluate(ZP3, [0, 1, 5], (2, 1, 1), w)


@pytest.mark.parametrize("ctx", [ZP2, ZP3, F4], ids=str)
def test_two_constructions_agree(ctx):
    for S in enumerate_balanced(ctx, 3 if ctx.q < 4 else 2, 16, least_only=True):
        f, g = equalizing_polynomial(ctx, S), equalizing_polynomial_lcm(ctx, S)
        assert f == g
        P = associated_partition(ctx, S)
        assert posh_set(ctx, S, f.mult) == rich_set(ctx, P)
        assert posh_set(ctx, S, f.mult).measure() == Fraction(1, ctx.q)
        assert fixed_divisor_val(ctx, S, f.mult) == f.const_val


# -- properties ---------------------------------------------------------------------


def mult_for(S):
    return st.lists(st.integers(1, 4), min_size=len(S), max_size=len(S)).map(tuple)


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=str)
def test_poor_values_match_evaluation(ctx):
    @given(residue_sets(ctx, 3, 5).flatmap(lambda S: st.tuples(st.just(S), mult_for(S))))
    @settings(max_examples=40)
    def check(case):
        S, h = case
        values = poor_values(ctx, S, h)
        for block, w in poor_witnesses(ctx, S, h).items():
            assert ctx.valuation(evaluate(ctx, S, h, w)) == values[block] == valuation_at(ctx, S, h, w)
        # every point of R is either posh or sits at the minimum
        low = min(values.values())
        posh = posh_set(ctx, S, h)
        for k in range(ctx.q ** (4 if ctx.q < 5 else 3)):
            w = ctx.from_key(k)
            v = valuation_at(ctx, S, h, w)
            assert v >= low
            assert (w in posh) == (v > low)

    check()


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=str)
def test_scaling_and_constant_invariance(ctx):
    @given(residue_sets(ctx, 3, 5).flatmap(lambda S: st.tuples(st.just(S), mult_for(S))), st.integers(2, 4))
    @settings(max_examples=40)
    def check(case, ell):
        S, h = case
        scaled = tuple(ell * x for x in h)
        base = poor_values(ctx, S, h)
        assert poor_values(ctx, S, scaled) == {b: ell * v for b, v in base.items()}
        assert fixed_divisor_val(ctx, S, scaled) == ell * fixed_divisor_val(ctx, S, h)
        assert posh_set(ctx, S, scaled) == posh_set(ctx, S, h)
        assert rich_set(ctx, associated_partition(ctx, S)) <= posh_set(ctx, S, h)
        # the disjoint-union shortcut agrees with general normalization
        u = posh_set(ctx, S, h)
        assert ClassUnion.of(ctx, [c for k in u.classes for c in subclasses(ctx, k)]) == u

    check()
