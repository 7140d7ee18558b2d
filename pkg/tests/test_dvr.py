import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ALL_CONTEXTS, F3, F4, F9, ZP2, ZP3, elements
from intvalpoly import INFINITY, CoveredError, DvrContext, ResidueClass
from intvalpoly.dvr import (
    class_contains,
    class_member_outside,
    class_of,
    contains,
    format_class,
    irreducible_for,
    parent,
    subclasses,
    valuation_diff,
)


def test_valuation_diff_examples():
    assert valuation_diff(ZP2, 0, 1) == 0
    assert valuation_diff(ZP2, 4, 0) == 2
    # t^2 + t over F_3
    assert valuation_diff(F3, (0, 1, 1), ()) == 1
    assert valuation_diff(ZP3, 7, 7) is INFINITY


def test_infinity_behaves_in_min_and_sum():
    assert min(INFINITY, 5) == 5
    assert INFINITY > 10**9
    assert INFINITY + 3 is INFINITY
    assert 2 * INFINITY is INFINITY
    with pytest.raises(ArithmeticError):
        0 * INFINITY


def test_class_of_examples():
    assert class_of(ZP2, 6, 2) == ResidueClass(2, 2)
    assert class_of(ZP2, 5, 0) == ResidueClass(0, 0)
    assert class_of(ZP3, 10, 1) == ResidueClass(1, 1)
    assert class_of(ZP2, -1, 3) == ResidueClass(7, 3)


def test_subclasses_examples():
    assert subclasses(ZP2, ResidueClass(0, 1)) == [ResidueClass(0, 2), ResidueClass(2, 2)]
    assert subclasses(ZP2, ResidueClass(0, 0)) == [ResidueClass(0, 1), ResidueClass(1, 1)]
    assert subclasses(ZP3, ResidueClass(1, 1)) == [ResidueClass(r, 2) for r in (1, 4, 7)]


def test_class_member_outside_examples():
    assert class_member_outside(ZP2, ResidueClass(0, 1), {ResidueClass(0, 2)}) == 2
    assert class_member_outside(ZP2, ResidueClass(0, 0), set()) == 0
    with pytest.raises(CoveredError, match="covered"):
        class_member_outside(ZP2, ResidueClass(0, 1), {ResidueClass(0, 2), ResidueClass(2, 2)})


def test_class_member_outside_deep_cover():
    avoid = [ResidueClass(0, 2), ResidueClass(6, 3), ResidueClass(3, 2)]
    w = class_member_outside(ZP2, ResidueClass(0, 0), avoid)
    # digit-by-digit walk: 0+M is searched before 1+M
    assert w == 2
    w = class_member_outside(ZP2, ResidueClass(0, 1), avoid)
    assert w == 2 and not any(contains(ZP2, c, w) for c in avoid)


def test_context_validation():
    with pytest.raises(ValueError):
        DvrContext.zp(4)
    with pytest.raises(ValueError):
        DvrContext("zp", 2, 2)
    with pytest.raises(ValueError):
        DvrContext("qp", 2, 1)
    with pytest.raises(ValueError):
        DvrContext.fqt(2, 0)


def test_hardcoded_irreducibles():
    assert irreducible_for(2, 2) == (1, 1, 1)
    assert irreducible_for(3, 2) == (2, 2, 1)
    # searched fallback is monic of the right degree
    g = irreducible_for(2, 3)
    assert len(g) == 4 and g[-1] == 1


@pytest.mark.parametrize("ctx", [F4, F9], ids=str)
def test_residue_field_is_a_field(ctx):
    units = [(c,) for c in range(1, ctx.q)]
    for a in units:
        assert any(ctx.mul(a, b) == ctx.one for b in units)
        for b in units:
            assert ctx.mul(a, b) == ctx.mul(b, a)


def test_text_grammar_roundtrip():
    assert ZP2.format(ZP2.parse(" 12 ")) == "12"
    assert F3.parse("0") == ()
    assert F3.parse("1,0,2") == (1, 0, 2)
    assert F3.format((1, 0, 2)) == "1,0,2"
    assert F3.format(()) == "0"
    with pytest.raises(ValueError):
        F3.parse("1,3")
    assert format_class(ZP2, ResidueClass(0, 0)) == "R"
    assert format_class(ZP2, ResidueClass(2, 1)) == "2+M"
    assert format_class(ZP2, ResidueClass(0, 2)) == "0+M^2"


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=str)
def test_residues_are_canonical_and_ordered(ctx):
    reps = ctx.residues(2)
    assert len(reps) == ctx.q**2
    assert [ctx.key(r) for r in reps] == list(range(ctx.q**2))
    assert all(ctx.reduce(r, 2) == r for r in reps)


# -- properties ---------------------------------------------------------------


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=str)
def test_ultrametric(ctx):
    @given(elements(ctx), elements(ctx), elements(ctx))
    def check(a, b, c):
        ab, ac, cb = valuation_diff(ctx, a, b), valuation_diff(ctx, a, c), valuation_diff(ctx, c, b)
        assert ab >= min(ac, cb)
        if ac != cb:
            assert ab == min(ac, cb)

    check()


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=str)
def test_ring_laws(ctx):
    @given(elements(ctx, 4), elements(ctx, 4), elements(ctx, 4))
    def check(a, b, c):
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.sub(ctx.add(a, b), b) == a
        va, vb = ctx.valuation(a), ctx.valuation(b)
        assert ctx.valuation(ctx.mul(a, b)) == va + vb
        assert ctx.power(a, 3) == ctx.mul(a, ctx.mul(a, a))

    check()


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=str)
def test_class_of_agrees_with_valuation(ctx):
    @given(elements(ctx), elements(ctx), st.integers(0, 7))
    def check(a, b, n):
        same = class_of(ctx, a, n) == class_of(ctx, b, n)
        assert same == (valuation_diff(ctx, a, b) >= n)
        assert contains(ctx, class_of(ctx, a, n), a)

    check()


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=str)
def test_subclasses_partition_their_parent(ctx):
    @given(elements(ctx), st.integers(0, 4), elements(ctx))
    def check(a, n, w):
        c = class_of(ctx, a, n)
        kids = subclasses(ctx, c)
        assert len(set(kids)) == ctx.q
        assert all(parent(ctx, k) == c and class_contains(ctx, c, k) for k in kids)
        inside = [k for k in kids if contains(ctx, k, w)]
        assert len(inside) == (1 if contains(ctx, c, w) else 0)

    check()
