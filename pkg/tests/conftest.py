import pytest
from hypothesis import settings
from hypothesis import strategies as st

from intvalpoly import DvrContext

# exact arithmetic on deep trees has uneven timing; correctness is what is tested
settings.register_profile("default", deadline=None)
settings.load_profile("default")

ZP2, ZP3, ZP5 = DvrContext.zp(2), DvrContext.zp(3), DvrContext.zp(5)
F2, F3, F4, F9 = DvrContext.fqt(2), DvrContext.fqt(3), DvrContext.fqt(2, 2), DvrContext.fqt(3, 2)

ALL_CONTEXTS = [ZP2, ZP3, ZP5, F2, F3, F4, F9]


def elements(ctx, max_digits=6):
    """Hypothesis strategy for elements of ``ctx`` (nonnegative ints or digit tuples)."""
    if ctx.backend == "zp":
        return st.integers(min_value=-(ctx.p**max_digits), max_value=ctx.p**max_digits)
    return st.lists(st.integers(0, ctx.q - 1), max_size=max_digits).map(ctx.element)


def residue_sets(ctx, level, max_size=6):
    """Nonempty sets of representatives modulo ``M**level``, sorted by key."""
    return st.sets(st.integers(0, ctx.q**level - 1), min_size=1, max_size=max_size).map(
        lambda ks: ctx.sorted(ctx.from_key(k) for k in ks)
    )


@pytest.fixture(params=ALL_CONTEXTS, ids=str)
def ctx(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
