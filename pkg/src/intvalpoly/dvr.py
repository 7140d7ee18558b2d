"""Discrete valuation domains with finite residue field.

Two backends are provided:

``zp``
    The integers localized at a prime ``p``. Elements are Python ints, the
    uniformizer is ``p`` and the residue field has ``q = p`` elements.

``fqt``
    ``F_q[t]`` localized at ``(t)`` with ``q = p**f``. Elements are tuples of
    coefficients (lowest degree first, trailing zeros stripped); each
    coefficient is an int in ``range(q)`` whose base-``p`` digits are the
    coordinates of an element of ``F_q = F_p[u]/(g)`` for a fixed irreducible
    ``g`` (see :data:`IRREDUCIBLES`).

Residue classes ``r + M**n`` are stored with their canonical representative,
the least nonnegative residue (``zp``) or the polynomial truncated below
degree ``n`` (``fqt``). Classes and elements are ordered by :meth:`DvrContext.key`,
which reads an element's first digits as a base-``q`` number.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Union

from .exceptions import CoveredError

Element = Union[int, tuple]

# Coefficients of the fixed monic irreducible g(u), lowest degree first, used
# to build F_q for the fqt backend. The f = 2 entries are the Conway
# polynomials u^2 + u + 1 (q = 4) and u^2 + 2u + 2 (q = 9). Other (p, f) fall
# back to the least monic irreducible found by search.
IRREDUCIBLES = {
    (2, 1): (0, 1),
    (3, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (3, 2): (2, 2, 1),
}


@functools.total_ordering
class _Infinity:
    """The valuation of zero. Larger than every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("INFINITY")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        if other == 0:
            raise ArithmeticError("INFINITY * 0 is undefined")
        return self

    __rmul__ = __mul__


INFINITY = _Infinity()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _poly_mod_p_is_irreducible(g, p):
    # g monic of degree f over F_p; trial division by every monic polynomial
    # of degree 1..f//2.
    f = len(g) - 1
    for d in range(1, f // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            h = list(tail) + [1]
            r = list(g)
            for shift in range(len(r) - len(h), -1, -1):
                c = r[shift + d] % p
                if c:
                    for j, hj in enumerate(h):
                        r[shift + j] = (r[shift + j] - c * hj) % p
            if not any(x % p for x in r[:d]):
                return False
    return True


@functools.lru_cache(maxsize=None)
def irreducible_for(p: int, f: int) -> tuple:
    if (p, f) in IRREDUCIBLES:
        return IRREDUCIBLES[(p, f)]
    for tail in itertools.product(range(p), repeat=f):
        g = tuple(reversed(tail)) + (1,)
        if g[0] != 0 and _poly_mod_p_is_irreducible(g, p):
            return g
    raise ValueError(f"no irreducible of degree {f} over F_{p}")  # unreachable


@functools.lru_cache(maxsize=None)
def _field_tables(p: int, f: int):
    """Addition, negation and multiplication tables of F_{p^f} on ints 0..q-1."""
    q = p**f
    g = irreducible_for(p, f)

    def digits(a):
        return [(a // p**i) % p for i in range(f)]

    def undigits(ds):
        return sum(d * p**i for i, d in enumerate(ds))

    add = [[undigits([(x + y) % p for x, y in zip(digits(a), digits(b))])
            for b in range(q)] for a in range(q)]
    neg = [undigits([(-x) % p for x in digits(a)]) for a in range(q)]

    def mul1(a, b):
        da, db = digits(a), digits(b)
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, f - 1, -1):
            c = prod[k]
            if c:
                for j in range(f + 1):
                    prod[k - f + j] = (prod[k - f + j] - c * g[j]) % p
        return undigits(prod[:f])

    mul = [[mul1(a, b) for b in range(q)] for a in range(q)]
    return add, neg, mul


def _strip(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class DvrContext:
    """The ambient ring ``(R, M)``: backend, prime ``p`` and degree ``f``."""

    backend: str = "zp"
    p: int = 2
    f: int = 1

    def __post_init__(self):
        if self.backend not in ("zp", "fqt"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.f < 1:
            raise ValueError("extension degree f must be >= 1")
        if self.backend == "zp" and self.f != 1:
            raise ValueError("the zp backend requires f = 1")

    @classmethod
    def zp(cls, p: int) -> "DvrContext":
        return cls("zp", p, 1)

    @classmethod
    def fqt(cls, p: int, f: int = 1) -> "DvrContext":
        return cls("fqt", p, f)

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def uniformizer(self) -> Element:
        return self.p if self.backend == "zp" else (0, 1)

    @property
    def zero(self) -> Element:
        return 0 if self.backend == "zp" else ()

    @property
    def one(self) -> Element:
        return 1 if self.backend == "zp" else (1,)

    def __str__(self):
        if self.backend == "zp":
            return f"Z_({self.p})"
        return f"F_{self.q}[t]_(t)"

    # -- element arithmetic -------------------------------------------------

    def element(self, value) -> Element:
        """Coerce ``value`` to a canonical element of this ring."""
        if self.backend == "zp":
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"zp elements are ints, got {value!r}")
            return value
        if isinstance(value, int):
            value = (value,)
        coeffs = tuple(value)
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < self.q:
                raise ValueError(f"fqt coefficient {c!r} not in range({self.q})")
        return _strip(coeffs)

    def add(self, a: Element, b: Element) -> Element:
        if self.backend == "zp":
            return a + b
        add, _, _ = _field_tables(self.p, self.f)
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return _strip(add[x][y] for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        if self.backend == "zp":
            return -a
        _, neg, _ = _field_tables(self.p, self.f)
        return tuple(neg[x] for x in a)

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        if self.backend == "zp":
            return a * b
        if not a or not b:
            return ()
        add, _, mul = _field_tables(self.p, self.f)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = add[out[i + j]][mul[x][y]]
        return _strip(out)

    def power(self, a: Element, n: int) -> Element:
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def valuation(self, a: Element):
        """``v(a)``; :data:`INFINITY` for zero."""
        if self.backend == "zp":
            if a == 0:
                return INFINITY
            n = 0
            while a % self.p == 0:
                a //= self.p
                n += 1
            return n
        for i, c in enumerate(a):
            if c:
                return i
        return INFINITY

    def digit(self, a: Element, i: int) -> int:
        """The ``i``-th digit of ``a`` in its uniformizer expansion."""
        if self.backend == "zp":
            return (a // self.p**i) % self.p
        return a[i] if i < len(a) else 0

    def reduce(self, a: Element, n: int) -> Element:
        """Canonical representative of ``a + M**n``."""
        if self.backend == "zp":
            return a % self.p**n
        return _strip(a[:n])

    def key(self, a: Element) -> int:
        """Sort key: for canonical representatives, the base-q number of the digits."""
        if self.backend == "zp":
            return a
        return sum(c * self.q**i for i, c in enumerate(a))

    def from_key(self, k: int) -> Element:
        if self.backend == "zp":
            return k
        coeffs = []
        while k:
            k, c = divmod(k, self.q)
            coeffs.append(c)
        return tuple(coeffs)

    def residues(self, n: int) -> list:
        """The ``q**n`` canonical representatives modulo ``M**n`` in key order."""
        return [self.from_key(k) for k in range(self.q**n)]

    def sorted(self, elements: Iterable[Element]) -> tuple:
        return tuple(sorted(elements, key=self.key))

    # -- text grammar -------------------------------------------------------

    def parse(self, text: str) -> Element:
        text = text.strip()
        if self.backend == "zp":
            return int(text)
        if text in ("", "0"):
            return ()
        return self.element(tuple(int(c) for c in text.split(",")))

    def format(self, a: Element) -> str:
        if self.backend == "zp":
            return str(a)
        return ",".join(str(c) for c in a) if a else "0"


@dataclass(frozen=True, order=False)
class ResidueClass:
    """The class ``rep + M**level`` with canonical ``rep``."""

    rep: Element
    level: int

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("level must be >= 0")


def valuation_diff(ctx: DvrContext, a: Element, b: Element):
    if ctx.backend == "fqt":
        # digits of a - b vanish exactly where the digits of a and b agree
        for i, (x, y) in enumerate(itertools.zip_longest(a, b, fillvalue=0)):
            if x != y:
                return i
        return INFINITY
    return ctx.valuation(ctx.sub(a, b))


def class_of(ctx: DvrContext, a: Element, n: int) -> ResidueClass:
    if n < 0:
        raise ValueError("level must be >= 0")
    return ResidueClass(ctx.reduce(a, n), n)


def contains(ctx: DvrContext, c: ResidueClass, a: Element) -> bool:
    return ctx.reduce(a, c.level) == c.rep


def class_contains(ctx: DvrContext, outer: ResidueClass, inner: ResidueClass) -> bool:
    return outer.level <= inner.level and contains(ctx, outer, inner.rep)


def classes_meet(ctx: DvrContext, a: ResidueClass, b: ResidueClass) -> bool:
    return class_contains(ctx, a, b) or class_contains(ctx, b, a)


def parent(ctx: DvrContext, c: ResidueClass) -> ResidueClass:
    return class_of(ctx, c.rep, c.level - 1)


def subclasses(ctx: DvrContext, c: ResidueClass) -> list:
    """The ``q`` classes of ``M**(level+1)`` inside ``c``, in key order."""
    base = ctx.key(c.rep)
    step = ctx.q**c.level
    return [ResidueClass(ctx.from_key(base + d * step), c.level + 1) for d in range(ctx.q)]


def class_key(ctx: DvrContext, c: ResidueClass):
    return (ctx.key(c.rep), c.level)


def class_member_outside(ctx: DvrContext, c: ResidueClass, avoid: Iterable[ResidueClass]) -> Element:
    """First element of ``c`` outside every class in ``avoid``, walking subclasses in key order.

    Raises :class:`CoveredError` when the avoided classes cover ``c``.
    """
    avoid = [b for b in avoid if classes_meet(ctx, b, c)]

    def search(cls, pool):
        if any(class_contains(ctx, b, cls) for b in pool):
            return None
        inner = [b for b in pool if class_contains(ctx, cls, b)]
        if not inner:
            return cls.rep
        for child in subclasses(ctx, cls):
            found = search(child, [b for b in inner if classes_meet(ctx, b, child)])
            if found is not None:
                return found
        return None

    found = search(c, avoid)
    if found is None:
        raise CoveredError(f"{format_class(ctx, c)} is covered by the avoided classes")
    return found


def format_class(ctx: DvrContext, c: ResidueClass) -> str:
    if c.level == 0:
        return "R"
    m = "M" if c.level == 1 else f"M^{c.level}"
    return f"{ctx.format(c.rep)}+{m}"


def class_to_json(ctx: DvrContext, c: ResidueClass) -> dict:
    return {"rep": ctx.format(c.rep), "level": c.level}
