"""The operad W(Z>=0) of finitely supported counting functions.

An element of arity ``n`` is a function ``(d; c_1..c_n) -> int`` which, for
every fixed ``c``, vanishes for all but finitely many ``d``. Since the domain
is infinite, elements are stored intensionally: an evaluator plus a
``support_bound(c)`` certificate such that ``eval(d, c) == 0`` whenever
``d > support_bound(c)``.
"""
from __future__ import annotations

import itertools
from typing import Callable, Optional, Sequence

from .trees import RibbonTree, leaves


class UncertifiedSupportError(ValueError):
    """The support of an element in ``d`` cannot be shown to be finite."""


class MissingBoundTransport(UncertifiedSupportError):
    pass


# -- tuple surgery -----------------------------------------------------------

def substitute(c: Sequence[int], i: int, m: int, k: int) -> tuple:
    """Replace the length-``m`` block starting at position ``i`` (1-based) by ``k``."""
    c = tuple(c)
    return c[: i - 1] + (k,) + c[i - 1 + m:]


def extract(c: Sequence[int], i: int, m: int) -> tuple:
    """The length-``m`` block of ``c`` starting at position ``i`` (1-based)."""
    return tuple(c[i - 1: i - 1 + m])


class WElement:
    """An element of W(Z>=0)(arity).

    ``func(d, c)`` must return a nonnegative int; ``bound(c)`` must satisfy
    ``func(d, c) == 0`` for ``d > bound(c)``. Set ``monotone_bound`` when
    ``bound`` is nondecreasing in every coordinate; compositions then take
    a cheaper route for their own bound.

    Values are memoized per ``(d, c)``. The cache is a plain dict: concurrent
    readers are fine and a racing write stores the same value twice.
    """

    def __init__(self, arity: int, func: Callable, bound: Callable, *, name: str = "",
                 monotone_bound: bool = False, cache: bool = True):
        if arity < 1:
            raise ValueError(f"arity must be >= 1, got {arity}")
        self.arity = arity
        self._func = func
        self._bound = bound
        self.name = name or f"W<{arity}>"
        self.monotone_bound = monotone_bound
        self._cache: Optional[dict] = {} if cache else None
        self._bound_cache: dict = {}

    def __repr__(self):
        return f"WElement({self.name}, arity={self.arity})"

    def _check(self, c):
        c = tuple(c)
        if len(c) != self.arity:
            raise ValueError(f"{self.name}: expected {self.arity} inputs, got {len(c)}")
        return c

    def support_bound(self, c: Sequence[int]) -> int:
        return self._support(self._check(c))

    def eval(self, d: int, c: Sequence[int]) -> int:
        return self._value(d, self._check(c))

    # unchecked fast paths; ``c`` must already be a tuple of the right length
    def _support(self, c: tuple) -> int:
        b = self._bound_cache.get(c)
        if b is None:
            b = self._bound(c)
            self._bound_cache[c] = b
        return b

    def _value(self, d: int, c: tuple) -> int:
        cache = self._cache
        if cache is not None:
            key = (d,) + c
            val = cache.get(key)
            if val is not None:
                return val
        if d < 0 or d > self._support(c):
            val = 0
        else:
            val = self._func(d, c)
        if cache is not None:
            cache[key] = val
        return val

    __call__ = eval

    def cache_clear(self):
        if self._cache is not None:
            self._cache.clear()
        self._bound_cache.clear()

    def table(self, c: Sequence[int]) -> list:
        """``[eval(0, c), ..., eval(B, c)]`` with ``B = support_bound(c)``."""
        return [self.eval(d, c) for d in range(self.support_bound(c) + 1)]

    def check_support(self, c: Sequence[int], extra: int = 10) -> bool:
        b = self.support_bound(c)
        return all(self._func(d, tuple(c)) == 0 for d in range(b + 1, b + 1 + extra))

    def compose(self, i: int, other: "WElement") -> "WElement":
        return w_compose(self, i, other)


def w_unit() -> WElement:
    return _UNIT


_UNIT = WElement(1, lambda d, c: 1 if d == c[0] else 0, lambda c: c[0],
                 name="unit", monotone_bound=True)


def w_compose(f: WElement, i: int, g: WElement) -> WElement:
    """Partial composition ``f o_i g``:

        (f o_i g)(d; c) = sum_k f(d; c with block i..i+m-1 replaced by k) * g(k; that block)

    The sum runs over ``k <= g.support_bound(block)``, where it is exact.
    """
    n, m = f.arity, g.arity
    if not 1 <= i <= n:
        raise IndexError(f"composition position {i} out of range 1..{n}")

    def func(d, c):
        head, block, tail = c[: i - 1], c[i - 1: i - 1 + m], c[i - 1 + m:]
        total = 0
        for k in range(g._support(block) + 1):
            gk = g._value(k, block)
            if gk:
                total += f._value(d, head + (k,) + tail) * gk
        return total

    if f.monotone_bound:
        def bound(c):
            return f._support(substitute(c, i, m, g._support(extract(c, i, m))))
    else:
        def bound(c):
            top = g._support(extract(c, i, m))
            return max(f._support(substitute(c, i, m, k)) for k in range(top + 1))

    return WElement(n + m - 1, func, bound, name=f"({f.name} o{i} {g.name})",
                    monotone_bound=f.monotone_bound and g.monotone_bound)


# -- pullback along a map Z>=0 -> Z>=0 ---------------------------------------

CERTIFICATION_WINDOW = 16


def pullback(phi: Callable[[int], int], f: WElement,
             preimage_max: Optional[Callable[[int], Optional[int]]] = None, *,
             name: str = "") -> WElement:
    """``(phi^* f)(d; c) = f(phi(d); phi(c_1), ..., phi(c_n))``.

    ``preimage_max(y)`` transports support bounds: it must return the largest
    ``x`` with ``phi(x) <= y``, or ``None`` when that set is infinite. It is
    probed on ``0..CERTIFICATION_WINDOW-1`` at construction; a ``None`` there
    rejects the element.
    """
    if preimage_max is None:
        raise MissingBoundTransport("pullback needs preimage_max to certify finite support")
    for y in range(CERTIFICATION_WINDOW):
        if preimage_max(y) is None:
            raise UncertifiedSupportError(
                f"preimage of [0, {y}] under phi is infinite; the pullback is not finitely supported")

    def func(d, c):
        return f.eval(phi(d), tuple(phi(x) for x in c))

    def bound(c):
        b = preimage_max(f.support_bound(tuple(phi(x) for x in c)))
        if b is None:
            raise UncertifiedSupportError(f"support of pullback at c={c} is not finite")
        return b

    return WElement(f.arity, func, bound, name=name or f"pullback({f.name})")


def identity_map(x: int) -> int:
    return x


def identity_preimage(y: int) -> int:
    return y


def affine_map(a: int, b: int = 0):
    """``x -> a*x + b`` with its bound transport, for ``a >= 1, b >= 0``."""
    if a < 1 or b < 0:
        raise ValueError("affine map needs a >= 1 and b >= 0")

    def phi(x):
        return a * x + b

    def pre(y):
        return (y - b) // a if y >= b else -1

    return phi, pre


def project_leafcount(tree: RibbonTree) -> int:
    """The projection to the corolla operad: a tree goes to its leaf count."""
    return leaves(tree)


def inputs(arity: int, max_label: int):
    """All ``(d, c)`` with entries in ``0..max_label``, lexicographically."""
    for combo in itertools.product(range(max_label + 1), repeat=arity + 1):
        yield combo[0], combo[1:]
