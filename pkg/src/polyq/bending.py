"""Admissible integral edge-labelings of trivalent trees and their counts.

A labeling assigns a nonnegative integer to every edge (keyed by edge path)
so that the three edges at each internal vertex satisfy the triangle
inequalities, the root edge carries ``d`` and the edge at leaf ``i``
carries ``c_i``. These count lattice points in the image of the bending
system of the polygon space with side lengths ``(d; c)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .operad import WElement, w_compose
from .trees import (
    Leaf,
    Node,
    RibbonTree,
    caterpillar,
    edges,
    internal_edges,
    is_trivalent,
    leaf_paths,
    leaves_below,
    split_at_edge,
    subtree,
)


class TooFewEdges(ValueError):
    pass


class EmptyModuli(ValueError):
    pass


class NotTrivalent(ValueError):
    pass


@dataclass(frozen=True)
class LengthVector:
    """Root length ``d`` and leaf lengths ``c = (c_1..c_n)``."""

    d: int
    c: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", int(self.d))
        if self.d < 0 or any(x < 0 for x in c):
            raise ValueError(f"lengths must be nonnegative, got ({self.d}; {c})")
        if not c:
            raise ValueError("need at least one leaf length")

    @classmethod
    def from_lengths(cls, lengths: Sequence[int]) -> "LengthVector":
        """First entry is the root length."""
        lengths = list(lengths)
        if len(lengths) < 2:
            raise ValueError("need a root length and at least one leaf length")
        return cls(lengths[0], tuple(lengths[1:]))

    @property
    def n(self) -> int:
        return len(self.c)

    def as_tuple(self) -> tuple:
        return (self.d,) + self.c


def triangle(a: int, b: int, c: int) -> bool:
    return abs(b - c) <= a <= b + c


def _require_trivalent(tree: RibbonTree):
    if not is_trivalent(tree):
        raise NotTrivalent(f"tree {tree} is not trivalent")


def _vertices(tree: RibbonTree) -> list:
    """``(path, (parent_edge, child_edge, ...))`` for each internal vertex."""
    out = []
    for p in edges(tree):
        node = subtree(tree, p)
        if isinstance(node, Node):
            out.append((p, (p,) + tuple(p + (j,) for j in range(len(node.children)))))
    return out


def boundary_values(tree: RibbonTree, lv: LengthVector) -> dict:
    """Values forced on the root edge and the leaf edges. ``None`` if they clash."""
    if lv.n != tree.n_leaves:
        raise ValueError(f"tree has {tree.n_leaves} leaves but {lv.n} leaf lengths were given")
    fixed = {(): lv.d}
    for i, p in enumerate(leaf_paths(tree)):
        if p in fixed and fixed[p] != lv.c[i]:
            return None
        fixed[p] = lv.c[i]
    return fixed


def is_admissible(tree: RibbonTree, phi: dict, lv: LengthVector) -> bool:
    _require_trivalent(tree)
    if set(phi) != set(edges(tree)):
        raise ValueError("labeling must be defined on exactly the edges of the tree")
    fixed = boundary_values(tree, lv)
    if fixed is None:
        return False
    if any(phi[p] != v for p, v in fixed.items()):
        return False
    if any(v < 0 for v in phi.values()):
        return False
    return all(triangle(*(phi[e] for e in inc)) for _, inc in _vertices(tree))


def complete_labeling(tree: RibbonTree, lv: LengthVector, partial: dict) -> dict:
    """Fill in root and leaf edges from ``lv``; reject conflicting or unknown entries."""
    fixed = boundary_values(tree, lv)
    if fixed is None:
        raise ValueError("root and leaf lengths conflict on the exceptional tree")
    all_edges = set(edges(tree))
    phi = dict(fixed)
    for p, v in partial.items():
        p = tuple(p)
        if p not in all_edges:
            raise ValueError(f"edge {p} is not an edge of {tree}")
        if p in fixed and fixed[p] != v:
            raise ValueError(f"edge {p} is labeled {v} but the length vector forces {fixed[p]}")
        phi[p] = int(v)
    missing = all_edges - set(phi)
    if missing:
        raise ValueError(f"labeling is missing internal edges {sorted(missing)}")
    return phi


def iter_labelings(tree: RibbonTree, lv: LengthVector, *, loose: bool = False) -> Iterator[dict]:
    """Exhaustive search over internal-edge values, yielding admissible labelings.

    Internal edges are assigned in path order with values ascending, so
    output is lexicographic. Each internal edge ranges over ``0..B`` where
    ``B`` is the sum of leaf lengths beyond the edge, or ``d + sum(c)``
    when ``loose`` is set.
    """
    _require_trivalent(tree)
    fixed = boundary_values(tree, lv)
    if fixed is None:
        return
    free = internal_edges(tree)
    if loose:
        bounds = [lv.d + sum(lv.c)] * len(free)
    else:
        bounds = [sum(lv.c[i - 1] for i in leaves_below(tree, p)) for p in free]

    order = {p: k for k, p in enumerate(free)}
    # a vertex is checked as soon as the last of its free edges is assigned
    checks: list = [[] for _ in free]
    for _, inc in _vertices(tree):
        pending = [order[e] for e in inc if e in order]
        if not pending:
            if not triangle(*(fixed[e] for e in inc)):
                return
        else:
            checks[max(pending)].append(inc)

    phi = dict(fixed)

    def assign(k):
        if k == len(free):
            yield dict(sorted(phi.items()))
            return
        p = free[k]
        for v in range(bounds[k] + 1):
            phi[p] = v
            if all(triangle(*(phi[e] for e in inc)) for inc in checks[k]):
                yield from assign(k + 1)
        del phi[p]

    yield from assign(0)


def enumerate_labelings(tree: RibbonTree, lv: LengthVector, *, loose: bool = False) -> list:
    return list(iter_labelings(tree, lv, loose=loose))


def count_labelings(tree: RibbonTree, lv: LengthVector, *, loose: bool = False) -> int:
    return sum(1 for _ in iter_labelings(tree, lv, loose=loose))


# -- the counting morphism ----------------------------------------------------

EXCEPTIONAL = WElement(1, lambda d, c: 1 if d == c[0] else 0, lambda c: c[0],
                       name="f_re(*)", monotone_bound=True)

# one labeling (the boundary values) exactly when the triangle closes
CORNER = WElement(2, lambda d, c: 1 if triangle(d, c[0], c[1]) else 0, lambda c: c[0] + c[1],
                  name="f_re((*,*))", monotone_bound=True)


@lru_cache(maxsize=None)
def f_re(tree: RibbonTree) -> WElement:
    """``eval(d; c)`` = number of admissible labelings of ``tree`` for ``(d; c)``.

    Trees with an internal edge are cut at their first internal edge into
    ``outer o_i inner``; labelings of the whole then correspond to pairs of
    labelings of the pieces agreeing on the cut edge, which is exactly the
    partial composition in W(Z>=0).
    """
    _require_trivalent(tree)
    if isinstance(tree, Leaf):
        return EXCEPTIONAL
    inner_edges = internal_edges(tree)
    if not inner_edges:
        return CORNER
    outer, inner, i = split_at_edge(tree, inner_edges[0])
    elem = w_compose(f_re(outer), i, f_re(inner))
    elem.name = f"f_re({tree})"
    return elem


def clear_caches():
    """Drop memoized values held by all ``f_re`` elements built so far."""
    f_re.cache_clear()
    EXCEPTIONAL.cache_clear()
    CORNER.cache_clear()


# -- predicates ---------------------------------------------------------------

def is_nonempty(lv: LengthVector) -> bool:
    """Whether a closed polygon with these side lengths exists."""
    total = lv.d + sum(lv.c)
    return all(2 * x <= total for x in lv.as_tuple())


def is_smooth(r: Sequence[int]) -> bool:
    """True iff no choice of signs makes ``+-r_0 +- ... +- r_{n-1}`` vanish."""
    r = tuple(int(x) for x in r)
    if any(x < 1 for x in r):
        raise ValueError(f"edge lengths must be positive, got {r}")
    total = sum(r)
    if total % 2:
        return True
    reach = 1
    for x in r:
        reach |= reach << x
    return not (reach >> (total // 2)) & 1


# -- the caterpillar numbers --------------------------------------------------

def _check_beta_args(n, i):
    if n < 3:
        raise ValueError(f"beta needs n >= 3, got {n}")
    if i < 0:
        raise ValueError(f"beta needs i >= 0, got {i}")


def beta_direct(n: int, i: int) -> int:
    """Lattice points for side lengths ``(i, 1, ..., 1)`` (``n`` sides) on the caterpillar."""
    _check_beta_args(n, i)
    return f_re(caterpillar(n - 1)).eval(i, (1,) * (n - 1))


@lru_cache(maxsize=None)
def beta_recurrence(n: int, i: int) -> int:
    _check_beta_args(n, i)
    if n == 3:
        return 1 if i <= 2 else 0
    if i >= n:
        return 0
    if i == 0:
        return beta_recurrence(n - 1, 1)
    return sum(beta_recurrence(n - 1, j) for j in (i - 1, i, i + 1))


def beta_kernel(i: int, k: int) -> int:
    """Closed form for the 2-corolla count at ``(i; 1, k)``."""
    return 1 if abs(i - 1) <= k <= i + 1 else 0


def beta_expansion(n: int, i: int) -> int:
    """``beta(n, i)`` as a sum over the label ``k`` of the first internal edge."""
    _check_beta_args(n, i)
    if n == 3:
        return beta_direct(3, i)
    return sum(beta_kernel(i, k) * beta_direct(n - 1, k) for k in range(n - 1))


def lattice_count(tree: RibbonTree, r: Sequence[int]) -> int:
    """Integral points in the image of the bending system of ``tree`` on the
    polygon space with side lengths ``r = (r_0, ..., r_{n-1})``."""
    r = tuple(int(x) for x in r)
    if len(r) < 4:
        raise TooFewEdges(f"need at least 4 sides, got {len(r)}")
    if any(x < 1 for x in r):
        raise ValueError(f"edge lengths must be positive, got {r}")
    _require_trivalent(tree)
    if tree.n_leaves != len(r) - 1:
        raise ValueError(f"an {len(r)}-gon needs a tree with {len(r) - 1} leaves, got {tree.n_leaves}")
    lv = LengthVector(r[0], r[1:])
    if not is_nonempty(lv):
        raise EmptyModuli(f"no closed polygon has side lengths {r}")
    return f_re(tree).eval(lv.d, lv.c)
