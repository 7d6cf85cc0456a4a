"""Rooted ribbon trees as plane trees with ordered children.

A tree is either :class:`Leaf` or :class:`Node`. The implicit edge above the
top node is the root edge; the children of a node are listed in the cyclic
order of the vertex, starting right after the half-edge pointing to the
parent. Leaves are numbered 1..n left to right, which coincides with the
external cyclic order (see :func:`tau_order`).

Edges are addressed by paths: tuples of 0-based child indices from the top
node. The empty path ``()`` is the root edge; the path of a subtree is the
edge directly above it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Union

EdgeRef = tuple


@dataclass(frozen=True)
class Leaf:
    @property
    def n_leaves(self) -> int:
        return 1

    def __str__(self) -> str:
        return "*"


@dataclass(frozen=True)
class Node:
    children: tuple
    n_leaves: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        children = tuple(self.children)
        if len(children) < 2:
            raise ValueError("an internal vertex needs at least 2 children (no valence-2 vertices)")
        for ch in children:
            if not isinstance(ch, (Leaf, Node)):
                raise TypeError(f"child {ch!r} is not a tree")
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "n_leaves", sum(ch.n_leaves for ch in children))

    def __str__(self) -> str:
        return "(" + ",".join(str(ch) for ch in self.children) + ")"


RibbonTree = Union[Leaf, Node]

LEAF = Leaf()


def leaves(tree: RibbonTree) -> int:
    return tree.n_leaves


def is_trivalent(tree: RibbonTree) -> bool:
    if isinstance(tree, Leaf):
        return True
    return len(tree.children) == 2 and all(is_trivalent(ch) for ch in tree.children)


def corolla(n: int) -> RibbonTree:
    """The ``n``-corolla; ``corolla(1)`` is the exceptional one-edge tree."""
    if n < 1:
        raise ValueError(f"corolla needs n >= 1, got {n}")
    if n == 1:
        return LEAF
    return Node((LEAF,) * n)


def caterpillar(n: int) -> RibbonTree:
    """``caterpillar(2)`` is the 2-corolla; larger ones graft along leaf 2."""
    if n < 2:
        raise ValueError(f"caterpillar needs n >= 2, got {n}")
    tree = corolla(2)
    for _ in range(n - 2):
        # graft(caterpillar(2), 2, tree) unrolled
        tree = Node((LEAF, tree))
    return tree


# -- edges and paths ---------------------------------------------------------

def subtree(tree: RibbonTree, path: EdgeRef) -> RibbonTree:
    """The subtree hanging below the edge at ``path``."""
    node = tree
    for depth, idx in enumerate(path):
        if isinstance(node, Leaf) or not 0 <= idx < len(node.children):
            raise KeyError(f"edge path {tuple(path)!r} does not exist (failed at depth {depth})")
        node = node.children[idx]
    return node


def edges(tree: RibbonTree) -> list:
    """All edge paths in preorder, which is also lexicographic order."""
    out = []

    def walk(node, path):
        out.append(path)
        if isinstance(node, Node):
            for j, ch in enumerate(node.children):
                walk(ch, path + (j,))

    walk(tree, ())
    return out


def leaf_paths(tree: RibbonTree) -> list:
    """Edge paths of the leaf edges, leaf 1 first."""
    return [p for p in edges(tree) if isinstance(subtree(tree, p), Leaf)]


def internal_edges(tree: RibbonTree) -> list:
    """Edges joining two internal vertices, i.e. non-root paths above a Node."""
    return [p for p in edges(tree) if p and isinstance(subtree(tree, p), Node)]


def is_internal_edge(tree: RibbonTree, path: EdgeRef) -> bool:
    return bool(path) and isinstance(subtree(tree, path), Node)


def leaves_below(tree: RibbonTree, path: EdgeRef) -> list:
    """1-based numbers of the leaves lying beyond the edge at ``path``."""
    path = tuple(path)
    subtree(tree, path)
    return [i for i, p in enumerate(leaf_paths(tree), start=1) if p[: len(path)] == path]


def edge_key(path: EdgeRef) -> str:
    """Text form of an edge path used in JSON: ``root`` or ``0.1.0``."""
    return "root" if not path else ".".join(str(i) for i in path)


def parse_edge_key(key: str) -> EdgeRef:
    key = key.strip()
    if key in ("root", ""):
        return ()
    try:
        path = tuple(int(part) for part in key.split("."))
    except ValueError:
        raise ValueError(f"bad edge path {key!r}; expected 'root' or dot-separated child indices") from None
    if any(i < 0 for i in path):
        raise ValueError(f"bad edge path {key!r}; indices must be nonnegative")
    return path


# -- grafting and splitting --------------------------------------------------

def graft(tree: RibbonTree, i: int, other: RibbonTree) -> RibbonTree:
    """Replace the ``i``-th leaf of ``tree`` (1-based) by the whole of ``other``."""
    n = tree.n_leaves
    if not 1 <= i <= n:
        raise IndexError(f"leaf index {i} out of range 1..{n}")

    def rebuild(node, offset):
        if isinstance(node, Leaf):
            return other
        kids = []
        for ch in node.children:
            if offset < i <= offset + ch.n_leaves:
                kids.append(rebuild(ch, offset))
            else:
                kids.append(ch)
            offset += ch.n_leaves
        return Node(tuple(kids))

    return rebuild(tree, 0)


def replace_subtree(tree: RibbonTree, path: EdgeRef, new: RibbonTree) -> RibbonTree:
    if not path:
        return new
    node = subtree(tree, path[:1])
    kids = list(tree.children)
    kids[path[0]] = replace_subtree(node, path[1:], new)
    return Node(tuple(kids))


def split_at_edge(tree: RibbonTree, path: EdgeRef):
    """Cut ``tree`` at an internal edge.

    Returns ``(outer, inner, i)`` with ``graft(outer, i, inner)`` equal to
    ``tree``; both pieces have at least two leaves.
    """
    path = tuple(path)
    if not is_internal_edge(tree, path):
        raise ValueError(f"edge {edge_key(path)} is not an internal edge")
    inner = subtree(tree, path)
    outer = replace_subtree(tree, path, LEAF)
    i = leaf_paths(outer).index(path) + 1
    return outer, inner, i


# -- half-edge model ---------------------------------------------------------

class HalfEdge(NamedTuple):
    """Half of the edge at ``path``; ``end`` is ``"lower"`` (the end nearer
    the root) or ``"upper"``."""

    path: tuple
    end: str

    def opposite(self) -> "HalfEdge":
        return HalfEdge(self.path, "upper" if self.end == "lower" else "lower")


def _vertex_of(tree: RibbonTree, h: HalfEdge):
    # vertices: ("root",) for the external root vertex, ("v", path) for the
    # vertex at the top of the edge ``path``
    if h.end == "upper":
        return ("v", h.path)
    if not h.path:
        return ("root",)
    return ("v", h.path[:-1])


def _cyclic_order(tree: RibbonTree, vertex) -> list:
    if vertex == ("root",):
        return [HalfEdge((), "lower")]
    path = vertex[1]
    node = subtree(tree, path)
    around = [HalfEdge(path, "upper")]
    if isinstance(node, Node):
        around += [HalfEdge(path + (j,), "lower") for j in range(len(node.children))]
    return around


def half_edges(tree: RibbonTree) -> list:
    return [HalfEdge(p, end) for p in edges(tree) for end in ("lower", "upper")]


def is_external(tree: RibbonTree, h: HalfEdge) -> bool:
    return len(_cyclic_order(tree, _vertex_of(tree, h))) == 1


def sigma(tree: RibbonTree, h: HalfEdge) -> HalfEdge:
    """The cyclic order at the vertex adjacent to ``h``, applied to ``h``."""
    around = _cyclic_order(tree, _vertex_of(tree, h))
    return around[(around.index(h) + 1) % len(around)]


def iota(tree: RibbonTree, h: HalfEdge) -> HalfEdge:
    return sigma(tree, h.opposite())


def tau(tree: RibbonTree, h: HalfEdge) -> HalfEdge:
    """Next external half-edge: iterate ``iota`` until an external one appears."""
    nxt = iota(tree, h)
    while not is_external(tree, nxt):
        nxt = iota(tree, nxt)
    return nxt


def root_half_edge(tree: RibbonTree) -> HalfEdge:
    return HalfEdge((), "lower")


def tau_order(tree: RibbonTree) -> list:
    """``[root, leaf_1, ..., leaf_n]`` obtained by iterating ``tau`` from the root."""
    start = root_half_edge(tree)
    order = [start]
    h = tau(tree, start)
    while h != start:
        order.append(h)
        h = tau(tree, h)
    return order


# -- isomorphism and enumeration ---------------------------------------------

def canonical_form(tree: RibbonTree) -> str:
    return str(tree)


def is_isomorphic(tree: RibbonTree, other: RibbonTree) -> bool:
    return canonical_form(tree) == canonical_form(other)


@lru_cache(maxsize=None)
def _trivalent(n: int) -> tuple:
    if n == 1:
        return (LEAF,)
    out = []
    for a in range(1, n):
        for left in _trivalent(a):
            for right in _trivalent(n - a):
                out.append(Node((left, right)))
    return tuple(out)


def enumerate_trivalent(n: int) -> list:
    """One tree per isomorphism class of trivalent rooted ribbon ``n``-trees."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return list(_trivalent(n))


def iter_trivalent(max_leaves: int) -> Iterator[RibbonTree]:
    for n in range(1, max_leaves + 1):
        yield from _trivalent(n)
