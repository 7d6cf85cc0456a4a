"""Explicit polygons in R^3 realizing admissible labelings.

A polygon for lengths ``(d; c_1..c_n)`` is a list of ``n + 1`` vectors
``u_0..u_n`` summing to zero with ``|u_0| = d`` and ``|u_i| = c_i``. Each
tree edge splits the side indices into the root side and the far side; the
bending value of the edge is the length of the sum over either part.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bending import LengthVector, is_admissible
from .trees import (
    Leaf,
    RibbonTree,
    edge_key,
    edges,
    internal_edges,
    leaves_below,
    split_at_edge,
)


class InadmissibleLabeling(ValueError):
    pass


@dataclass(frozen=True)
class IndexPartition:
    root_side: frozenset
    far_side: frozenset


def index_partition(tree: RibbonTree, path) -> IndexPartition:
    """Side indices (0 = root) on either side of the edge at ``path``."""
    far = frozenset(leaves_below(tree, tuple(path)))
    everything = frozenset(range(tree.n_leaves + 1))
    return IndexPartition(everything - far, far)


def bending_value(u, part: IndexPartition) -> float:
    u = np.asarray(u, dtype=float)
    idx = sorted(part.root_side)
    return float(np.linalg.norm(u[idx].sum(axis=0)))


def closure_residual(u) -> float:
    return float(np.linalg.norm(np.asarray(u, dtype=float).sum(axis=0)))


def tolerance(lv: LengthVector) -> float:
    return 1e-9 * (1 + lv.d + sum(lv.c))


def rotation_taking(a, b) -> np.ndarray:
    """Smallest rotation mapping direction ``a`` onto direction ``b``.

    Zero vectors give the identity. Antiparallel inputs rotate by pi about
    ``e_z x a`` (or ``e_x`` when ``a`` is along ``e_z``).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        return np.eye(3)
    a, b = a / na, b / nb
    axis = np.cross(a, b)
    s = np.linalg.norm(axis)
    cos = float(np.clip(a @ b, -1.0, 1.0))
    if s < 1e-12:
        if cos > 0:
            return np.eye(3)
        axis = np.cross([0.0, 0.0, 1.0], a)
        if np.linalg.norm(axis) < 1e-12:
            axis = np.array([1.0, 0.0, 0.0])
        axis = axis / np.linalg.norm(axis)
        return 2.0 * np.outer(axis, axis) - np.eye(3)
    k = axis / s
    kx = np.array([[0.0, -k[2], k[1]], [k[2], 0.0, -k[0]], [-k[1], k[0], 0.0]])
    return np.eye(3) + s * kx + (1 - cos) * (kx @ kx)


def _segment(d: float) -> np.ndarray:
    return np.array([[d, 0.0, 0.0], [-d, 0.0, 0.0]]) if d else np.zeros((2, 3))


def _triangle(d: int, c1: int, c2: int) -> np.ndarray:
    # u_0 along +x, u_1 in the upper half of the xy-plane, u_2 closes up
    u = np.zeros((3, 3))
    u[0, 0] = d
    if c1:
        if d:
            cos = (c2 * c2 - d * d - c1 * c1) / (2.0 * d * c1)
            cos = min(1.0, max(-1.0, cos))
            u[1] = [c1 * cos, c1 * np.sqrt(1.0 - cos * cos), 0.0]
        else:
            u[1] = [-c1, 0.0, 0.0]
    if c2:
        u[2] = -u[0] - u[1]
    return u


def _restrict(phi: dict, path: tuple) -> dict:
    """Labels of the subtree below ``path``, re-addressed from that subtree's root."""
    n = len(path)
    return {p[n:]: v for p, v in phi.items() if p[:n] == path}


def _realize(tree: RibbonTree, lv: LengthVector, phi: dict) -> np.ndarray:
    if isinstance(tree, Leaf):
        return _segment(lv.d)
    inner_edges = internal_edges(tree)
    if not inner_edges:
        return _triangle(lv.d, *lv.c)
    path = inner_edges[0]
    outer, inner, i = split_at_edge(tree, path)
    m = inner.n_leaves
    k = phi[path]
    c = lv.c
    outer_lv = LengthVector(lv.d, c[: i - 1] + (k,) + c[i - 1 + m:])
    inner_lv = LengthVector(k, c[i - 1: i - 1 + m])
    outer_phi = {p: val for p, val in phi.items() if p[: len(path)] != path or p == path}
    v = _realize(outer, outer_lv, outer_phi)
    w = _realize(inner, inner_lv, _restrict(phi, path))
    g = rotation_taking(w[0], -v[i])
    moved = w[1:] @ g.T
    for j in range(m):
        if c[i - 1 + j] == 0:
            moved[j] = 0.0
    return np.vstack([v[:i], moved, v[i + 1:]])


def realize(tree: RibbonTree, lv: LengthVector, phi: dict) -> np.ndarray:
    """A polygon with side lengths ``lv`` whose bending values reproduce ``phi``.

    Cut the tree at an internal edge, realize both pieces, rotate the piece
    above the cut so that its root side is antiparallel to the matching side
    of the lower piece, and splice it in place of that side.
    """
    if not is_admissible(tree, phi, lv):
        raise InadmissibleLabeling(f"labeling {phi} is not admissible for {tree} at {lv.as_tuple()}")
    return _realize(tree, lv, phi)


def bending_values(tree: RibbonTree, u) -> dict:
    return {p: bending_value(u, index_partition(tree, p)) for p in edges(tree)}


def realization_report(tree: RibbonTree, lv: LengthVector, phi: dict) -> dict:
    """JSON-ready dict with the vectors, per-edge bending values and closure residual."""
    u = realize(tree, lv, phi)
    return {
        "vectors": [[float(x) for x in row] for row in u],
        "bending": {edge_key(p): val for p, val in bending_values(tree, u).items()},
        "closure_residual": closure_residual(u),
    }

