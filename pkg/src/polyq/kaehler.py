"""Tensor-product multiplicities of SO(3) irreps.

Spin labels are nonnegative integers; label ``m`` stands for the irrep of
dimension ``2m + 1``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .bending import LengthVector, is_nonempty, is_smooth
from .operad import WElement, w_compose, w_unit


def cg(d: int, c1: int, c2: int) -> int:
    """Multiplicity of spin ``d`` in ``spin c1 (x) spin c2``: 0 or 1."""
    return 1 if abs(c1 - c2) <= d <= c1 + c2 else 0


CG = WElement(2, lambda d, c: cg(d, c[0], c[1]), lambda c: c[0] + c[1],
              name="cg", monotone_bound=True)


@lru_cache(maxsize=None)
def f_kaehler(n: int) -> WElement:
    """``eval(d; c)`` = multiplicity of spin ``d`` in ``spin c_1 (x) ... (x) spin c_n``.

    Built by folding ``cg`` left-nested: ``K_n = cg o_1 K_{n-1}``.
    """
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    if n == 1:
        return w_unit()
    if n == 2:
        return CG
    elem = w_compose(CG, 1, f_kaehler(n - 1))
    elem.name = f"f_kaehler({n})"
    return elem


def fold_cg(n: int, order: str = "left") -> WElement:
    """Fold ``cg`` into an arity-``n`` element in a chosen association.

    ``left`` gives ((c1 c2) c3)..., ``right`` gives c1 (c2 (c3 ...)),
    ``balanced`` splits the factors in halves recursively. All three agree
    because multiplicities form a morphism out of the corolla operad.
    """
    if n == 1:
        return w_unit()
    if n == 2:
        return CG
    if order == "left":
        return w_compose(CG, 1, fold_cg(n - 1, "left"))
    if order == "right":
        return w_compose(CG, 2, fold_cg(n - 1, "right"))
    if order == "balanced":
        a = n // 2
        return w_compose(w_compose(CG, 2, fold_cg(n - a, "balanced")), 1, fold_cg(a, "balanced"))
    raise ValueError(f"unknown fold order {order!r}")


def weight_multiplicities(c: Sequence[int]) -> dict:
    """``W[j]`` = number of weight vectors ``(m_1..m_n)``, ``|m_i| <= c_i``, with ``sum m_i = j``."""
    poly = {0: 1}
    for ci in c:
        if ci < 0:
            raise ValueError("spin labels must be nonnegative")
        new: dict = {}
        for e, v in poly.items():
            for m in range(-ci, ci + 1):
                new[e + m] = new.get(e + m, 0) + v
        poly = new
    return poly


def weight_oracle(d: int, c: Sequence[int]) -> int:
    """Multiplicity of spin ``d`` via character theory: ``W_d - W_{d+1}``."""
    if d < 0:
        return 0
    w = weight_multiplicities(c)
    return w.get(d, 0) - w.get(d + 1, 0)


def _check_lengths(r: Sequence[int]) -> tuple:
    r = tuple(int(x) for x in r)
    if len(r) < 3:
        raise ValueError(f"need at least 3 edge lengths, got {len(r)}")
    if any(x < 1 for x in r):
        raise ValueError(f"edge lengths must be positive, got {r}")
    return r


def dim_H0(r: Sequence[int]) -> int:
    """Dimension of holomorphic sections on the polygon space with side lengths ``r``:
    the multiplicity of spin ``r_0`` in ``spin r_1 (x) ... (x) spin r_{n-1}``.

    Evaluated for any positive ``r``; whether ``r`` gives a smooth polygon
    space is a separate question answered by :func:`kaehler_summary`.
    """
    r = _check_lengths(r)
    return f_kaehler(len(r) - 1).eval(r[0], r[1:])


def kaehler_summary(r: Sequence[int]) -> dict:
    r = _check_lengths(r)
    return {
        "dim_H0": dim_H0(r),
        "smooth": is_smooth(r),
        "nonempty": is_nonempty(LengthVector(r[0], r[1:])),
    }
