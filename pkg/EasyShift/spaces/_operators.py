# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Shift operators acting on finitely supported points."""

import numpy as np

# linalg
from ..linalg import DimensionError
# sequences
from ..sequences import OperatorSequence
from ._seqpoint import SeqPoint, WeightSeq, Seq_norm

# ----------------------------------------------
# sigma_S
# ----------------------------------------------

def Shift_apply(S: OperatorSequence, pt: SeqPoint) -> SeqPoint:
    """(sigma_S x)_n = S_{n+1} x_{n+1}, the window moves to [a-1, b-1]."""

    if pt.dim != S.dim:
        raise DimensionError(f"point of fiber dimension {pt.dim} given, {S.dim} expected")

    mats = S.Get_matrices(pt.a, pt.b)
    entries = np.einsum("nij,nj->ni", mats, pt.entries)

    return SeqPoint(pt.a - 1, entries, pt.p)

def Shift_apply_inverse(S: OperatorSequence, pt: SeqPoint) -> SeqPoint:
    """(sigma_S^-1 y)_n = S_n^-1 y_{n-1}, the window moves to [a+1, b+1]."""

    if pt.dim != S.dim:
        raise DimensionError(f"point of fiber dimension {pt.dim} given, {S.dim} expected")

    invs = S.Get_matrices(pt.a + 1, pt.b + 1, inverse=True)
    entries = np.einsum("nij,nj->ni", invs, pt.entries)

    return SeqPoint(pt.a + 1, entries, pt.p)

def Shift_apply_iterate(S: OperatorSequence, pt: SeqPoint, k: int) -> SeqPoint:
    """Returns sigma_S^k(pt) (k < 0 uses the inverse)."""

    func = Shift_apply if k >= 0 else Shift_apply_inverse
    for _ in range(abs(int(k))):
        pt = func(S, pt)

    return pt

# ----------------------------------------------
# Weighted backward shifts
# ----------------------------------------------

def WShift_apply(w: WeightSeq, pt: SeqPoint) -> SeqPoint:
    """(B_w x)_n = w_{n+1} x_{n+1}."""

    if pt.dim != 1:
        raise DimensionError("weighted shifts act on scalar points")

    weights = w.Values(pt.a, pt.b)

    return SeqPoint(pt.a - 1, weights[:,np.newaxis] * pt.entries, pt.p)

def WShift_apply_inverse(w: WeightSeq, pt: SeqPoint) -> SeqPoint:
    """(B_w^-1 y)_n = y_{n-1} / w_n."""

    if pt.dim != 1:
        raise DimensionError("weighted shifts act on scalar points")

    weights = w.Values(pt.a + 1, pt.b + 1)

    return SeqPoint(pt.a + 1, pt.entries / weights[:,np.newaxis], pt.p)

def Product_shift_apply(factors: list[WeightSeq], pts: list[SeqPoint]) -> list[SeqPoint]:
    """Componentwise B_w1 x ... x B_wd."""

    if len(factors) != len(pts):
        raise DimensionError(f"{len(factors)} factors for {len(pts)} points")

    return [WShift_apply(w, pt) for w, pt in zip(factors, pts)]

def Product_norm(pts: list[SeqPoint]) -> float:
    """Sum norm on the product space."""
    return float(sum(Seq_norm(pt) for pt in pts))

def Skew_apply(w: WeightSeq, pair: tuple[SeqPoint, SeqPoint]) -> tuple[SeqPoint, SeqPoint]:
    """(x, y) -> (B_w x + B_w y, B_w y)."""

    x, y = pair
    By = WShift_apply(w, y)

    return WShift_apply(w, x) + By, By
