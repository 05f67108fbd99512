# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Weighted backward shifts as identity-fiber shifts through a dissipative decomposition."""

import numpy as np

# linalg
from ..linalg import DimensionError
# sequences
from ..sequences import Constant_sequence
# spaces
from ..spaces import SeqPoint, WeightSeq, WShift_apply, Shift_apply, Seq_norm

class DecompositionConjugacy:
    """H(x) = (T^n(x_-n)) for T = B_w and E_0 the line of the slot 0.

    E_n = T^n(E_0) is the line of the slot -n, so that H(x)_n = c_n x(n) with
    c_0 = 1, c_n = w_1 ... w_n (n > 0) and c_n = 1/(w_{n+1} ... w_0) (n < 0).
    B = H(l_p) carries the pullback norm |H(x)|_B = |x|.
    """

    def __init__(self, w: WeightSeq):
        self.__w = w
        self.__identity = Constant_sequence(np.eye(1), C=1.5, name="identity")

    @property
    def weights(self) -> WeightSeq:
        return self.__w

    def Coefficients(self, a: int, b: int) -> np.ndarray:
        """c_n for n in [a, b] (computed from log sums)."""
        lo, hi = min(a, 0), max(b, 0)
        logw = self.__w.Log_values(lo + 1, hi) if hi > lo else np.zeros(0)
        # L[n] = log c_n on [lo, hi]
        L = np.zeros(hi - lo + 1)
        i0 = -lo
        for i in range(i0 + 1, hi - lo + 1):
            L[i] = L[i-1] + logw[i - 1]
        for i in range(i0 - 1, -1, -1):
            L[i] = L[i+1] - logw[i]
        return np.exp(L[a - lo:b - lo + 1])

    def _Check(self, pt: SeqPoint) -> None:
        if pt.dim != 1:
            raise DimensionError("the weighted shift acts on scalar points")

    def H(self, x: SeqPoint) -> SeqPoint:
        self._Check(x)
        return SeqPoint(x.a, self.Coefficients(x.a, x.b)[:,np.newaxis] * x.entries, x.p)

    def H_inverse(self, y: SeqPoint) -> SeqPoint:
        self._Check(y)
        return SeqPoint(y.a, y.entries / self.Coefficients(y.a, y.b)[:,np.newaxis], y.p)

    def B_norm(self, y: SeqPoint) -> float:
        """pullback norm |H^-1(y)|"""
        return Seq_norm(self.H_inverse(y))

    def Intertwining_residual(self, x: SeqPoint) -> float:
        """|sigma_S(H x) - H(T x)|_B with S_n the identity."""
        lhs = Shift_apply(self.__identity, self.H(x))
        rhs = self.H(WShift_apply(self.__w, x))
        return self.B_norm(lhs - rhs)

def Dissipative_decomposition_conjugacy(w: WeightSeq, probes: list[SeqPoint]) -> tuple[float, float]:
    """Returns (max intertwining residual, max pullback norm gap |H(x)|_B - |x|) over the probes."""

    conjugacy = DecompositionConjugacy(w)
    residual, gap = 0.0, 0.0
    for x in probes:
        scale = max(1.0, Seq_norm(x))
        residual = max(residual, conjugacy.Intertwining_residual(x) / scale)
        gap = max(gap, abs(conjugacy.B_norm(conjugacy.H(x)) - Seq_norm(x)) / scale)

    return float(residual), float(gap)
