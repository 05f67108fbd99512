# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Growth ladders of the shadowing conditions (A), (B) and (C) and hyperbolicity of weights."""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

# utilities
from ..utilities import Tic
from ..utilities.Numba_Interface import Window_extrema
# linalg
from ..linalg import As_vec, ZeroVectorError, _utils as _lutils
# sequences
from ..sequences import OperatorSequence
# spaces
from ..spaces import WeightSeq

# ----------------------------------------------
# Types
# ----------------------------------------------

class Trend(str, Enum):
    decreasing = "decreasing"
    increasing = "increasing"
    flat = "flat"

    def __str__(self) -> str:
        return self.value

def _Trend(values: np.ndarray) -> Trend:
    """Compares the last value with the value at half length."""
    last = values[-1]
    half = values[max(len(values)//2 - 1, 0)]
    if abs(last - half) <= 1e-9 * max(1.0, abs(half)):
        return Trend.flat
    return Trend.decreasing if last < half else Trend.increasing

@dataclass
class GrowthLadder:
    """n-th roots of the bracketed quantities of the conditions (A), (B) and (C) for n in [1, n_max].

    The three terms of (A) and (B) are

    - future : |S_{k-1}^-1 ... S_1^-1 x| / |S_{k+n}^-1 ... S_1^-1 x| for k >= 1
    - past : |S_-k ... S_0 x| / |S_{-k+n} ... S_0 x| for k >= n
    - bridge : |S_-k ... S_0 x| / |S_{-k+n}^-1 ... S_1^-1 x| for 0 <= k < n

    and (C) uses |S_{-k-n} ... S_0 x| / |S_{-k+1} ... S_0 x| (past side, sup) and the future term (inf).
    """

    nMax: int
    kMax: int
    supTerms: np.ndarray
    """(3, n_max) sup over k of the future, past and bridge terms (n-th roots)"""
    infTerms: np.ndarray
    """(3, n_max) inf over k of the future, past and bridge terms (n-th roots)"""
    cPast: np.ndarray
    """(n_max) sup over k of the past ratio of (C) (n-th roots)"""
    cFuture: np.ndarray
    """(n_max) inf over k of the future ratio of (C) (n-th roots)"""

    @property
    def n(self) -> np.ndarray:
        return np.arange(1, self.nMax+1)

    @property
    def A(self) -> np.ndarray:
        """max of the sups"""
        return np.max(self.supTerms, axis=0)

    @property
    def B(self) -> np.ndarray:
        """min of the infs"""
        return np.min(self.infTerms, axis=0)

    def Limit(self, name: str) -> float:
        """Value at n_max of the ladder A, B, C_past or C_future."""
        return float(self._Get(name)[-1])

    def Trend(self, name: str) -> Trend:
        return _Trend(self._Get(name))

    def _Get(self, name: str) -> np.ndarray:
        ladders = {"A": self.A, "B": self.B, "C_past": self.cPast, "C_future": self.cFuture}
        if name not in ladders:
            raise KeyError(f"unknown ladder {name}, use {list(ladders.keys())}")
        return ladders[name]

    def To_dict(self) -> dict:
        dct = {}
        for name in ["A", "B", "C_past", "C_future"]:
            dct[name] = {"values": self._Get(name).tolist(),
                         "limit": self.Limit(name),
                         "trend": self.Trend(name).value}
        return dct

@dataclass
class ConditionResult:
    """Conditions (A), (B), (C) evaluated on a ladder."""

    fired: str = None
    """first of "A", "B", "C" that holds, None otherwise"""
    holds: dict = field(default_factory=dict)
    inconclusive: dict = field(default_factory=dict)
    split: dict = None
    """for (C): contracting and expanding sides"""

    def To_dict(self) -> dict:
        return {"fired": self.fired, "holds": dict(self.holds),
                "inconclusive": dict(self.inconclusive), "split": self.split}

# ----------------------------------------------
# Ladders
# ----------------------------------------------

def Growth_ladders(S: OperatorSequence, x: np.ndarray, nMax=_lutils.N_MAX, kMax=_lutils.K_MAX) -> GrowthLadder:
    """Evaluates the ladders of the conditions (A), (B) and (C) for the seed x.

    Norm ratios are read from the log tables of the frame of x, sup and inf over k
    being restricted to [1, k_max] (or to the displayed finite ranges).
    """

    x = As_vec(x, S.dim)
    if np.linalg.norm(x) == 0:
        raise ZeroVectorError("the ladders need a nonzero seed")
    assert nMax >= 1 and kMax >= 1, "n_max and k_max must be >= 1"

    tic = Tic()

    frame = S.Frame(x)
    size = kMax + nMax
    LF = frame.Log_forward(size + 1)
    LB = frame.Log_backward(size + 1)

    supTerms = np.full((3, nMax), -np.inf)
    infTerms = np.full((3, nMax), np.inf)
    cPast = np.zeros(nMax)
    cFuture = np.zeros(nMax)

    for n in range(1, nMax+1):
        future = LF[0:kMax] - LF[n+1:n+1+kMax]
        past = LB[n:kMax+1] - LB[0:kMax-n+1] if n <= kMax else np.empty(0)
        bridge = LB[0:n] - LF[n:0:-1]

        for i, term in enumerate([future, past, bridge]):
            if term.size > 0:
                supTerms[i, n-1] = term.max() / n
                infTerms[i, n-1] = term.min() / n

        cPast[n-1] = np.max(LB[n+1:n+1+kMax] - LB[0:kMax]) / n
        cFuture[n-1] = future.min() / n

    ladder = GrowthLadder(nMax, kMax, np.exp(supTerms), np.exp(infTerms), np.exp(cPast), np.exp(cFuture))

    tic.Tac("Ladders", "Growth_ladders")

    return ladder

def Evaluate_conditions(ladder: GrowthLadder, band=_lutils.INCONCLUSIVE_BAND) -> ConditionResult:
    """(A) sup limit < 1, (B) inf limit > 1, (C) past sup < 1 and future inf > 1.\n
    A limit within band of 1 is inconclusive and never holds."""

    def below(value: float) -> tuple[bool, bool]:
        return value < 1 - band, abs(value - 1) <= band

    def above(value: float) -> tuple[bool, bool]:
        return value > 1 + band, abs(value - 1) <= band

    holdsA, incA = below(ladder.Limit("A"))
    holdsB, incB = above(ladder.Limit("B"))
    holdsPast, incPast = below(ladder.Limit("C_past"))
    holdsFuture, incFuture = above(ladder.Limit("C_future"))
    holdsC = holdsPast and holdsFuture

    holds = {"A": bool(holdsA), "B": bool(holdsB), "C": bool(holdsC)}
    inconclusive = {"A": bool(incA), "B": bool(incB), "C": bool(incPast or incFuture)}

    fired = next((name for name in ["A", "B", "C"] if holds[name]), None)
    split = {"contracting": "past", "expanding": "future"} if fired == "C" else None

    return ConditionResult(fired, holds, inconclusive, split)

# ----------------------------------------------
# Hyperbolicity
# ----------------------------------------------

class HyperbolicityType(str, Enum):
    contracting = "contracting"
    expanding = "expanding"
    not_hyperbolic = "not-hyperbolic(window)"

    def __str__(self) -> str:
        return self.value

def Geometric_means(w: WeightSeq, nMax=_lutils.N_MAX, kMax=_lutils.K_MAX) -> tuple[np.ndarray, np.ndarray]:
    """Returns the sup and inf over k in [-k_max, k_max - n] of (w_k ... w_{k+n-1})^(1/n) for n in [1, n_max]."""
    assert 1 <= nMax <= 2*kMax + 1, "n_max must be in [1, 2 k_max + 1]"
    logw = w.Log_values(-kMax, kMax)
    maxs, mins = Window_extrema(logw, nMax)
    n = np.arange(1, nMax+1)
    return np.exp(maxs / n), np.exp(mins / n)

def Hyperbolicity_verdict(w: WeightSeq, nMax=_lutils.N_MAX, kMax=_lutils.K_MAX,
                          band=_lutils.INCONCLUSIVE_BAND) -> HyperbolicityType:
    """Contracting when the sup geometric mean at n_max is < 1 and not increasing,
    expanding when the inf geometric mean is > 1 and not decreasing."""

    sups, infs = Geometric_means(w, nMax, kMax)

    if sups[-1] < 1 - band and _Trend(sups) != Trend.increasing:
        return HyperbolicityType.contracting
    if infs[-1] > 1 + band and _Trend(infs) != Trend.decreasing:
        return HyperbolicityType.expanding
    return HyperbolicityType.not_hyperbolic

def Matrix_is_hyperbolic(mat: np.ndarray, tol=1e-9) -> bool:
    """No eigenvalue on the unit circle."""
    values = np.linalg.eigvals(np.asarray(mat, dtype=float))
    return bool(np.all(np.abs(np.abs(values) - 1) > tol))
