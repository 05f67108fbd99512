# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Frame vectors e_n(x) and weights w_n(x) of a seed x."""

import threading
from typing import TYPE_CHECKING

import numpy as np

# linalg
from ..linalg import As_vec, ZeroVectorError, VerificationError

if TYPE_CHECKING:
    from ._opseq import OperatorSequence

SWEEP_BURN = 64
"""first extra horizon of an anchored sweep"""
SWEEP_TOL = 1e-13
SWEEP_HORIZON_MAX = 2**20
INVARIANT_TOL = 1e-8
"""largest angle defect accepted along an invariant line"""

class Frame:
    """Normalized vectors e_n(x) and weights w_n(x) of a seed x.

    The vectors are propagated one index at a time:

    - n >= 1 : u = S_n^-1 e_{n-1}, w_n = 1/|u|, e_n = u/|u|
    - n <= 0 : y = S_n e_n, w_n = |y|, e_{n-1} = y/|y|

    starting from e_0 = x/|x|. The logarithms of the unnormalized norms are kept:

    - logF[m] = log |(S_[1,m])^-1 x| for m >= 0
    - logB[i] = log |S_[-i,0] x| for i >= 0

    so that products of many weights never overflow.

    The one-step propagation loses every digit within a few dozen indexes when x
    is the limit direction of a cone family (errors grow like the gap between
    the singular values). Such seeds are anchored:

    - future anchor : e_n (n >= 1) is pulled back from a far horizon N with
      e_N = anchor and e_k = S_{k+1} e_{k+1} / |S_{k+1} e_{k+1}|
    - past anchor : e_n (n <= -1) is pushed from e_-N = anchor with
      e_k = S_k^-1 e_{k-1} / |S_k^-1 e_{k-1}|
    - invariant : x spans a line invariant by every S_n, e_n = +-e_0

    The horizon of a sweep is doubled until the vectors move by less than SWEEP_TOL.
    """

    def __init__(self, S: "OperatorSequence", seed: np.ndarray,
                 future: np.ndarray=None, past: np.ndarray=None, invariant=False):

        seed = As_vec(seed, S.dim)
        normSeed = np.linalg.norm(seed, S.norm.ord)
        if normSeed == 0:
            raise ZeroVectorError("the seed of a frame must be nonzero")
        assert not (invariant and (future is not None or past is not None)), "an invariant seed needs no anchor"

        self.__S = S
        self.__seed = seed.copy()
        self.__seed.flags.writeable = False
        self.__future = None if future is None else As_vec(future, S.dim)
        self.__past = None if past is None else As_vec(past, S.dim)
        self.__invariant = bool(invariant)

        e0 = seed / normSeed
        # forward data (n = 0, 1, 2, ...)
        self.__vecF: list[np.ndarray] = [e0]
        self.__wF: list[float] = [np.nan] # w_0 is stored on the backward side
        self.__logF: list[float] = [float(np.log(normSeed))]
        # backward data (n = 0, -1, -2, ...)
        self.__vecB: list[np.ndarray] = [e0]
        self.__wB: list[float] = []
        self.__logB: list[float] = []

        self.__lock = threading.RLock()

    @property
    def seed(self) -> np.ndarray:
        return self.__seed

    @property
    def S(self) -> "OperatorSequence":
        return self.__S

    @property
    def logSeedNorm(self) -> float:
        """log |x|"""
        return self.__logF[0]

    @property
    def mode(self) -> str:
        """propagation of the frame"""
        if self.__invariant:
            return "invariant"
        modes = [name for name, anchor in (("future", self.__future), ("past", self.__past)) if anchor is not None]
        return "+".join(modes) if len(modes) > 0 else "one-step"

    # ----------------------------------------------
    # Propagation
    # ----------------------------------------------

    def _Snap(self, v: np.ndarray, line: np.ndarray) -> np.ndarray:
        """Returns +-line closest to the unit vector v."""
        sign = 1.0 if np.dot(v, line) >= 0 else -1.0
        if np.linalg.norm(v - sign*line, self.__S.norm.ord) > INVARIANT_TOL:
            raise VerificationError("the seed does not span an invariant line")
        return sign * line

    def _Sweep(self, n: int, past: bool) -> np.ndarray:
        """Returns the (n+1, d) vectors e_0, ..., e_{+-n} swept from the anchor."""

        S = self.__S
        ord = S.norm.ord
        anchor = self.__past if past else self.__future
        e0 = self.__vecF[0]

        horizon = n + SWEEP_BURN
        previous = None
        while True:
            w = anchor / np.linalg.norm(anchor, ord)
            vectors = np.zeros((n+1, S.dim))
            # k is the distance to the index 0
            for k in range(horizon, -1, -1):
                if k < horizon:
                    y = S.Get_inverse(-k) @ w if past else S.Get(k+1) @ w
                    w = y / np.linalg.norm(y, ord)
                if k <= n:
                    vectors[k] = w
            if np.dot(vectors[0], e0) < 0:
                vectors *= -1
            if previous is not None and np.max(np.abs(vectors - previous)) < SWEEP_TOL:
                break
            previous = vectors
            horizon = n + 2*(horizon - n)
            if horizon > SWEEP_HORIZON_MAX:
                raise VerificationError(f"the anchored sweep does not settle below the horizon {SWEEP_HORIZON_MAX}")

        vectors[0] = e0
        return vectors

    def _Extend_forward(self, n: int) -> None:
        """Computes the forward data up to index n."""
        if n < len(self.__vecF): return
        with self.__lock:
            S = self.__S
            ord = S.norm.ord
            if self.__future is not None:
                target = max(n, 2*(len(self.__vecF) - 1))
                vectors = self._Sweep(target, past=False)
                self.__vecF = [vectors[0]]
                self.__wF = [np.nan]
                del self.__logF[1:]
                for m in range(1, target+1):
                    w = float(np.linalg.norm(S.Get(m) @ vectors[m], ord))
                    self.__vecF.append(vectors[m])
                    self.__wF.append(w)
                    self.__logF.append(self.__logF[-1] - float(np.log(w)))
                return
            while len(self.__vecF) <= n:
                m = len(self.__vecF)
                u = S.Get_inverse(m) @ self.__vecF[-1]
                r = np.linalg.norm(u, ord)
                e = u / r
                if self.__invariant:
                    e = self._Snap(e, self.__vecF[-1])
                self.__vecF.append(e)
                self.__wF.append(float(1/r))
                self.__logF.append(self.__logF[-1] + float(np.log(r)))

    def _Extend_backward(self, n: int) -> None:
        """Computes the backward data down to index n <= 0 (vectors down to n, weights down to n)."""
        i = -n
        if i < len(self.__wB): return
        with self.__lock:
            S = self.__S
            ord = S.norm.ord
            if self.__past is not None:
                target = max(i, 2*len(self.__wB))
                vectors = self._Sweep(target + 1, past=True)
                self.__vecB = [vectors[0]]
                self.__wB, self.__logB = [], []
                for k in range(target+1):
                    w = float(np.linalg.norm(S.Get(-k) @ vectors[k], ord))
                    previous = self.logSeedNorm if k == 0 else self.__logB[-1]
                    self.__wB.append(w)
                    self.__logB.append(previous + float(np.log(w)))
                    self.__vecB.append(vectors[k+1])
                return
            while len(self.__wB) <= i:
                k = len(self.__wB) # index -k
                y = S.Get(-k) @ self.__vecB[k]
                r = np.linalg.norm(y, ord)
                e = y / r
                if self.__invariant:
                    e = self._Snap(e, self.__vecB[k])
                self.__wB.append(float(r))
                previous = self.logSeedNorm if k == 0 else self.__logB[-1]
                self.__logB.append(previous + float(np.log(r)))
                self.__vecB.append(e)

    # ----------------------------------------------
    # Accessors
    # ----------------------------------------------

    def Vector(self, n: int) -> np.ndarray:
        """e_n(x)"""
        n = int(n)
        if n >= 0:
            self._Extend_forward(n)
            return self.__vecF[n].copy()
        else:
            self._Extend_backward(n+1)
            return self.__vecB[-n].copy()

    def Weight(self, n: int) -> float:
        """w_n(x)"""
        n = int(n)
        if n >= 1:
            self._Extend_forward(n)
            return self.__wF[n]
        else:
            self._Extend_backward(n)
            return self.__wB[-n]

    def Vectors(self, a: int, b: int) -> np.ndarray:
        """Returns the (b-a+1, d) array of e_n(x) for n in [a, b]."""
        if b >= 0: self._Extend_forward(b)
        if a < 0: self._Extend_backward(a+1)
        vectors = [self.__vecB[-n] if n < 0 else self.__vecF[n] for n in range(a, b+1)]
        return np.array(vectors)

    def Weights(self, a: int, b: int) -> np.ndarray:
        """Returns the (b-a+1) array of w_n(x) for n in [a, b]."""
        if b >= 1: self._Extend_forward(b)
        if a <= 0: self._Extend_backward(a)
        weights = [self.__wB[-n] if n <= 0 else self.__wF[n] for n in range(a, b+1)]
        return np.array(weights)

    def Log_forward(self, m: int) -> np.ndarray:
        """Returns logF[0..m] with logF[j] = log |(S_[1,j])^-1 x|."""
        self._Extend_forward(m)
        return np.array(self.__logF[:m+1])

    def Log_backward(self, m: int) -> np.ndarray:
        """Returns logB[0..m] with logB[i] = log |S_[-i,0] x|."""
        self._Extend_backward(-m)
        return np.array(self.__logB[:m+1])
