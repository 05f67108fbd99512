# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Generating sequences S = (S_n), partial products S_[n,m], weights and frames."""

import threading
from typing import Callable, Union

import numpy as np

# utilities
from ..utilities import Tic
# linalg
from ..linalg import (NormSpec, EUCLIDEAN, As_mat, As_vec, Invert, Operator_norm,
                      UnboundedSequenceError, _utils as _lutils)
from ._frame import Frame

PRODUCT_CACHE_SPAN = 10_000
"""partial products spanning more indexes are recomputed from scratch"""
ANCHOR_TOL = 1e-10
"""seeds closer than this (after normalization) share their anchors"""

class OperatorSequence:
    """Two-sided family of invertible d x d matrices with max{|S_n|, |S_n^-1|} < C."""

    def __init__(self, generator: Callable[[int], np.ndarray], C: float, dim: int,
                 norm: NormSpec=EUCLIDEAN, name="", period: int=None, checkBound=True):
        """Creates an operator sequence.

        Parameters
        ----------
        generator : Callable[[int], np.ndarray]
            total map n -> S_n
        C : float
            declared uniform bound
        dim : int
            fiber dimension (1 <= d <= 4)
        norm : NormSpec, optional
            fiber norm, by default EUCLIDEAN
        name : str, optional
            name, by default ""
        period : int, optional
            period of the generator when it is periodic, by default None
        checkBound : bool, optional
            checks max{|S_n|, |S_n^-1|} < C each time a new S_n is accessed, by default True
        """

        assert callable(generator), "generator must be a function n -> S_n"
        _lutils._Test_Sup0(C)
        assert 1 <= dim <= _lutils.DIM_MAX, f"dim must be in [1, {_lutils.DIM_MAX}]"
        assert period is None or period >= 1, "period must be >= 1"

        self.__generator = generator
        self.__C = float(C)
        self.__dim = int(dim)
        self.__norm = norm
        self.__name = name
        self.__period = None if period is None else int(period)
        self.__checkBound = checkBound

        self.__mats: dict[int, np.ndarray] = {}
        self.__invs: dict[int, np.ndarray] = {}
        self.__products: dict[tuple[int,int], np.ndarray] = {}
        self.__frames: dict[bytes, Frame] = {}
        self.__anchors: list[tuple[np.ndarray, dict]] = []
        self.__lock = threading.RLock()

    def __str__(self) -> str:
        return f"OperatorSequence({self.__name}, d={self.__dim}, C={self.__C:g}, {self.__norm})"

    @property
    def name(self) -> str:
        return self.__name

    @property
    def C(self) -> float:
        """declared uniform bound"""
        return self.__C

    @property
    def dim(self) -> int:
        """fiber dimension"""
        return self.__dim

    @property
    def norm(self) -> NormSpec:
        """fiber norm"""
        return self.__norm

    @property
    def period(self) -> Union[int, None]:
        return self.__period

    @property
    def isPeriodic(self) -> bool:
        return self.__period is not None

    def _Raw(self, n: int) -> np.ndarray:
        """Returns the generator value without caching or checks."""
        return As_mat(self.__generator(int(n)), self.__dim)

    def Get(self, n: int) -> np.ndarray:
        """Returns S_n (read-only)."""
        n = int(n)
        mat = self.__mats.get(n)
        if mat is not None:
            return mat
        with self.__lock:
            if n not in self.__mats:
                key = n if self.__period is None else n % self.__period
                if key != n and key in self.__mats:
                    mat, inv = self.__mats[key], self.__invs[key]
                else:
                    mat = self._Raw(n)
                    inv = Invert(mat)
                    if self.__checkBound:
                        bound = max(Operator_norm(mat, self.__norm), Operator_norm(inv, self.__norm))
                        if bound >= self.__C:
                            raise UnboundedSequenceError(f"max(|S_n|, |S_n^-1|) = {bound:.6g} >= C = {self.__C:g} at n = {n}")
                    mat.flags.writeable = False
                    inv.flags.writeable = False
                self.__invs[n] = inv
                self.__mats[n] = mat
        return self.__mats[n]

    def __getitem__(self, n: int) -> np.ndarray:
        return self.Get(n)

    def Get_inverse(self, n: int) -> np.ndarray:
        """Returns S_n^-1 (read-only)."""
        n = int(n)
        if n not in self.__invs:
            self.Get(n)
        return self.__invs[n]

    def Get_matrices(self, a: int, b: int, inverse=False) -> np.ndarray:
        """Returns the (b-a+1, d, d) stack of S_n (or S_n^-1) for n in [a, b]."""
        func = self.Get_inverse if inverse else self.Get
        return np.array([func(n) for n in range(a, b+1)]).reshape(-1, self.__dim, self.__dim)

    def Partial_product(self, n: int, m: int) -> np.ndarray:
        """S_[n,m] = S_n ... S_m if n < m, S_n if n = m, identity if n > m."""
        n, m = int(n), int(m)

        if n > m:
            return np.eye(self.__dim)
        if n == m:
            return self.Get(n).copy()

        span = m - n
        key = (n, m)
        product = self.__products.get(key)
        if product is not None:
            return product.copy()

        previous = self.__products.get((n, m-1))
        if previous is not None:
            product = previous @ self.Get(m)
        else:
            product = self.Get(n).copy()
            for j in range(n+1, m+1):
                product = product @ self.Get(j)
                if span <= PRODUCT_CACHE_SPAN:
                    with self.__lock:
                        self.__products[(n, j)] = product

        if span <= PRODUCT_CACHE_SPAN:
            with self.__lock:
                self.__products[key] = product

        return product.copy()

    def Anchor_seed(self, x: np.ndarray, future: np.ndarray=None, past: np.ndarray=None, invariant=False) -> None:
        """Declares how the frames of the seed x (and of its multiples) are propagated.

        Parameters
        ----------
        x : np.ndarray
            seed
        future : np.ndarray, optional
            vector swept back from a far future horizon for n >= 1, by default None
        past : np.ndarray, optional
            vector swept from a far past horizon for n <= -1, by default None
        invariant : bool, optional
            x spans a line invariant by every S_n, by default False
        """
        x = As_vec(x, self.__dim)
        unit = x / np.linalg.norm(x)
        anchors = {"future": future, "past": past, "invariant": invariant}
        with self.__lock:
            self.__anchors = [(u, a) for u, a in self.__anchors if np.linalg.norm(u - unit) > ANCHOR_TOL]
            self.__anchors.append((unit, anchors))
            self.__frames.clear()

    def _Anchors_of(self, x: np.ndarray) -> dict:
        norm = np.linalg.norm(x)
        if norm == 0:
            return {}
        unit = x / norm
        for u, anchors in self.__anchors:
            if np.linalg.norm(u - unit) <= ANCHOR_TOL:
                return anchors
        return {}

    def Frame(self, x: np.ndarray) -> Frame:
        """Returns the (cached) frame of the seed x."""
        x = As_vec(x, self.__dim)
        key = x.tobytes()
        frame = self.__frames.get(key)
        if frame is None:
            with self.__lock:
                if key not in self.__frames:
                    self.__frames[key] = Frame(self, x, **self._Anchors_of(x))
                frame = self.__frames[key]
        return frame

# ----------------------------------------------
# Constructors
# ----------------------------------------------

def _Bound_of(mats: list[np.ndarray], norm: NormSpec, margin=1.05) -> float:
    """Returns margin * max over mats of max(|M|, |M^-1|)."""
    bound = max(max(Operator_norm(mat, norm), Operator_norm(Invert(mat), norm)) for mat in mats)
    return margin * bound

def Constant_sequence(mat: np.ndarray, C: float=None, norm: NormSpec=EUCLIDEAN, name="constant") -> OperatorSequence:
    """S_n = mat for every n."""
    mat = As_mat(mat)
    C = _Bound_of([mat], norm) if C is None else C
    return OperatorSequence(lambda n: mat, C, mat.shape[0], norm, name, period=1)

def Periodic_sequence(mats: list[np.ndarray], C: float=None, norm: NormSpec=EUCLIDEAN, name="periodic", offset=0) -> OperatorSequence:
    """S_n = mats[(n - offset) mod len(mats)]."""
    mats = [As_mat(mat) for mat in mats]
    assert len(mats) > 0, "mats must not be empty"
    C = _Bound_of(mats, norm) if C is None else C
    P = len(mats)
    return OperatorSequence(lambda n: mats[(n - offset) % P], C, mats[0].shape[0], norm, name, period=P)

def Listed_sequence(table: dict[int, np.ndarray], default: np.ndarray, C: float=None, norm: NormSpec=EUCLIDEAN, name="listed") -> OperatorSequence:
    """S_n = table[n] when n is listed, default otherwise."""
    table = {int(n): As_mat(mat) for n, mat in table.items()}
    default = As_mat(default)
    C = _Bound_of(list(table.values()) + [default], norm) if C is None else C
    return OperatorSequence(lambda n: table.get(n, default), C, default.shape[0], norm, name)

# ----------------------------------------------
# Operations
# ----------------------------------------------

def Partial_product(S: OperatorSequence, n: int, m: int) -> np.ndarray:
    """Returns S_[n,m]."""
    return S.Partial_product(n, m)

def Weight(S: OperatorSequence, x: np.ndarray, n: int) -> float:
    """Returns w_n(x):\n
    - n > 0 : |(S_[1,n-1])^-1 x| / |(S_[1,n])^-1 x|
    - n <= 0 : |S_[n,0] x| / |S_[n+1,0] x|
    """
    return S.Frame(x).Weight(n)

def Frame_vector(S: OperatorSequence, x: np.ndarray, n: int) -> np.ndarray:
    """Returns e_n(x):\n
    - n >= 0 : (S_[1,n])^-1 x normalized
    - n < 0 : S_[n+1,0] x normalized
    """
    return S.Frame(x).Vector(n)

def Check_intertwining(S: OperatorSequence, x: np.ndarray, window: tuple[int, int]) -> float:
    """Returns max over n in window of |S_{n+1} e_{n+1}(x) - w_{n+1}(x) e_n(x)|."""

    tic = Tic()

    a, b = _lutils._Test_window(window)
    frame = S.Frame(x)

    vectors = frame.Vectors(a, b+1)
    weights = frame.Weights(a+1, b+1)
    mats = S.Get_matrices(a+1, b+1)

    lhs = np.einsum("nij,nj->ni", mats, vectors[1:])
    rhs = weights[:,np.newaxis] * vectors[:-1]

    residual = float(np.max(np.linalg.norm(lhs - rhs, S.norm.ord, axis=1)))

    tic.Tac("Frame", "Check_intertwining")

    return residual

def Uniform_bound_check(S: OperatorSequence, window: tuple[int, int]) -> tuple[bool, float]:
    """Returns (max over window of max{|S_n|, |S_n^-1|} < C, max encountered)."""

    a, b = _lutils._Test_window(window)

    witnessed = 0.0
    for n in range(a, b+1):
        mat = S._Raw(n)
        bound = max(Operator_norm(mat, S.norm), Operator_norm(Invert(mat), S.norm))
        witnessed = max(witnessed, bound)

    return bool(witnessed < S.C), float(witnessed)

def Telescoping_residual(S: OperatorSequence, x: np.ndarray, n: int) -> float:
    """Relative gap between w_1...w_n and |x| / |(S_[1,n])^-1 x| (n >= 1),
    or between w_{n+1}...w_0 and |S_[n+1,0] x| / |x| (n <= 0)."""

    x = As_vec(x, S.dim)
    ord = S.norm.ord
    frame = S.Frame(x)

    if n >= 1:
        product = np.prod(frame.Weights(1, n))
        direct = np.linalg.norm(x, ord) / np.linalg.norm(np.linalg.solve(S.Partial_product(1, n), x), ord)
    else:
        product = np.prod(frame.Weights(n+1, 0))
        direct = np.linalg.norm(S.Partial_product(n+1, 0) @ x, ord) / np.linalg.norm(x, ord)

    return float(np.abs(product - direct) / np.abs(direct))
