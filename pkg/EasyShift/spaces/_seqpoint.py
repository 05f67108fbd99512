# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Finitely supported points of l_p(X) and weight sequences."""

from typing import Callable, Union

import numpy as np

# linalg
from ..linalg import NormSpec, EUCLIDEAN, DimensionError, Parse_p, _utils as _lutils

# ----------------------------------------------
# SeqPoint
# ----------------------------------------------

class SeqPoint:
    """Bilateral sequence (x_n) of fiber vectors supported on the window [a, b] (zero outside)."""

    def __init__(self, a: int, entries: np.ndarray, p: float=2.0):
        """Creates a finitely supported point.

        Parameters
        ----------
        a : int
            first index of the window
        entries : np.ndarray
            (N, d) fiber vectors for n in [a, a+N-1] or (N) scalars
        p : float, optional
            sequence exponent, by default 2.0
        """

        entries = np.array(entries, dtype=float)
        if entries.ndim == 1:
            entries = entries[:,np.newaxis]
        assert entries.ndim == 2 and entries.shape[0] >= 1, "entries must be a non empty (N, d) array"
        if not np.all(np.isfinite(entries)):
            raise ValueError("entries must be finite")

        p = Parse_p(p)

        entries.flags.writeable = False
        self.__a = int(a)
        self.__entries = entries
        self.__p = p

    @property
    def a(self) -> int:
        return self.__a

    @property
    def b(self) -> int:
        return self.__a + self.__entries.shape[0] - 1

    @property
    def window(self) -> tuple[int, int]:
        return self.a, self.b

    @property
    def indexes(self) -> np.ndarray:
        return np.arange(self.a, self.b+1)

    @property
    def dim(self) -> int:
        """fiber dimension"""
        return self.__entries.shape[1]

    @property
    def p(self) -> float:
        return self.__p

    @property
    def entries(self) -> np.ndarray:
        """(N, d) read-only entries"""
        return self.__entries

    def __repr__(self) -> str:
        return f"SeqPoint(window={self.window}, d={self.dim}, p={self.p:g})"

    def Get(self, n: int) -> np.ndarray:
        """Returns x_n (zero outside the window)."""
        if self.a <= n <= self.b:
            return self.__entries[n - self.a].copy()
        return np.zeros(self.dim)

    def Values(self, a: int, b: int) -> np.ndarray:
        """Returns the (b-a+1, d) entries over [a, b] (zero padded)."""
        values = np.zeros((b - a + 1, self.dim))
        lo, hi = max(a, self.a), min(b, self.b)
        if lo <= hi:
            values[lo-a:hi-a+1] = self.__entries[lo-self.a:hi-self.a+1]
        return values

    def Extend(self, a: int, b: int) -> "SeqPoint":
        """Returns the same point written on the window [min(a, self.a), max(b, self.b)]."""
        lo, hi = min(a, self.a), max(b, self.b)
        return SeqPoint(lo, self.Values(lo, hi), self.p)

    def Restrict(self, a: int, b: int) -> "SeqPoint":
        """Returns the point truncated to [a, b]."""
        return SeqPoint(a, self.Values(a, b), self.p)

    def Component(self, i: int) -> "SeqPoint":
        """Returns the scalar point of the i-th coordinates."""
        return SeqPoint(self.a, self.__entries[:,i], self.p)

    # ----------------------------------------------
    # Arithmetic
    # ----------------------------------------------

    def _Check_compatible(self, other: "SeqPoint") -> None:
        if not isinstance(other, SeqPoint):
            raise TypeError("a SeqPoint is required")
        if other.p != self.p:
            raise ValueError(f"mixed exponents p = {self.p:g} and p = {other.p:g}")
        if other.dim != self.dim:
            raise DimensionError(f"fiber dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other: "SeqPoint") -> "SeqPoint":
        self._Check_compatible(other)
        a, b = min(self.a, other.a), max(self.b, other.b)
        return SeqPoint(a, self.Values(a, b) + other.Values(a, b), self.p)

    def __sub__(self, other: "SeqPoint") -> "SeqPoint":
        return self + (-1.0) * other

    def __neg__(self) -> "SeqPoint":
        return (-1.0) * self

    def __mul__(self, scalar: float) -> "SeqPoint":
        return SeqPoint(self.a, float(scalar) * self.__entries, self.p)

    __rmul__ = __mul__

    # ----------------------------------------------
    # Json
    # ----------------------------------------------

    def To_dict(self) -> dict:
        """{window: [a,b], p: number, entries: [[n, [components...]]...]}"""
        p = "inf" if np.isinf(self.p) else self.p
        entries = [[int(n), [float(v) for v in vec]] for n, vec in zip(self.indexes, self.__entries)]
        return {"window": [self.a, self.b], "p": p, "entries": entries}

    @staticmethod
    def From_dict(dct: dict, dim: int=None) -> "SeqPoint":
        """Reads a point written by To_dict (missing indexes are zero)."""

        a, b = _lutils._Test_window(dct["window"])
        p = Parse_p(dct.get("p", 2.0))
        listed = dct.get("entries", [])

        if dim is None:
            dim = len(listed[0][1]) if len(listed) > 0 else 1

        values = np.zeros((b - a + 1, dim))
        for n, vec in listed:
            n = int(n)
            if not a <= n <= b:
                raise ValueError(f"entry index {n} outside the window [{a}, {b}]")
            vec = np.atleast_1d(np.asarray(vec, dtype=float))
            if vec.size != dim:
                raise DimensionError(f"entry at n = {n} has dimension {vec.size}, {dim} expected")
            values[n - a] = vec

        return SeqPoint(a, values, p)

# ----------------------------------------------
# Constructors
# ----------------------------------------------

def Zeros(a: int, b: int, dim: int=1, p: float=2.0) -> SeqPoint:
    return SeqPoint(a, np.zeros((b - a + 1, dim)), p)

def Impulse(n: int, vector: Union[float, np.ndarray], p: float=2.0) -> SeqPoint:
    """Point equal to vector at index n and zero elsewhere."""
    vector = np.atleast_1d(np.asarray(vector, dtype=float))
    return SeqPoint(n, vector[np.newaxis], p)

def Random_point(rng: np.random.Generator, window: tuple[int, int], dim: int, p: float=2.0, scale=1.0) -> SeqPoint:
    """Point with uniform entries in [-scale, scale] over the window."""
    a, b = _lutils._Test_window(window)
    return SeqPoint(a, rng.uniform(-scale, scale, size=(b - a + 1, dim)), p)

def Seq_norm(pt: SeqPoint, norm: NormSpec=EUCLIDEAN) -> float:
    """Returns (sum_n |x_n|^p)^(1/p) (max_n |x_n| when p = inf)."""
    fiberNorms = np.linalg.norm(pt.entries, norm.ord, axis=1)
    return float(np.linalg.norm(fiberNorms, pt.p))

# ----------------------------------------------
# WeightSeq
# ----------------------------------------------

class WeightSeq:
    """Positive weights (w_n) within the band (1/C, C), inducing the backward shift B_w."""

    def __init__(self, generator: Callable[[int], float], C: float, name="", period: int=None):
        assert callable(generator), "generator must be a function n -> w_n"
        _lutils._Test_Sup0(C)
        assert C > 1, "C must be > 1"
        self.__generator = generator
        self.__C = float(C)
        self.__name = name
        self.__period = period
        self.__cache: dict[int, float] = {}

    def __repr__(self) -> str:
        return f"WeightSeq({self.__name}, C={self.__C:g})"

    @property
    def C(self) -> float:
        return self.__C

    @property
    def name(self) -> str:
        return self.__name

    @property
    def period(self) -> Union[int, None]:
        return self.__period

    def __call__(self, n: int) -> float:
        n = int(n)
        value = self.__cache.get(n)
        if value is None:
            value = float(self.__generator(n))
            if not (1/self.__C < value < self.__C):
                raise ValueError(f"w_{n} = {value:.6g} outside the band (1/C, C) with C = {self.__C:g}")
            self.__cache[n] = value
        return value

    def Values(self, a: int, b: int) -> np.ndarray:
        """Returns (w_n) for n in [a, b]."""
        return np.array([self(n) for n in range(a, b+1)])

    def Log_values(self, a: int, b: int) -> np.ndarray:
        return np.log(self.Values(a, b))

    @staticmethod
    def Constant(value: float, C: float=None, name="") -> "WeightSeq":
        value = float(value)
        C = 1.05 * max(value, 1/value) if C is None else C
        return WeightSeq(lambda n: value, C, name or f"constant {value:g}", period=1)

    @staticmethod
    def Periodic(values: list[float], C: float=None, name="", offset=0) -> "WeightSeq":
        values = [float(v) for v in values]
        C = 1.05 * max(max(values), 1/min(values)) if C is None else C
        P = len(values)
        return WeightSeq(lambda n: values[(n - offset) % P], C, name or "periodic", period=P)

    @staticmethod
    def From_frame(frame, C: float, name="") -> "WeightSeq":
        """Weights w_n(x) of a frame."""
        return WeightSeq(frame.Weight, C, name)
