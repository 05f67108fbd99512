# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

from enum import Enum
from typing import Union

import numpy as np

# ----------------------------------------------
# Defaults
# ----------------------------------------------

DIM_MAX = 4
"""largest fiber dimension handled with closed-form inverses"""
DET_TOL = 1e-12
"""|det| below this value means singular"""
N_MAX = 64
"""default ladder length"""
K_MAX = 512
"""default range of the sup/inf over k"""
INCONCLUSIVE_BAND = 1e-3
"""a ladder limit closer than this to 1 is inconclusive"""
PROBE_SEED = 0xC0FFEE
N_PROBES = 100
K_SAFETY = 1.05
"""safety factor applied to realized shadowing constants"""
DIVERGENCE_LIMIT = 1e12
GROWTH_TOL = 1.25
"""a certified bound may grow at most by this factor from the half window to the full window"""
MAX_PROJECTION_BOUND = 1e6
N_SPHERE = 4096
"""number of sampled directions for non-Euclidean operator norms"""

# ----------------------------------------------
# Errors
# ----------------------------------------------

class EasyShiftError(Exception):
    """Base class of the errors raised by EasyShift."""
    exitCode = 1

class DimensionError(EasyShiftError):
    """Fiber dimensions do not match."""
    exitCode = 2

class ZeroVectorError(EasyShiftError):
    """A nonzero vector was required."""
    exitCode = 2

class ConfigError(EasyShiftError):
    """Unknown scenario or malformed configuration."""
    exitCode = 2

class RefusalError(EasyShiftError):
    """No certificate allows the requested construction."""
    exitCode = 3

class VerificationError(EasyShiftError):
    """A residual or a bound exceeds its tolerance."""
    exitCode = 4

class SingularMatrixError(VerificationError):
    """|det| is below the singular tolerance."""

class DegenerateBasisError(VerificationError):
    """The basis (or the frame at some index) is not linearly independent."""

    def __init__(self, text: str, index: int=None):
        if index is not None:
            text = f"{text} (n = {index})"
        super().__init__(text)
        self.index = index

class UnboundedSequenceError(VerificationError):
    """max{|S_n|, |S_n^-1|} reached the declared bound C."""

class DivergenceError(VerificationError):
    """A series partial sum exceeded the divergence limit."""

# ----------------------------------------------
# Norms
# ----------------------------------------------

class NormType(str, Enum):
    """Fiber norm types."""

    euclidean = "euclidean"
    p = "p"
    max = "max"

    def __str__(self) -> str:
        return self.name

class NormSpec:
    """Fiber norm: euclidean, p-norm (1 <= p < inf) or max-norm."""

    def __init__(self, kind: Union[NormType, str]=NormType.euclidean, p: float=2.0):
        """Creates a fiber norm.

        Parameters
        ----------
        kind : NormType | str, optional
            norm type, by default NormType.euclidean
        p : float, optional
            exponent used with NormType.p, by default 2.0
        """

        kind = NormType(kind)

        if kind == NormType.euclidean:
            p = 2.0
        elif kind == NormType.max:
            p = np.inf
        else:
            p = float(p)
            assert p >= 1, "p must be >= 1"
            if p == 2:
                kind = NormType.euclidean
            elif np.isinf(p):
                kind = NormType.max

        self.__kind = kind
        self.__p = p

    @property
    def kind(self) -> NormType:
        return self.__kind

    @property
    def p(self) -> float:
        return self.__p

    @property
    def ord(self) -> float:
        """ord argument of np.linalg.norm"""
        return self.__p

    @property
    def isEuclidean(self) -> bool:
        return self.__kind == NormType.euclidean

    @property
    def dual(self) -> "NormSpec":
        """dual norm (1/p + 1/q = 1)"""
        if self.__p == 1:
            return NormSpec(NormType.max)
        elif np.isinf(self.__p):
            return NormSpec(NormType.p, 1.0)
        else:
            return NormSpec(NormType.p, self.__p / (self.__p - 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, NormSpec) and self.__p == other.p

    def __hash__(self) -> int:
        return hash(self.__p)

    def __repr__(self) -> str:
        if self.__kind == NormType.p:
            return f"NormSpec(p={self.__p:g})"
        return f"NormSpec({self.__kind})"

    def To_dict(self) -> dict:
        p = "inf" if np.isinf(self.__p) else self.__p
        return {"kind": str(self.__kind), "p": p}

    @staticmethod
    def From_dict(dct: dict) -> "NormSpec":
        p = dct.get("p", 2.0)
        p = np.inf if p in ("inf", "Infinity") else float(p)
        return NormSpec(dct.get("kind", NormType.euclidean), p)

EUCLIDEAN = NormSpec(NormType.euclidean)
MAXNORM = NormSpec(NormType.max)

def Parse_p(value: Union[str, float]) -> float:
    """Reads a sequence exponent (accepts 'inf')."""
    if isinstance(value, str) and value.lower() in ("inf", "infinity"):
        return np.inf
    p = float(value)
    if p < 1:
        raise ConfigError(f"p must be >= 1 (got {value})")
    return p

# ----------------------------------------------
# Tests
# ----------------------------------------------

def _Test_Sup0(value: Union[float, np.ndarray]) -> None:
    errorText = "Must be > 0!"
    if isinstance(value, (float, int)):
        assert value > 0.0, errorText
    if isinstance(value, np.ndarray):
        assert value.min() > 0.0, errorText

def _Test_In(value: Union[float, np.ndarray], bInf=0.0, bSup=np.pi/2) -> None:
    errorText = f"Must be between ]{bInf};{bSup}["
    if isinstance(value, (float, int)):
        assert value > bInf and value < bSup, errorText
    if isinstance(value, np.ndarray):
        assert value.min() > bInf and value.max() < bSup, errorText

def _Test_window(window: tuple[int, int]) -> tuple[int, int]:
    """Returns the (a, b) integer window with a <= b."""
    a, b = window
    assert int(a) == a and int(b) == b, "window bounds must be integers"
    assert a <= b, "window must satisfy a <= b"
    return int(a), int(b)

def Half_window(window: tuple[int, int]) -> tuple[int, int]:
    """Returns the window with bounds divided by 2 (toward 0)."""
    a, b = _Test_window(window)
    return int(np.trunc(a/2)), int(np.trunc(b/2))
