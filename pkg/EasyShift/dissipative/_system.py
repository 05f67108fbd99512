# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Dissipative composition operators on the integers with singleton (or two-point) cells."""

from enum import Enum
from typing import Union

import numpy as np

# linalg
from ..linalg import ConfigError, DimensionError, Parse_p, _utils as _lutils
# sequences
from ..sequences import Constant_sequence
# spaces
from ..spaces import SeqPoint, Shift_apply, Random_point

# ----------------------------------------------
# Measure profiles
# ----------------------------------------------

class ProfileType(str, Enum):
    constant = "constant"
    geometric = "geometric"
    periodic = "periodic"
    table = "table"

    def __str__(self) -> str:
        return self.name

class MeasureProfile:
    """Masses n -> mu_n of the cells f^n(W).

    - constant : mu_n = value
    - geometric : mu_n = ratio^|n|
    - periodic : mu_n = values[n mod P]
    - table : mu_n = values[str(n)] when listed, default otherwise
    """

    def __init__(self, kind: Union[ProfileType, str], **params):

        try:
            kind = ProfileType(kind)
        except ValueError:
            raise ConfigError(f"unknown measure profile {kind}, use {[k.value for k in ProfileType]}")

        if kind == ProfileType.constant:
            params.setdefault("value", 1.0)
        elif kind == ProfileType.geometric:
            params.setdefault("ratio", 0.5)
        elif kind == ProfileType.periodic:
            if "values" not in params or len(params["values"]) == 0:
                raise ConfigError("a periodic profile needs a non empty list of values")
        elif kind == ProfileType.table:
            if "values" not in params or "default" not in params:
                raise ConfigError("a table profile needs values and default")

        self.__kind = kind
        self.__params = params

    @property
    def kind(self) -> ProfileType:
        return self.__kind

    @property
    def params(self) -> dict:
        return dict(self.__params)

    def __call__(self, n: int) -> float:
        n = int(n)
        params = self.__params
        if self.__kind == ProfileType.constant:
            value = params["value"]
        elif self.__kind == ProfileType.geometric:
            value = params["ratio"] ** abs(n)
        elif self.__kind == ProfileType.periodic:
            values = params["values"]
            value = values[n % len(values)]
        else:
            value = params["values"].get(str(n), params["default"])

        value = float(value)
        if not (np.isfinite(value) and value > 0):
            raise ValueError(f"mu_{n} = {value} must be positive and finite")
        return value

    def To_dict(self) -> dict:
        return {"kind": self.__kind.value, **self.__params}

    @staticmethod
    def From_dict(dct: dict) -> "MeasureProfile":
        dct = dict(dct)
        if "kind" not in dct:
            raise ConfigError("a measure profile needs a kind")
        kind = dct.pop("kind")
        return MeasureProfile(kind, **dct)

# ----------------------------------------------
# System
# ----------------------------------------------

class DiscreteDissipativeSystem:
    """M = Z x W, f(n, j) = (n+1, j), mu(f^n(W) cell j) = mu_n * cell[j]."""

    def __init__(self, profile: MeasureProfile, p: float=2.0, cell: list[float]=None):
        """Creates a dissipative system.

        Parameters
        ----------
        profile : MeasureProfile
            masses of the translated cells
        p : float, optional
            exponent of L^p, by default 2.0
        cell : list[float], optional
            relative masses of the points of W (one or two points), by default [1.0]
        """

        cell = [1.0] if cell is None else [float(m) for m in cell]
        assert len(cell) in (1, 2), "W has one or two points"
        _lutils._Test_Sup0(np.asarray(cell))

        p = Parse_p(p)
        assert np.isfinite(p), "p must be finite"

        self.__profile = profile
        self.__p = p
        self.__cell = np.array(cell)

    @property
    def profile(self) -> MeasureProfile:
        return self.__profile

    @property
    def p(self) -> float:
        return self.__p

    @property
    def cellSize(self) -> int:
        """number of points of W"""
        return self.__cell.size

    def Mu(self, n: int) -> np.ndarray:
        """masses of the points of f^n(W)"""
        return self.__profile(n) * self.__cell

    def Mu_values(self, a: int, b: int) -> np.ndarray:
        """(b-a+1, |W|) masses"""
        return np.array([self.Mu(n) for n in range(a, b+1)])

    def RN_ratios(self, a: int, b: int) -> np.ndarray:
        """(b-a+1, |W|) derivatives d(mu f^n)/d(mu) on W, equal to mu_n / mu_0."""
        return self.Mu_values(a, b) / self.Mu(0)[np.newaxis]

    def Check_function(self, phi: SeqPoint) -> None:
        if phi.dim != self.cellSize:
            raise DimensionError(f"functions on M have {self.cellSize} values per cell, {phi.dim} given")

    def Lp_norm(self, phi: SeqPoint) -> float:
        """(sum_n sum_j |phi(n, j)|^p mu_n(j))^(1/p)"""
        self.Check_function(phi)
        masses = self.Mu_values(phi.a, phi.b)
        return float(np.sum(np.abs(phi.entries)**self.__p * masses) ** (1/self.__p))

    def Compose(self, phi: SeqPoint) -> SeqPoint:
        """T_f phi = phi o f, (phi o f)(n, j) = phi(n+1, j)."""
        self.Check_function(phi)
        return SeqPoint(phi.a - 1, phi.entries, self.__p)

    def Random_function(self, rng: np.random.Generator, window: tuple[int, int]) -> SeqPoint:
        return Random_point(rng, window, self.cellSize, self.__p)

    def To_dict(self) -> dict:
        return {"mu": self.__profile.To_dict(), "p": self.__p, "cell": self.__cell.tolist()}

    @staticmethod
    def From_dict(dct: dict) -> "DiscreteDissipativeSystem":
        if "mu" not in dct:
            raise ConfigError("a dissipative system needs a mu profile")
        return DiscreteDissipativeSystem(MeasureProfile.From_dict(dct["mu"]), dct.get("p", 2.0), dct.get("cell"))

# ----------------------------------------------
# B space
# ----------------------------------------------

class BNormPoint:
    """(psi_n) in B with |psi|_B = (sum_n int_W |psi_n|^p d(mu f^n)/d(mu) d(mu))^(1/p)."""

    def __init__(self, system: DiscreteDissipativeSystem, point: SeqPoint):
        system.Check_function(point)
        self.__system = system
        self.__point = point

    @property
    def system(self) -> DiscreteDissipativeSystem:
        return self.__system

    @property
    def point(self) -> SeqPoint:
        return self.__point

    @property
    def window(self) -> tuple[int, int]:
        return self.__point.window

    def Norm(self) -> float:
        system = self.__system
        pt = self.__point
        p = system.p
        ratios = system.RN_ratios(pt.a, pt.b)
        mu0 = system.Mu(0)
        return float(np.sum(np.abs(pt.entries)**p * ratios * mu0[np.newaxis]) ** (1/p))

    def __sub__(self, other: "BNormPoint") -> "BNormPoint":
        return BNormPoint(self.__system, self.__point - other.point)

    def __add__(self, other: "BNormPoint") -> "BNormPoint":
        return BNormPoint(self.__system, self.__point + other.point)

def Gamma_forward(system: DiscreteDissipativeSystem, phi: SeqPoint) -> BNormPoint:
    """psi_n = phi o f^n restricted to W, that is psi_n(j) = phi(n, j)."""
    system.Check_function(phi)
    return BNormPoint(system, SeqPoint(phi.a, phi.entries, system.p))

def Identity_shift(system: DiscreteDissipativeSystem, psi: BNormPoint) -> BNormPoint:
    """sigma_S on B with S_n the identity of L^p(mu|_W)."""
    S = Constant_sequence(np.eye(system.cellSize), C=1.5, name="identity")
    return BNormPoint(system, Shift_apply(S, psi.point))

def Verify_composition_conjugacy(system: DiscreteDissipativeSystem, probes: list[SeqPoint]) -> float:
    """max over probes of |Gamma(T_f phi) - sigma_S(Gamma phi)|_B."""
    residual = 0.0
    for phi in probes:
        lhs = Gamma_forward(system, system.Compose(phi))
        rhs = Identity_shift(system, Gamma_forward(system, phi))
        residual = max(residual, (lhs - rhs).Norm())
    return float(residual)

def Isometry_residual(system: DiscreteDissipativeSystem, probes: list[SeqPoint]) -> float:
    """max over probes of ||Gamma phi|_B - |phi|_Lp| / |phi|_Lp."""
    residual = 0.0
    for phi in probes:
        normL = system.Lp_norm(phi)
        if normL == 0: continue
        residual = max(residual, abs(Gamma_forward(system, phi).Norm() - normL) / normL)
    return float(residual)

def RN_uniform_check(system: DiscreteDissipativeSystem, window: tuple[int, int], C=1e6) -> tuple[bool, float, float]:
    """Returns (1/C < mu_n/mu_0 < C on window and the extremes are already reached on the half window, min ratio, max ratio)."""

    a, b = _lutils._Test_window(window)
    ratios = system.RN_ratios(a, b)
    lo, hi = float(ratios.min()), float(ratios.max())

    ha, hb = _lutils.Half_window((a, b))
    half = system.RN_ratios(ha, hb)
    stable = np.isclose(half.min(), lo, rtol=1e-12) and np.isclose(half.max(), hi, rtol=1e-12)

    uniform = bool(1/C < lo and hi < C and stable)

    return uniform, lo, hi

def Rescale_to_lp(system: DiscreteDissipativeSystem, psi: BNormPoint) -> SeqPoint:
    """psi_n -> psi_n (mu_n/mu_0)^(1/p), carrying the B-norm to the norm of l_p(L^p(mu|_W))."""
    pt = psi.point
    ratios = system.RN_ratios(pt.a, pt.b)
    return SeqPoint(pt.a, pt.entries * ratios**(1/system.p), system.p)

def Lp_W_norm(system: DiscreteDissipativeSystem, pt: SeqPoint) -> float:
    """(sum_n int_W |x_n|^p d(mu))^(1/p), the plain l_p norm when W is a unit mass point."""
    mu0 = system.Mu(0)
    return float(np.sum(np.abs(pt.entries)**system.p * mu0[np.newaxis]) ** (1/system.p))
