# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Planar cones, cone invariance and cone expansion of 2 x 2 matrices."""

import numpy as np
import scipy.optimize as optimize

# linalg
from ..linalg import As_mat, As_vec, ZeroVectorError, DimensionError, _utils as _lutils
# sequences
from ..sequences import OperatorSequence

CONE_HALF_ANGLE = 0.25
"""default half-angle (rad) of the cones about the eigenvectors"""
ANGLE_EPS = 1e-6
SAMPLING_STEP = 1e-4
"""angular step (rad) of the cone expansion sampling"""

# ----------------------------------------------
# Functions
# ----------------------------------------------

def Rotation_matrix(theta: float) -> np.ndarray:
    """Rotation of angle theta (rad) in the plane."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])

def _Line_angle(v: np.ndarray, axis: np.ndarray) -> float:
    """Angle in [0, pi/2] between the lines spanned by v and axis."""
    nv = np.linalg.norm(v)
    if nv == 0:
        raise ZeroVectorError("the zero vector has no direction")
    cos = abs(float(np.dot(v, axis))) / nv
    return float(np.arccos(np.clip(cos, 0.0, 1.0)))

# ----------------------------------------------
# Cone2D
# ----------------------------------------------

class Cone2D:
    """Closed cone {v : angle(v, +-axis) <= halfAngle} of the plane.

    Cones are symmetric under v -> -v, linear maps preserving the
    unsigned cone then preserve the signed one along with it.
    """

    def __init__(self, axis: np.ndarray, halfAngle: float=CONE_HALF_ANGLE):
        """Creates a cone.

        Parameters
        ----------
        axis : np.ndarray
            direction of the axis (normalized)
        halfAngle : float, optional
            half-angle in rad, by default CONE_HALF_ANGLE
        """

        axis = As_vec(axis, 2)
        norm = np.linalg.norm(axis)
        if norm == 0:
            raise ZeroVectorError("a cone needs a nonzero axis")
        _lutils._Test_In(float(halfAngle), ANGLE_EPS, np.pi/2 - ANGLE_EPS)

        self.__axis = axis / norm
        self.__halfAngle = float(halfAngle)

    def __repr__(self) -> str:
        return f"Cone2D(axis={np.round(self.__axis, 6).tolist()}, halfAngle={self.__halfAngle:g})"

    @property
    def axis(self) -> np.ndarray:
        """unit axis direction"""
        return self.__axis.copy()

    @property
    def halfAngle(self) -> float:
        return self.__halfAngle

    @property
    def boundaryRays(self) -> np.ndarray:
        """(2, 2) unit directions of the boundary rays"""
        return np.array([Rotation_matrix(s * self.__halfAngle) @ self.__axis for s in (-1, 1)])

    def Angle(self, v: np.ndarray) -> float:
        """angle between v and the axis line"""
        return _Line_angle(As_vec(v, 2), self.__axis)

    def Contains(self, v: np.ndarray, margin=0.0) -> bool:
        """angle(v, axis) <= halfAngle - margin"""
        return self.Angle(v) <= self.__halfAngle - margin

    def Direction(self, phi: float) -> np.ndarray:
        """unit vector at the angle phi from the axis"""
        return Rotation_matrix(phi) @ self.__axis

    def To_dict(self) -> dict:
        return {"axis": self.__axis.tolist(), "half_angle": self.__halfAngle}

def Cone_invariant(m: np.ndarray, c: Cone2D, margin=1e-9) -> bool:
    """True when m(c) lies strictly inside c.

    The image of a planar cone is the cone spanned by the images of its boundary rays
    that contains the image of the axis, so three directions decide.
    """

    m = As_mat(m)
    if m.shape != (2, 2):
        raise DimensionError("cones live in the plane")

    directions = np.vstack([c.boundaryRays, c.axis[np.newaxis]])
    images = directions @ m.T
    return all(c.Contains(image, margin) for image in images)

def Cone_expansion(m: np.ndarray, c: Cone2D) -> tuple[float, float]:
    """Minimum of |m v| over unit vectors v of c.

    Returns
    -------
    tuple[float, float]
        value, uncertainty (gap between the refined and the best sampled value)
    """

    m = As_mat(m)
    if m.shape != (2, 2):
        raise DimensionError("cones live in the plane")

    alpha = c.halfAngle
    nSample = int(np.ceil(2*alpha / SAMPLING_STEP)) + 1
    phis = np.linspace(-alpha, alpha, nSample)
    axis = c.axis
    # rotating the axis by phi
    dirs = np.column_stack([np.cos(phis)*axis[0] - np.sin(phis)*axis[1],
                            np.sin(phis)*axis[0] + np.cos(phis)*axis[1]])
    values = np.linalg.norm(dirs @ m.T, axis=1)
    best = int(np.argmin(values))

    step = phis[1] - phis[0] if nSample > 1 else SAMPLING_STEP
    lo = max(-alpha, phis[best] - step)
    hi = min(alpha, phis[best] + step)

    func = lambda phi: float(np.linalg.norm(m @ c.Direction(phi)))
    res = optimize.minimize_scalar(func, bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})

    value = min(float(res.fun), float(values[best]))

    return value, float(abs(values[best] - value))

def Frames_in_cones(S: OperatorSequence, v: np.ndarray, c: Cone2D, window: tuple[int, int]) -> tuple[bool, float]:
    """Returns (e_n(v) in c for every n in window, largest angle between e_n(v) and the axis)."""

    a, b = _lutils._Test_window(window)
    vectors = S.Frame(v).Vectors(a, b)
    angles = np.array([c.Angle(e) for e in vectors])
    worst = float(angles.max())
    return bool(worst <= c.halfAngle), worst
