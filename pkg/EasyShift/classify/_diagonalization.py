# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Common eigenbasis of a sequence of matrices."""

from typing import Optional

import numpy as np

# utilities
from ..utilities import Display
# linalg
from ..linalg import Invert, Operator_norm, _utils as _lutils
# sequences
from ..sequences import OperatorSequence
# spaces
from ..spaces import SeqPoint, Shift_apply, Seq_norm

class JointDiagonalization:
    """Invertible L such that D_n = L^-1 S_n L is diagonal for every n of the window."""

    def __init__(self, S: OperatorSequence, L: np.ndarray, window: tuple[int, int]):

        L = np.asarray(L, dtype=float).copy()
        L.flags.writeable = False
        Linv = Invert(L)
        Linv.flags.writeable = False

        self.__S = S
        self.__L = L
        self.__Linv = Linv
        self.__window = _lutils._Test_window(window)

        def diagonal(n: int) -> np.ndarray:
            return np.diag(np.diag(Linv @ S.Get(n) @ L))

        # |D_n| <= |L^-1| |S_n| |L|
        C = S.C * Operator_norm(L, S.norm) * Operator_norm(Linv, S.norm)
        self.__D = OperatorSequence(diagonal, C, S.dim, S.norm, name=f"{S.name} (diagonal)",
                                    period=S.period, checkBound=False)

    @property
    def S(self) -> OperatorSequence:
        return self.__S

    @property
    def L(self) -> np.ndarray:
        """columns are the common eigenvectors"""
        return self.__L

    @property
    def Linv(self) -> np.ndarray:
        return self.__Linv

    @property
    def D(self) -> OperatorSequence:
        """conjugated diagonal sequence"""
        return self.__D

    @property
    def window(self) -> tuple[int, int]:
        return self.__window

    def Diagonal(self, n: int) -> np.ndarray:
        """Returns the diagonal entries of D_n."""
        return np.diag(self.__D.Get(n)).copy()

    def Diagonal_residual(self) -> float:
        """max over the window of |L^-1 S_n L - D_n| / max(1, |S_n|)."""
        a, b = self.__window
        residual = 0.0
        for n in range(a, b+1):
            Sn = self.__S.Get(n)
            gap = self.__Linv @ Sn @ self.__L - self.__D.Get(n)
            residual = max(residual, np.abs(gap).max() / max(1.0, np.abs(Sn).max()))
        return float(residual)

    def H(self, pt: SeqPoint) -> SeqPoint:
        """Fiberwise change of coordinates (H x)_n = L^-1 x_n."""
        return SeqPoint(pt.a, pt.entries @ self.__Linv.T, pt.p)

    def H_inverse(self, pt: SeqPoint) -> SeqPoint:
        return SeqPoint(pt.a, pt.entries @ self.__L.T, pt.p)

    def Conjugacy_residual(self, pts: list[SeqPoint]) -> float:
        """max over pts of |H(sigma_S x) - sigma_D(H x)| / max(1, |x|)."""
        residual = 0.0
        for pt in pts:
            lhs = self.H(Shift_apply(self.__S, pt))
            rhs = Shift_apply(self.__D, self.H(pt))
            residual = max(residual, Seq_norm(lhs - rhs) / max(1.0, Seq_norm(pt)))
        return float(residual)

    def To_dict(self) -> dict:
        a, b = self.__window
        return {"L": self.__L.tolist(),
                "diagonal": {str(n): self.Diagonal(n).tolist() for n in sorted({a, 0, b} & set(range(a, b+1)))},
                "diagonal_residual": self.Diagonal_residual()}

def _Is_diagonal(mat: np.ndarray, tol: float) -> bool:
    offdiag = mat - np.diag(np.diag(mat))
    return bool(np.abs(offdiag).max() <= tol * max(1.0, np.abs(mat).max()))

def _Real_eigenbasis(mat: np.ndarray, tol: float) -> Optional[np.ndarray]:
    """Returns the unit real eigenvectors (columns, by decreasing eigenvalue) or None when the spectrum is not real and simple."""

    values, vectors = np.linalg.eig(mat)
    scale = max(1.0, np.abs(values).max())
    if np.abs(values.imag).max() > tol * scale:
        return None

    values = values.real
    vectors = vectors.real
    d = values.size
    if d > 1:
        gaps = np.abs(values[:,np.newaxis] - values[np.newaxis,:]) + np.eye(d) * scale
        if gaps.min() <= 1e3 * tol * scale:
            return None

    order = np.argsort(-values)
    vectors = vectors[:, order]
    vectors /= np.linalg.norm(vectors, axis=0)

    # the last significant component of every eigenvector is positive
    for i in range(d):
        v = vectors[:, i]
        significant = np.nonzero(np.abs(v) > 1e-12)[0]
        if v[significant[-1]] < 0:
            vectors[:, i] = -v

    return vectors

def _Anchored(S: OperatorSequence, L: np.ndarray, window: tuple[int, int]) -> JointDiagonalization:
    # eigenvector frames stay on their lines
    for column in L.T:
        S.Anchor_seed(column, invariant=True)
    return JointDiagonalization(S, L, window)

def Joint_diagonalization(S: OperatorSequence, window: tuple[int, int], tol=1e-10,
                          verbosity=False) -> Optional[JointDiagonalization]:
    """Looks for a single invertible L with L^-1 S_n L diagonal for all n in window.

    L is taken from the eigenvectors of S at the first index with a real and simple
    spectrum and is then tested on the rest of the window.

    Returns
    -------
    JointDiagonalization | None
        None when no common eigenbasis exists within tol.
    """

    a, b = _lutils._Test_window(window)
    mats = S.Get_matrices(a, b)

    if all(_Is_diagonal(mat, tol) for mat in mats):
        return _Anchored(S, np.eye(S.dim), (a, b))

    L = None
    for mat in mats:
        L = _Real_eigenbasis(mat, tol)
        if L is not None:
            break
    if L is None or abs(np.linalg.det(L)) <= _lutils.DET_TOL:
        if verbosity:
            Display.MyPrint(f"{S.name}: no real simple spectrum on [{a}, {b}]", "yellow")
        return None

    Linv = Invert(L)
    for n, mat in zip(range(a, b+1), mats):
        if not _Is_diagonal(Linv @ mat @ L, tol):
            if verbosity:
                Display.MyPrint(f"{S.name}: L^-1 S_n L is not diagonal at n = {n}", "yellow")
            return None

    return _Anchored(S, L, (a, b))
