# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Frame criteria deciding whether a seed basis has S-bounded projections."""

from typing import Union

import numpy as np
from scipy.linalg import null_space

# utilities
from ..utilities import Tic, Display
# linalg
from ..linalg import (As_vec, Gram_det, Projection_operator_norms, Half_window,
                      DegenerateBasisError, ZeroVectorError, _utils as _lutils)
# sequences
from ..sequences import OperatorSequence, Frame
from ._verdict import Criterion, CriterionResult, Certification, ClassificationVerdict
from ._diagonalization import Joint_diagonalization

# ----------------------------------------------
# Basis
# ----------------------------------------------

class BasisCandidate:
    """Seed basis E = {b_1, ..., b_d} and its frames E_n = {e_n(b) : b in E}."""

    def __init__(self, S: OperatorSequence, vectors: Union[list, np.ndarray], tol=_lutils.DET_TOL):

        vectors = [As_vec(v, S.dim) for v in vectors]
        if len(vectors) != S.dim:
            raise DegenerateBasisError(f"{len(vectors)} seeds given for a fiber of dimension {S.dim}")
        norms = [np.linalg.norm(v, S.norm.ord) for v in vectors]
        if min(norms) == 0:
            raise ZeroVectorError("seeds must be nonzero")
        vectors = np.array([v / nv for v, nv in zip(vectors, norms)])
        if Gram_det(vectors) <= tol:
            raise DegenerateBasisError("the seeds are not linearly independent")

        vectors.flags.writeable = False
        self.__S = S
        self.__vectors = vectors

    @property
    def S(self) -> OperatorSequence:
        return self.__S

    @property
    def vectors(self) -> np.ndarray:
        """(d, d) unit seeds (rows)"""
        return self.__vectors

    @property
    def dim(self) -> int:
        return self.__vectors.shape[0]

    def Frame(self, i: int) -> Frame:
        return self.__S.Frame(self.__vectors[i])

    def Frames(self, a: int, b: int) -> np.ndarray:
        """Returns the (b-a+1, d, d) stack whose column i at index n is e_n(b_i)."""
        return np.stack([self.Frame(i).Vectors(a, b) for i in range(self.dim)], axis=2)

def As_basis(S: OperatorSequence, E) -> BasisCandidate:
    if isinstance(E, BasisCandidate):
        assert E.S is S, "the basis belongs to another sequence"
        return E
    return BasisCandidate(S, E)

def _Stable(full: float, half: float) -> bool:
    """A bound is accepted when it is finite, moderate and does not grow with the window."""
    return bool(np.isfinite(full) and full <= _lutils.MAX_PROJECTION_BOUND and full <= _lutils.GROWTH_TOL * half)

# ----------------------------------------------
# Cosines and angles
# ----------------------------------------------

def _Cosines(frames: np.ndarray) -> np.ndarray:
    """Returns the (N, d, d) Euclidean cosine matrices of the frames."""
    grams = np.einsum("nki,nkj->nij", frames, frames)
    diag = np.sqrt(np.einsum("nii->ni", grams))
    return np.clip(grams / (diag[:,:,np.newaxis] * diag[:,np.newaxis,:]), -1.0, 1.0)

def _Max_offdiag(cosines: np.ndarray) -> float:
    d = cosines.shape[1]
    if d == 1:
        return 0.0
    mask = ~np.eye(d, dtype=bool)
    return float(np.max(np.abs(cosines[:, mask])))

def _Subspace_sines(frames: np.ndarray) -> np.ndarray:
    """Returns the (N, d) sines of the angles between e_n(b_i) and the span of the other frame vectors."""

    N, d, _ = frames.shape
    sines = np.ones((N, d))
    if d == 1:
        return sines

    for n in range(N):
        for i in range(d):
            others = np.delete(frames[n], i, axis=1)
            normal = null_space(others.T)
            if normal.shape[1] != 1:
                # the other vectors are dependent
                sines[n, i] = 0.0
                continue
            e = frames[n][:, i]
            sines[n, i] = np.abs(normal[:,0] @ e) / np.linalg.norm(e)

    return sines

# ----------------------------------------------
# Tests
# ----------------------------------------------

def Is_orthogonal_frame(S: OperatorSequence, E, window: tuple[int, int], tol=1e-10) -> tuple[bool, float]:
    """Returns (|cos(e_n(u), e_n(v))| <= tol for all n in window and u != v in E, max off-diagonal |cos|)."""

    E = As_basis(S, E)
    a, b = _lutils._Test_window(window)

    maxCos = _Max_offdiag(_Cosines(E.Frames(a, b)))

    return bool(maxCos <= tol), maxCos

def Gamma_angle_test(S: OperatorSequence, E, window: tuple[int, int]) -> tuple[bool, float, float]:
    """Returns (passed, gamma, bound).\n
    gamma is the max off-diagonal |cos| over the window. The test passes when gamma < 1/(d-1)
    and the bound 1/sqrt(1 - (d-1) gamma) on the projections does not grow with the window.
    """

    assert S.norm.isEuclidean, "the gamma-angle test needs the Euclidean fiber norm"
    result = _Gamma_result(S, As_basis(S, E), window)
    return result.passed, result.value, result.bound

def _Gamma_result(S: OperatorSequence, E: BasisCandidate, window: tuple[int, int]) -> CriterionResult:

    d = E.dim
    if d == 1:
        return CriterionResult("gamma-angle", True, 0.0, 1.0, 1.0)

    def bound_of(w) -> tuple[float, float]:
        gamma = _Max_offdiag(_Cosines(E.Frames(*w)))
        gap = 1 - (d-1)*gamma
        return gamma, (1/np.sqrt(gap) if gap > 0 else np.inf)

    gamma, bound = bound_of(window)
    _, halfBound = bound_of(Half_window(window))
    passed = gamma < 1/(d-1) and _Stable(bound, halfBound)

    return CriterionResult("gamma-angle", passed, gamma, bound, halfBound)

def Subspace_angle_test(S: OperatorSequence, E, window: tuple[int, int]) -> tuple[bool, float, float]:
    """Returns (passed, inf angle, bound).\n
    The angle is measured between e_n(v) and the span F_{n,v} of the other frame vectors.
    With b = 1 - |cos(angle)| the emitted bound is 1/sqrt(2b - b^2).
    """

    assert S.norm.isEuclidean, "the subspace-angle test needs the Euclidean fiber norm"
    result = _Subspace_result(S, As_basis(S, E), window)
    return result.passed, result.value, result.bound

def _Subspace_result(S: OperatorSequence, E: BasisCandidate, window: tuple[int, int]) -> CriterionResult:

    def bound_of(w) -> tuple[float, float]:
        sin = float(np.min(_Subspace_sines(E.Frames(*w))))
        theta = float(np.arcsin(np.clip(sin, 0.0, 1.0)))
        beta = 1 - np.abs(np.cos(theta))
        value = 2*beta - beta**2
        return theta, (1/np.sqrt(value) if value > 0 else np.inf)

    theta, bound = bound_of(window)
    _, halfBound = bound_of(Half_window(window))
    passed = theta > 0 and _Stable(bound, halfBound)

    return CriterionResult("subspace-angle", passed, theta, bound, halfBound)

def Projection_norms(S: OperatorSequence, E, window: tuple[int, int]) -> np.ndarray:
    """Returns the (N, d) projection norms |Pi_{e_n(b)}| for n in window."""

    E = As_basis(S, E)
    a, b = _lutils._Test_window(window)

    return Projection_operator_norms(E.Frames(a, b), S.norm, indexes=np.arange(a, b+1))

def Projection_bound(S: OperatorSequence, E, window: tuple[int, int]) -> float:
    """Returns sup over n in window and b in E of |Pi_{e_n(b)}|."""
    return float(np.max(Projection_norms(S, E, window)))

def _Explicit_result(S: OperatorSequence, E: BasisCandidate, window: tuple[int, int]) -> CriterionResult:
    try:
        bound = Projection_bound(S, E, window)
        halfBound = Projection_bound(S, E, Half_window(window))
    except DegenerateBasisError as error:
        return CriterionResult("explicit-projection-bound", False, np.inf, np.inf, np.inf, str(error))

    passed = _Stable(bound, halfBound)

    return CriterionResult("explicit-projection-bound", passed, bound, bound, halfBound)

def _Orthogonal_result(S: OperatorSequence, E: BasisCandidate, window: tuple[int, int], tol: float) -> CriterionResult:
    passed, maxCos = Is_orthogonal_frame(S, E, window, tol)
    bound = 1.0 if passed and S.norm.isEuclidean else np.inf
    if passed and not S.norm.isEuclidean:
        # orthogonality does not bound projections outside Hilbert fibers
        passed = False
    return CriterionResult("orthogonal", passed, maxCos, bound, bound)

def Run_tests(S: OperatorSequence, E, window: tuple[int, int], tol=1e-10) -> dict[str, CriterionResult]:
    """Runs every frame test on the basis and returns the results by name."""

    tic = Tic()

    E = As_basis(S, E)
    results: dict[str, CriterionResult] = {}

    results["orthogonal"] = _Orthogonal_result(S, E, window, tol)

    if S.norm.isEuclidean:
        results["gamma-angle"] = _Gamma_result(S, E, window)
        results["subspace-angle"] = _Subspace_result(S, E, window)
    else:
        note = "needs the Euclidean fiber norm"
        results["gamma-angle"] = CriterionResult("gamma-angle", False, note=note)
        results["subspace-angle"] = CriterionResult("subspace-angle", False, note=note)

    results["explicit-projection-bound"] = _Explicit_result(S, E, window)

    tic.Tac("Classify", "Run_tests")

    return results

def Frames_certification(S: OperatorSequence, E, window: tuple[int, int], tol=1e-10) -> Certification:
    """Exact when S is periodic and the frames repeat (up to sign) over one period at both window ends."""

    if not S.isPeriodic:
        return Certification.window

    E = As_basis(S, E)
    a, b = _lutils._Test_window(window)
    P = S.period
    if b - a < 2*P:
        return Certification.window

    def repeats(n: int, m: int) -> bool:
        u, v = E.Frames(n, n)[0], E.Frames(m, m)[0]
        gaps = np.minimum(np.abs(u - v).max(axis=0), np.abs(u + v).max(axis=0))
        return bool(np.all(gaps <= tol))

    if repeats(b, b - P) and repeats(a, a + P):
        return Certification.exact
    return Certification.window

# ----------------------------------------------
# Classification
# ----------------------------------------------

_RESULT_OF = {
    Criterion.orthogonal: "orthogonal",
    Criterion.gamma_angle: "gamma-angle",
    Criterion.subspace_angle: "subspace-angle",
    Criterion.explicit_bound: "explicit-projection-bound",
}

def Classify(S: OperatorSequence, bases: list, window: tuple[int, int], tol=1e-10, verbosity=False) -> ClassificationVerdict:
    """Decides which classification criterion applies to S.

    Every frame test is run on every candidate basis. The strongest passing criterion
    (orthogonal > gamma-angle > subspace-angle > explicit bound) is decisive, the smallest
    emitted bound breaking ties between bases. When no basis passes, a common eigenbasis
    is looked for on the window.

    Parameters
    ----------
    S : OperatorSequence
        generating sequence
    bases : list
        candidate seed bases (lists of d vectors or BasisCandidate)
    window : tuple[int, int]
        certification window
    tol : float, optional
        orthogonality and diagonalization tolerance, by default 1e-10
    verbosity : bool, optional
        prints the verdict, by default False

    Returns
    -------
    ClassificationVerdict
        criterion none when nothing certifies bounded projections
    """

    tic = Tic()

    window = _lutils._Test_window(window)
    candidates: list[BasisCandidate] = []
    notes: list[str] = []
    for E in bases:
        try:
            candidates.append(As_basis(S, E))
        except (DegenerateBasisError, ZeroVectorError) as error:
            notes.append(str(error))

    allResults = [Run_tests(S, E, window, tol) for E in candidates]

    best: tuple = None # (rank, bound, index)
    for index, results in enumerate(allResults):
        for rank, criterion in enumerate(Criterion.Ranked()):
            result = results[_RESULT_OF[criterion]]
            if result.passed:
                key = (rank, result.bound, index)
                if best is None or key < best:
                    best = key
                break

    if best is not None:
        rank, bound, index = best
        E = candidates[index]
        criterion = Criterion.Ranked()[rank]
        certificates = dict(allResults[index])
        verdict = ClassificationVerdict(criterion, window, E.vectors.copy(), certificates,
                                        Frames_certification(S, E, window, tol), float(bound))
    else:
        certificates = dict(allResults[0]) if len(allResults) > 0 else {}
        diagonalization = Joint_diagonalization(S, window, tol)
        if diagonalization is None:
            certificates["jointly-diagonalizable"] = CriterionResult("jointly-diagonalizable", False, note="no common real eigenbasis")
            verdict = ClassificationVerdict(Criterion.none, window, None, certificates)
        else:
            E = BasisCandidate(S, diagonalization.L.T)
            explicit = _Explicit_result(S, E, window)
            certificates["jointly-diagonalizable"] = CriterionResult(
                "jointly-diagonalizable", True, diagonalization.Diagonal_residual(), explicit.bound, explicit.halfBound)
            verdict = ClassificationVerdict(Criterion.jointly_diagonalizable, window, E.vectors.copy(), certificates,
                                            Frames_certification(S, E, window, tol), float(explicit.bound),
                                            diagonalization=diagonalization)

    if len(notes) > 0:
        verdict.certificates["rejected bases"] = notes

    tic.Tac("Classify", "Classify", verbosity)

    if verbosity:
        color = "green" if verdict.isCertified else "yellow"
        Display.MyPrint(f"{S.name}: {verdict.criterion.value} ({verdict.certification.value})", color)

    return verdict
