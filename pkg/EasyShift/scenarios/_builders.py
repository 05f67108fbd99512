# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Builders of the built-in scenarios."""

import bisect
from typing import Callable, Union

import numpy as np

# utilities
from ..utilities import Tic
# linalg
from ..linalg import (MAXNORM, As_mat, Invert, Operator_norm,
                      ConfigError, VerificationError, _utils as _lutils)
# sequences
from ..sequences import OperatorSequence, Constant_sequence, Periodic_sequence
# spaces
from ..spaces import SeqPoint, WeightSeq, Shift_apply, Skew_apply, Seq_norm
# classify
from ..classify import Criterion
from ._cones import CONE_HALF_ANGLE, Cone2D, Cone_invariant, Cone_expansion, Rotation_matrix
from ._scenario import Expected, Scenario, WINDOW

GOLDEN_CONJUGATE = (np.sqrt(5) - 1) / 2
"""0.618..., fractional part of the golden ratio"""
L_CAT = np.array([[2.0, 1.0], [1.0, 1.0]])
JORDAN = np.array([[1.0, 1.0], [0.0, 1.0]])
LIMIT_TOL = 1e-12
LIMIT_STEPS_MAX = 200_000
RETURN_SEARCH_CAP = 10_000

_ANGLES = (Criterion.gamma_angle, Criterion.subspace_angle)

# ----------------------------------------------
# Helpers
# ----------------------------------------------

def _Canonical(d: int) -> np.ndarray:
    return np.eye(d)

def _Bound(mats: list[np.ndarray], norm=None, margin=1.05) -> float:
    kwargs = {} if norm is None else {"norm": norm}
    return margin * max(max(Operator_norm(m, **kwargs), Operator_norm(Invert(m), **kwargs)) for m in mats)

def Limit_direction(S: OperatorSequence, start: np.ndarray, forward=True,
                    isCheckpoint: Callable[[int], bool]=None, tol=LIMIT_TOL) -> np.ndarray:
    """Direction of S_1 ... S_k start (forward) or S_0^-1 ... S_-k+1^-1 start (backward) as k grows.

    Directions are compared at the checkpoints k only (every k by default) and the
    iteration stops when two successive ones differ by less than tol.

    Raises
    ------
    VerificationError
        when the directions do not settle within LIMIT_STEPS_MAX matrices
    """

    start = np.asarray(start, dtype=float)
    start = start / np.linalg.norm(start)
    M = np.eye(S.dim)
    previous = None

    for k in range(1, LIMIT_STEPS_MAX+1):
        M = M @ (S.Get(k) if forward else S.Get_inverse(1-k))
        M /= np.linalg.norm(M)
        if isCheckpoint is not None and not isCheckpoint(k):
            continue
        v = M @ start
        v /= np.linalg.norm(v)
        if np.dot(v, start) < 0:
            v = -v
        if previous is not None and np.linalg.norm(v - previous) < tol:
            return v
        previous = v

    raise VerificationError(f"the iterated directions of {S.name} do not settle within {LIMIT_STEPS_MAX} matrices")

# ----------------------------------------------
# Rotations and diagonal sequences
# ----------------------------------------------

def Build_rotation(theta: Union[float, Callable[[int], float]]=None) -> Scenario:
    """S_n = 1/2 R(2 pi theta_n), every weight equals 1/2.

    Parameters
    ----------
    theta : float | Callable[[int], float], optional
        rotation numbers theta_n in (0, 1), by default the golden conjugate
    """

    theta = GOLDEN_CONJUGATE if theta is None else theta

    if callable(theta):
        def generator(n: int) -> np.ndarray:
            t = float(theta(n))
            if not 0 < t < 1:
                raise ConfigError(f"theta_{n} = {t} must be in (0, 1)")
            return 0.5 * Rotation_matrix(2*np.pi*t)
        S = OperatorSequence(generator, 2.1, 2, name="rotation")
        params = {"theta": "generator"}
    else:
        t = float(theta)
        if not 0 < t < 1:
            raise ConfigError(f"theta = {t} must be in (0, 1)")
        S = Constant_sequence(0.5 * Rotation_matrix(2*np.pi*t), C=2.1, name="rotation")
        params = {"theta": t}

    expected = Expected((Criterion.orthogonal,), True, "contracting", "halved rotations")

    return Scenario("rotation", S, [_Canonical(2)], expected, params)

def Build_diagonal(lambdas: Union[list, np.ndarray, Callable[[int], np.ndarray]]=None,
                   window: tuple[int, int]=WINDOW, name="diagonal", shadowing: bool=None) -> Scenario:
    """S_n = diag(lambda_n(1), ..., lambda_n(d)) and w_n(e_t) = |lambda_n(t)|.

    Parameters
    ----------
    lambdas : list | np.ndarray | Callable[[int], np.ndarray], optional
        constant diagonal (d,), periodic table (P, d) or generator n -> (d,), by default (2, 1/2)
    window : tuple[int, int], optional
        window on which the entries are checked, by default WINDOW
    name : str, optional
        scenario name, by default "diagonal"
    shadowing : bool, optional
        expected shadowing verdict, by default read from the constant diagonal
    """

    lambdas = [2.0, 0.5] if lambdas is None else lambdas
    a, b = _lutils._Test_window(window)

    if callable(lambdas):
        func = lambdas
        period = None
        params = {"lambdas": "generator"}
    else:
        table = np.asarray(lambdas, dtype=float)
        if table.ndim == 1:
            table = table[np.newaxis]
        P = table.shape[0]
        func = lambda n: table[n % P]
        period = P
        params = {"lambdas": table.tolist()}

    values = np.array([np.atleast_1d(np.asarray(func(n), dtype=float)) for n in range(a, b+1)])
    d = values.shape[1]
    if np.any(values == 0) or not np.all(np.isfinite(values)):
        n = a + int(np.argwhere((values == 0) | ~np.isfinite(values))[0, 0])
        raise ConfigError(f"{name}: zero or unbounded diagonal entry at n = {n}")

    C = 1.05 * max(np.abs(values).max(), (1/np.abs(values)).max())
    S = OperatorSequence(lambda n: np.diag(np.atleast_1d(np.asarray(func(n), dtype=float))), C, d,
                         name=name, period=period)

    if shadowing is None:
        # constant diagonal: every factor is hyperbolic iff no entry has modulus 1
        shadowing = bool(period == 1 and np.all(np.abs(np.abs(values[0]) - 1) > _lutils.INCONCLUSIVE_BAND))

    expected = Expected((Criterion.orthogonal,), shadowing, "weights |lambda_n(t)|", "diagonal sequences")

    return Scenario(name, S, [_Canonical(d)], expected, params, window=(a, b))

def Build_diagonal_split() -> Scenario:
    """d = 1, lambda_n = 1/2 for n <= 0 and 2 for n >= 1: contracting past and expanding future."""
    scenario = Build_diagonal(lambda n: [0.5] if n <= 0 else [2.0], name="diagonal_split", shadowing=True)
    scenario.expected.hyperbolicity = "split (C)"
    return scenario

def Build_eigen_orthogonal() -> Scenario:
    """S_n = [[2,1],[1,1]] with its orthogonal eigenvectors as basis."""

    phi = (1 + np.sqrt(5)) / 2
    vPlus = np.array([phi, 1.0]) / np.sqrt(phi**2 + 1)
    vMinus = np.array([-1.0, phi]) / np.sqrt(phi**2 + 1)

    S = Constant_sequence(L_CAT, name="eigen_orthogonal")
    for v in (vPlus, vMinus):
        S.Anchor_seed(v, invariant=True)

    params = {"eigenvalues": [(3 + np.sqrt(5))/2, (3 - np.sqrt(5))/2]}
    expected = Expected((Criterion.orthogonal,), True, "expanding / contracting", "orthogonal eigenbasis")

    return Scenario("eigen_orthogonal", S, [np.array([vPlus, vMinus])], expected, params)

def Build_jointly_diagonalizable() -> Scenario:
    """S_n = [[2,3],[1,2]], eigenvalues 2 +- sqrt(3) with non orthogonal eigenvectors (+-sqrt(3), 1)."""

    S = Constant_sequence(np.array([[2.0, 3.0], [1.0, 2.0]]), name="jointly_diagonalizable")
    params = {"eigenvalues": [2 + np.sqrt(3), 2 - np.sqrt(3)]}
    expected = Expected((Criterion.jointly_diagonalizable,), True, "expanding / contracting", "non orthogonal eigenbasis")

    return Scenario("jointly_diagonalizable", S, [_Canonical(2)], expected, params)

# ----------------------------------------------
# Cone families
# ----------------------------------------------

def _U_failures(mat: np.ndarray, cPlus: Cone2D, cMinus: Cone2D, eta: float) -> list[str]:
    """names of the checks defining the neighborhood U that mat fails"""
    inv = Invert(mat)
    failed = []
    if not Cone_invariant(mat, cPlus):
        failed.append("S(C+) inside C+")
    if not Cone_invariant(inv, cMinus):
        failed.append("S^-1(C-) inside C-")
    if Cone_expansion(mat, cPlus)[0] <= eta:
        failed.append(f"|S v| > {eta:g} on C+")
    if Cone_expansion(inv, cMinus)[0] <= eta:
        failed.append(f"|S^-1 v| > {eta:g} on C-")
    return failed

def Build_anosov(radius=0.05, eta=2.0, halfAngle=CONE_HALF_ANGLE, seed=_lutils.PROBE_SEED,
                 schedule: Callable[[int], np.ndarray]=None) -> Scenario:
    """S_0 = identity and S_n in a neighborhood U of L = [[2,1],[1,1]] for n != 0.

    U is checked matrix by matrix: S(C+) and S^-1(C-) strictly inside the cones about the
    eigenvectors of L, with expansion larger than eta on C+ (by S) and on C- (by S^-1).
    The seeds v*+ and v*- are the limit directions of S_1 ... S_k(C+) and S_0^-1 ... S_-k^-1(C-).

    Parameters
    ----------
    radius : float, optional
        spectral norm radius of the perturbations of L, by default 0.05
    eta : float, optional
        expansion rate checked on U, by default 2.0
    halfAngle : float, optional
        half-angle of C+ and C-, by default CONE_HALF_ANGLE
    seed : int, optional
        seed of the perturbations, by default PROBE_SEED
    schedule : Callable[[int], np.ndarray], optional
        S_n for n != 0 used instead of the seeded perturbations, by default None

    Raises
    ------
    ConfigError
        when L or a scheduled matrix leaves U
    """

    tic = Tic()

    phi = (1 + np.sqrt(5)) / 2
    cPlus = Cone2D(np.array([phi, 1.0]), halfAngle)
    cMinus = Cone2D(np.array([-1.0, phi]), halfAngle)

    if eta <= 1:
        raise ConfigError("eta must be > 1")
    failed = _U_failures(L_CAT, cPlus, cMinus, eta)
    if len(failed) > 0:
        raise ConfigError(f"L is outside U: {', '.join(failed)}")

    sMin = np.linalg.svd(L_CAT, compute_uv=False).min()
    if schedule is None and not 0 <= radius < sMin:
        raise ConfigError(f"the radius must be in [0, {sMin:.4f})")

    def matrix(n: int) -> np.ndarray:
        if n == 0:
            return np.eye(2)
        if schedule is not None:
            mat = As_mat(schedule(n), 2)
        elif radius == 0:
            return L_CAT
        else:
            rng = np.random.default_rng([seed, 2*abs(n) + int(n < 0)])
            P = rng.uniform(-1, 1, size=(2, 2))
            P *= radius * rng.uniform() / np.linalg.norm(P, 2)
            mat = L_CAT + P
        failed = _U_failures(mat, cPlus, cMinus, eta)
        if len(failed) > 0:
            raise ConfigError(f"S_{n} is outside U: {', '.join(failed)}")
        return mat

    if schedule is None:
        C = 1.05 * max(np.linalg.norm(L_CAT, 2) + radius, 1/(sMin - radius))
    else:
        C = _Bound([matrix(n) for n in range(-_lutils.N_MAX, _lutils.N_MAX+1)])
    S = OperatorSequence(matrix, C, 2, name="anosov")

    vPlus = Limit_direction(S, cPlus.axis, forward=True)
    vMinus = Limit_direction(S, cMinus.axis, forward=False)
    S.Anchor_seed(vPlus, future=cPlus.axis)
    S.Anchor_seed(vMinus, past=cMinus.axis)

    params = {"radius": radius, "eta": eta, "half_angle": halfAngle, "seed": seed,
              "v_plus": vPlus, "v_minus": vMinus,
              # the frames stay in the cones, whose axes are orthogonal
              "certified_cos": np.sin(2*halfAngle),
              "schedule": "custom" if schedule is not None else ("L" if radius == 0 else "perturbed")}
    criteria = (Criterion.orthogonal,) if (radius == 0 and schedule is None) else _ANGLES
    expected = Expected(criteria, True, "generalized hyperbolic", "cone family about a hyperbolic toral matrix")

    tic.Tac("Scenario", "Build_anosov")

    return Scenario("anosov", S, [np.array([vMinus, vPlus])], expected, params,
                    cones={"C+": cPlus, "C-": cMinus})

class _BlockPattern:
    """Kinds of S_k, k >= 1, in L^n_1 R^m_1 L^n_2 R^m_2 ..."""

    def __init__(self, nOf: Callable[[int], int], mOf: Callable[[int], int]):
        self.__nOf = nOf
        self.__mOf = mOf
        self.__ends: list[int] = []
        self.__kinds: list[str] = []
        self.__pairEnds: set[int] = set()
        self.__nPairs = 0

    def _Extend(self, k: int) -> None:
        while len(self.__ends) == 0 or self.__ends[-1] < k:
            i = self.__nPairs + 1
            n, m = int(self.__nOf(i)), int(self.__mOf(i))
            if n < 0 or m < 0 or n + m == 0:
                raise ConfigError(f"block lengths n_{i} = {n}, m_{i} = {m} must be >= 0 and not both 0")
            last = self.__ends[-1] if len(self.__ends) > 0 else 0
            for kind, length in (("L", n), ("R", m)):
                if length > 0:
                    last += length
                    self.__ends.append(last)
                    self.__kinds.append(kind)
            self.__pairEnds.add(last)
            self.__nPairs = i

    def Kind(self, k: int) -> str:
        assert k >= 1
        self._Extend(k)
        return self.__kinds[bisect.bisect_left(self.__ends, k)]

    def Is_pair_end(self, k: int) -> bool:
        """k closes a block L^n_i R^m_i"""
        self._Extend(k)
        return k in self.__pairEnds

def _Is_return_time(q: int, zeta: float, L: np.ndarray, cPlus: Cone2D, cMinus: Cone2D) -> bool:
    """R^q L and L R^q map C+ strictly inside C+, their inverses map C- strictly inside C-."""
    Rq = Rotation_matrix(2*np.pi * ((q*zeta) % 1.0))
    Linv, Rinv = Invert(L), Rq.T
    return (Cone_invariant(Rq @ L, cPlus) and Cone_invariant(L @ Rq, cPlus)
            and Cone_invariant(Linv @ Rinv, cMinus) and Cone_invariant(Rinv @ Linv, cMinus))

def Find_return_times(zeta: float, count: int, cap=RETURN_SEARCH_CAP, start=1,
                      halfAngle=CONE_HALF_ANGLE, L: np.ndarray=None) -> list[int]:
    """First count return times q in [start, cap] of the rotation by zeta for which
    R^q keeps both cone invariance conditions with L = diag(2, 1/2).

    Raises
    ------
    ConfigError
        when fewer than count are found below cap
    """

    L = np.diag([2.0, 0.5]) if L is None else As_mat(L, 2)
    cPlus = Cone2D(np.array([1.0, 0.0]), halfAngle)
    cMinus = Cone2D(np.array([0.0, 1.0]), halfAngle)

    found = []
    for q in range(int(start), int(cap)+1):
        if _Is_return_time(q, zeta, L, cPlus, cMinus):
            found.append(q)
            if len(found) == count:
                return found

    raise ConfigError(f"only {len(found)} valid return times below the search cap {cap}, {count} needed")

def Build_elliptic_hyperbolic(zeta=GOLDEN_CONJUGATE, bounded=True,
                              nSchedule: Callable[[int], int]=None, mSchedule: Callable[[int], int]=None,
                              halfAngle=CONE_HALF_ANGLE, cap=RETURN_SEARCH_CAP) -> Scenario:
    """S_0 = identity, S_n = S_-n for n >= 1 following L^n_1 R^m_1 L^n_2 R^m_2 ...

    L = diag(2, 1/2) and R is the rotation of angle 2 pi zeta. The rotation runs m_i are return
    times of R certified by both cone invariance conditions.

    Parameters
    ----------
    zeta : float, optional
        rotation number (a 64-bit proxy of an irrational), by default GOLDEN_CONJUGATE
    bounded : bool, optional
        m_i = q_1 (bounded gaps) or m_i = q_i, the i-th return time (unbounded gaps), by default True
    nSchedule : Callable[[int], int], optional
        i -> n_i, by default 1
    mSchedule : Callable[[int], int], optional
        i -> m_i replacing the bounded/unbounded choice, by default None
    halfAngle : float, optional
        half-angle of the cones about (1, 0) and (0, 1), by default CONE_HALF_ANGLE
    cap : int, optional
        search cap of the return times, by default RETURN_SEARCH_CAP

    Raises
    ------
    ConfigError
        when no valid return time is found below cap or a scheduled m_i is not one
    """

    tic = Tic()

    L = np.diag([2.0, 0.5])
    R = Rotation_matrix(2*np.pi*zeta)
    cPlus = Cone2D(np.array([1.0, 0.0]), halfAngle)
    cMinus = Cone2D(np.array([0.0, 1.0]), halfAngle)

    returnTimes = Find_return_times(zeta, 1, cap, halfAngle=halfAngle, L=L)

    def nth_return_time(i: int) -> int:
        while len(returnTimes) < i:
            returnTimes.extend(Find_return_times(zeta, 1, cap, returnTimes[-1]+1, halfAngle, L))
        return returnTimes[i-1]

    nOf = (lambda i: 1) if nSchedule is None else nSchedule
    if mSchedule is not None:
        checked: dict[int, int] = {}
        def mOf(i: int) -> int:
            if i not in checked:
                m = int(mSchedule(i))
                if nOf(i) > 0 and m > 0 and not _Is_return_time(m, zeta, L, cPlus, cMinus):
                    raise ConfigError(f"m_{i} = {m} is not a certified return time")
                checked[i] = m
            return checked[i]
        schedule = "custom"
    elif bounded:
        mOf = lambda i: returnTimes[0]
        schedule = "bounded"
    else:
        mOf = nth_return_time
        schedule = "unbounded"

    pattern = _BlockPattern(nOf, mOf)
    identity = np.eye(2)

    def matrix(n: int) -> np.ndarray:
        if n == 0:
            return identity
        return L if pattern.Kind(abs(n)) == "L" else R

    S = OperatorSequence(matrix, 2.1, 2, name=f"elliptic_{schedule}")

    rotationOnly = all(nOf(i) == 0 for i in range(1, 65))
    if rotationOnly:
        bases = [_Canonical(2)]
        params = {}
    else:
        vPlus = Limit_direction(S, cPlus.axis, True, pattern.Is_pair_end)
        vMinus = Limit_direction(S, cMinus.axis, False, lambda k: pattern.Is_pair_end(k-1))
        S.Anchor_seed(vPlus, future=cPlus.axis)
        S.Anchor_seed(vMinus, past=cMinus.axis)
        bases = [np.array([vMinus, vPlus])]
        params = {"v_plus": vPlus, "v_minus": vMinus}

    eta = min(Cone_expansion(L, cPlus)[0], Cone_expansion(Invert(L), cMinus)[0])
    params.update({"zeta": zeta, "zeta_caveat": "64-bit rational proxy of an irrational rotation number",
                   "schedule": schedule, "return_times": list(returnTimes), "eta": eta,
                   "half_angle": halfAngle, "search_cap": cap})
    conditions = None
    if schedule == "bounded":
        params["M"] = 1 + returnTimes[0]
        # contraction of v_minus and expansion of v_plus, read seed by seed
        params["printed_condition"] = "C"
        conditions = ("A", "B")

    shadowing = schedule == "bounded"
    if rotationOnly:
        shadowing = False
    criteria = (Criterion.orthogonal,) if rotationOnly else _ANGLES
    hyperbolicity = "generalized hyperbolic" if shadowing else "not hyperbolic"
    location = "elliptic and hyperbolic blocks" + {"bounded": ", bounded gaps", "unbounded": ", unbounded gaps"}.get(schedule, "")
    name = "elliptic_bounded" if schedule == "bounded" else ("elliptic_unbounded" if schedule == "unbounded" else "elliptic_custom")

    tic.Tac("Scenario", f"Build_elliptic_hyperbolic ({schedule})")

    expected = Expected(criteria, shadowing, hyperbolicity, location, conditions)
    return Scenario(name, S, bases, expected, params, cones={"C+": cPlus, "C-": cMinus})

# ----------------------------------------------
# Jordan block
# ----------------------------------------------

def Build_jordan_skew() -> Scenario:
    """S_n = [[1,1],[0,1]] with the max-norm: no basis has bounded projections."""

    S = Constant_sequence(JORDAN, C=2.1, norm=MAXNORM, name="jordan_skew")
    expected = Expected((Criterion.none,), False, "not hyperbolic", "Jordan block under the max-norm")
    return Scenario("jordan_skew", S, [_Canonical(2)], expected, {"norm": "max"})

def Jordan_weight(seed: int, n: int) -> float:
    """Printed weights of the canonical seeds (seed 0 for (1,0), 1 for (0,1))."""
    if seed == 0 or n in (0, 1):
        return 1.0
    if n >= 2:
        return (n - 1) / n
    return (abs(n) + 1) / abs(n)

def Jordan_iterate(pt: SeqPoint, k: int) -> SeqPoint:
    """sigma_S^k (x_n, y_n) = (x_{n+k} + k y_{n+k}, y_{n+k})."""
    assert pt.dim == 2
    entries = pt.entries.copy()
    entries[:, 0] += k * entries[:, 1]
    return SeqPoint(pt.a - k, entries, pt.p)

def Jordan_iterate_residual(S: OperatorSequence, pt: SeqPoint, kMax=200) -> float:
    """max over k <= kMax of |sigma_S^k(pt) - closed form|."""
    residual = 0.0
    iterate = pt
    for k in range(1, kMax+1):
        iterate = Shift_apply(S, iterate)
        residual = max(residual, Seq_norm(iterate - Jordan_iterate(pt, k), S.norm))
    return float(residual)

def Jordan_skew_residual(S: OperatorSequence, pts: list[SeqPoint]) -> float:
    """max over pts of |phi(sigma_S pt) - skew(phi pt)| with phi the coordinate split."""
    ones = WeightSeq.Constant(1.0, C=1.5)
    residual = 0.0
    for pt in pts:
        lhs = Shift_apply(S, pt)
        x, y = Skew_apply(ones, (pt.Component(0), pt.Component(1)))
        residual = max(residual, Seq_norm(lhs.Component(0) - x), Seq_norm(lhs.Component(1) - y))
    return float(residual)

# ----------------------------------------------
# Counterexamples
# ----------------------------------------------

def Build_no_cones() -> Scenario:
    """T = diag(2, 1/2), S_n = T for odd n and T^-1 otherwise: every S_n is hyperbolic, sigma_S does not shadow."""

    T = np.diag([2.0, 0.5])
    S = Periodic_sequence([Invert(T), T], name="no_cones")
    expected = Expected((Criterion.orthogonal,), False, "every S_n hyperbolic, sigma_S not", "alternating hyperbolic matrices")

    return Scenario("no_cones", S, [_Canonical(2)], expected, {"T": T})

def Delta_gram(delta: float) -> np.ndarray:
    """Gram matrix of three unit vectors with cosines -1/2, -1/2 + delta, -1/2 + delta."""
    c = -0.5 + delta
    return np.array([[1.0, -0.5, c], [-0.5, 1.0, c], [c, c, 1.0]])

def Gram_projection_norms(G: np.ndarray) -> np.ndarray:
    """Euclidean norms sqrt((G^-1)_jj) of the coordinate projections of a unit basis with Gram matrix G."""
    return np.sqrt(np.diag(np.linalg.inv(G)))

def Build_delta_basis(delta=0.01) -> Scenario:
    """d = 3, S_n the identity and a unit basis with pairwise cosines -1/2, -1/2 + delta, -1/2 + delta.

    Raises
    ------
    ConfigError
        when delta is outside (0, 0.05] or the cosines are not realizable
    """

    delta = float(delta)
    if not 0 < delta <= 0.05:
        raise ConfigError(f"delta = {delta} must be in (0, 0.05]")

    G = Delta_gram(delta)
    try:
        vectors = np.linalg.cholesky(G)
    except np.linalg.LinAlgError:
        raise ConfigError(f"no unit basis has the cosines of delta = {delta} (Gram matrix not positive definite)")

    x0 = vectors.sum(axis=0)
    predicted = Gram_projection_norms(G)

    S = Constant_sequence(np.eye(3), C=1.05, name="delta_basis")
    params = {"delta": delta, "x0_norm_sq": float(x0 @ x0),
              "predicted_projection_norms": predicted,
              "predicted_projection_bound": float(predicted.max()),
              "printed_bound": 1/(4*delta)}
    expected = Expected((Criterion.subspace_angle,), False, "not hyperbolic", "nearly coplanar unit basis")

    return Scenario("delta_basis", S, [vectors], expected, params)
