# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Shadowing orbits from defect sequences."""

import numpy as np

# utilities
from ..utilities import Tic
# linalg
from ..linalg import (DimensionError, DivergenceError, VerificationError,
                      _utils as _lutils)
# sequences
from ..sequences import OperatorSequence
# spaces
from ..spaces import SeqPoint, Shift_apply, Seq_norm, Random_point, Zeros
from ._certificate import ShadowingCertificate, Require_shadowing

# ----------------------------------------------
# Pseudo-orbits
# ----------------------------------------------

def Defects_from_pseudo_orbit(S: OperatorSequence, pseudoOrbit: list[SeqPoint]) -> list[SeqPoint]:
    """z^(t) = p^(t+1) - sigma_S(p^(t)) for t in [0, T-1]."""
    assert len(pseudoOrbit) >= 2, "a pseudo-orbit needs at least two points"
    return [pseudoOrbit[t+1] - Shift_apply(S, pseudoOrbit[t]) for t in range(len(pseudoOrbit)-1)]

def Perturbed_orbit(S: OperatorSequence, x0: SeqPoint, T: int, noise: float, seed=_lutils.PROBE_SEED) -> list[SeqPoint]:
    """True orbit sigma_S^t(x0), t in [0, T], with uniform noise of size noise added on the support of each point."""

    rng = np.random.default_rng(seed)
    pseudoOrbit = []
    x = x0
    for t in range(T+1):
        pseudoOrbit.append(x + Random_point(rng, x.window, x.dim, x.p, noise))
        x = Shift_apply(S, x)

    return pseudoOrbit

def Defect_suite(dim: int, T: int, window: tuple[int, int], nInstances=200,
                 seed=_lutils.PROBE_SEED, p: float=2.0) -> list[list[SeqPoint]]:
    """Defect sequences (z^(0), ..., z^(T-1)) supported on window.

    The instances cycle through impulses, uniform noise in [-1, 1] and sign patterns
    ((-1)^(n+t), constant, (-1)^t) on the window.
    """

    a, b = _lutils._Test_window(window)
    rng = np.random.default_rng(seed)
    N = b - a + 1
    suite = []

    for i in range(nInstances):
        kind = i % 3
        if kind == 0:
            # impulse
            t0 = int(rng.integers(0, T))
            n0 = int(rng.integers(a, b+1))
            vector = rng.uniform(-1, 1, size=dim)
            defects = [Zeros(a, b, dim, p) for _ in range(T)]
            values = np.zeros((N, dim))
            values[n0 - a] = vector
            defects[t0] = SeqPoint(a, values, p)
        elif kind == 1:
            defects = [Random_point(rng, (a, b), dim, p) for _ in range(T)]
        else:
            pattern = (i // 3) % 3
            n = np.arange(a, b+1)[:,np.newaxis] * np.ones((1, dim))
            defects = []
            for t in range(T):
                if pattern == 0:
                    values = (-1.0)**(n + t)
                elif pattern == 1:
                    values = np.ones((N, dim))
                else:
                    values = (-1.0)**t * np.ones((N, dim))
                defects.append(SeqPoint(a, values, p))
        suite.append(defects)

    return suite

# ----------------------------------------------
# Solver
# ----------------------------------------------

def _Split_times(condition: str, diagonals: np.ndarray, T: int) -> np.ndarray:
    """Time where each diagonal is anchored to 0."""
    if condition == "A":
        return np.zeros_like(diagonals)
    elif condition == "B":
        return np.full_like(diagonals, T)
    elif condition == "C":
        # the diagonal c meets the index 0 at time c
        return np.clip(diagonals, 0, T)
    else:
        raise ValueError(f"unknown condition {condition}")

def Diagonal_range(defects: list[SeqPoint]) -> tuple[int, int]:
    """Diagonals c = m + t + 1 reached by the defects."""
    cMin = min(z.a + t + 1 for t, z in enumerate(defects))
    cMax = max(z.b + t + 1 for t, z in enumerate(defects))
    return cMin, cMax

def Solve_factor(weights, condition: str, zetas: list[SeqPoint], cRange: tuple[int, int]) -> np.ndarray:
    """Solves u^(t+1) = B_w u^(t) + zeta^(t) along the diagonals c = m + t in cRange.

    Along a diagonal U[t] = u^(t)_{c-t} satisfies U[t+1] = w_{c-t} U[t] + zeta^(t)_{c-t-1}.
    The diagonal is anchored to 0 at its split time, the recursion runs forward after it
    (contracting weights) and backward before it (expanding weights).

    Returns
    -------
    np.ndarray
        (T+1, nDiagonals) values U[t, c]
    """

    T = len(zetas)
    cMin, cMax = cRange
    diagonals = np.arange(cMin, cMax+1)
    nC = diagonals.size

    times = np.arange(T+1)
    # a[t, c] = w_{c-t}
    indexes = diagonals[np.newaxis,:] - times[:,np.newaxis]
    w = weights.Values(int(indexes.min()), int(indexes.max()))
    a = w[indexes - indexes.min()]
    # zt[t, c] = zeta^(t)_{c-t-1}
    zt = np.zeros((T, nC))
    for t, zeta in enumerate(zetas):
        zt[t] = zeta.Values(cMin - t - 1, cMax - t - 1)[:,0]

    tau = _Split_times(condition, diagonals, T)
    U = np.zeros((T+1, nC))

    for t in range(T):
        forward = t >= tau
        U[t+1, forward] = a[t, forward] * U[t, forward] + zt[t, forward]
    for t in range(T-1, -1, -1):
        backward = t < tau
        U[t, backward] = (U[t+1, backward] - zt[t, backward]) / a[t, backward]

    if np.abs(U).max(initial=0.0) > _lutils.DIVERGENCE_LIMIT:
        raise DivergenceError(f"shadowing orbit exceeds {_lutils.DIVERGENCE_LIMIT:.0e}, the certificate is wrong")

    return U

def Orbit_residual(S: OperatorSequence, orbit: list[SeqPoint], defects: list[SeqPoint]) -> float:
    """max over t of |x^(t+1) - sigma_S(x^(t)) - z^(t)|."""
    norm = S.norm
    return float(max(Seq_norm(orbit[t+1] - Shift_apply(S, orbit[t]) - defects[t], norm)
                     for t in range(len(defects))))

def Solve_shadowing(certificate: ShadowingCertificate, defects: list[SeqPoint], tol=1e-10) -> tuple[list[SeqPoint], float]:
    """Returns the orbit x^(0..T) with x^(t+1) - sigma_S(x^(t)) = z^(t) and the realized sup |x| / sup |z|.

    The defects are pushed to the scalar factors with I, solved diagonal by diagonal
    and mapped back with I^-1.

    Raises
    ------
    RefusalError
        when the certificate is false
    VerificationError
        when the orbit residual exceeds tol
    """

    Require_shadowing(certificate)
    assert len(defects) >= 1, "at least one defect is required"

    bundle = certificate.bundle
    S = bundle.S
    if any(z.dim != S.dim for z in defects):
        raise DimensionError(f"defects must have fiber dimension {S.dim}")

    tic = Tic()

    T = len(defects)
    p = defects[0].p
    cMin, cMax = Diagonal_range(defects)
    coords = [bundle.Forward(z) for z in defects]

    # u[b][t, c]
    solutions = []
    for b, (factor, seedVerdict) in enumerate(zip(bundle.factors, certificate.perSeed)):
        zetas = [coord[b] for coord in coords]
        solutions.append(Solve_factor(factor.weights, seedVerdict.fired, zetas, (cMin, cMax)))

    orbit = []
    for t in range(T+1):
        # u^(t)_m = U[t, m + t]
        a = cMin - t
        factors = [SeqPoint(a, U[t], p) for U in solutions]
        orbit.append(bundle.Inverse(factors))

    residual = Orbit_residual(S, orbit, defects)
    scale = max(1.0, max(Seq_norm(z, S.norm) for z in defects))
    if residual > tol * scale:
        raise VerificationError(f"orbit residual {residual:.3e} > {tol:.1e}")

    supZ = max(Seq_norm(z, S.norm) for z in defects)
    supX = max(Seq_norm(x, S.norm) for x in orbit)
    realized = supX / supZ if supZ > 0 else 0.0

    tic.Tac("Solver", "Solve_shadowing")

    return orbit, float(realized)

def Shadow_pseudo_orbit(certificate: ShadowingCertificate, pseudoOrbit: list[SeqPoint], tol=1e-10) -> tuple[list[SeqPoint], float]:
    """Returns the true orbit y^(t) = p^(t) - x^(t) shadowing the pseudo-orbit and sup |p - y| / sup |z|."""
    S = certificate.S
    defects = Defects_from_pseudo_orbit(S, pseudoOrbit)
    correction, realized = Solve_shadowing(certificate, defects, tol)
    trueOrbit = [pt - x for pt, x in zip(pseudoOrbit, correction)]
    return trueOrbit, realized

def Realized_K(certificate: ShadowingCertificate, suite: list[list[SeqPoint]], tol=1e-10) -> float:
    """K_SAFETY times the largest realized ratio over the suite (stored on the certificate)."""

    tic = Tic()

    ratio = 0.0
    for defects in suite:
        _, realized = Solve_shadowing(certificate, defects, tol)
        ratio = max(ratio, realized)

    certificate.realizedK = float(_lutils.K_SAFETY * ratio)

    tic.Tac("Solver", f"Realized_K ({len(suite)} instances)")

    return certificate.realizedK
