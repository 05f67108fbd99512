# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Direct window solve of the defect equation used to cross-check the series solver."""

import numpy as np
import scipy.sparse as sparse
import scipy.sparse.linalg as sla

# utilities
from ..utilities import Tic
# linalg
from ..linalg import VerificationError
# spaces
from ..spaces import SeqPoint
from ._certificate import ShadowingCertificate, Require_shadowing
from ._solver import Diagonal_range

HORIZON_MAX = 500
"""largest extension of the time window on each side"""

def Decay_length(certificate: ShadowingCertificate) -> float:
    """1/|log rho| for the slowest per-seed rate rho read from the ladders at n_max."""

    rates = []
    for seed in certificate.perSeed:
        ladder = seed.ladder
        if seed.fired == "A":
            rates.append(ladder.Limit("A"))
        elif seed.fired == "B":
            rates.append(1 / ladder.Limit("B"))
        elif seed.fired == "C":
            rates.append(max(ladder.Limit("C_past"), 1 / ladder.Limit("C_future")))

    rho = max(rates)
    return float(1 / abs(np.log(rho)))

def _Solve_diagonal(certificate: ShadowingCertificate, c: int, zt: np.ndarray, H: int) -> np.ndarray:
    """Solves V[t+1] - S_{c-t} V[t] = z~[t] for t in [-H, T+H-1] with one anchor row per seed.

    The anchor of the seed b sets the coefficient of V[tau] along e_{c-tau}(b) to 0, tau being
    -H for (A), T+H for (B) and the clipped time c for (C).
    """

    bundle = certificate.bundle
    S = bundle.S
    d = S.dim
    T = zt.shape[0]
    t0, t1 = -H, T + H
    nT = t1 - t0 + 1

    rows, cols, values = [], [], []
    rhs = np.zeros(nT * d)

    def add(row: int, col: int, value: float):
        rows.append(row); cols.append(col); values.append(value)

    # dynamics
    for i, t in enumerate(range(t0, t1)):
        Sm = S.Get(c - t)
        for r in range(d):
            row = i*d + r
            add(row, (i+1)*d + r, 1.0)
            for k in range(d):
                add(row, i*d + k, -Sm[r, k])
            if 0 <= t < T:
                rhs[row] = zt[t, r]

    # anchors
    E = bundle.basis
    for b, seed in enumerate(certificate.perSeed):
        if seed.fired == "A":
            tau = t0
        elif seed.fired == "B":
            tau = t1
        else:
            tau = int(np.clip(c, t0, t1))
        m = c - tau
        frames = E.Frames(m, m)[0]
        dual = np.linalg.inv(frames)[b]
        row = (nT - 1)*d + b
        for k in range(d):
            add(row, (tau - t0)*d + k, dual[k])

    A = sparse.csr_matrix((values, (rows, cols)), shape=(nT*d, nT*d))
    x = sla.splu(A.tocsc()).solve(rhs)

    return x.reshape(nT, d)

def Window_oracle(certificate: ShadowingCertificate, defects: list[SeqPoint], horizon: int=None) -> list[SeqPoint]:
    """Orbit of the defect equation solved directly in the fibers on an extended time window.

    Parameters
    ----------
    certificate : ShadowingCertificate
        true certificate
    defects : list[SeqPoint]
        z^(0), ..., z^(T-1)
    horizon : int, optional
        extension H of the time window on each side, by default 3 decay lengths (at most HORIZON_MAX)

    Returns
    -------
    list[SeqPoint]
        x^(0), ..., x^(T)
    """

    Require_shadowing(certificate)

    tic = Tic()

    if horizon is None:
        horizon = int(np.ceil(min(HORIZON_MAX, 3 * Decay_length(certificate))))
    H = max(int(horizon), 1)

    d = certificate.S.dim
    T = len(defects)
    p = defects[0].p
    cMin, cMax = Diagonal_range(defects)

    # values[t, c, :] = x^(t)_{c-t}
    values = np.zeros((T+1, cMax - cMin + 1, d))
    for j, c in enumerate(range(cMin, cMax+1)):
        zt = np.array([z.Get(c - t - 1) for t, z in enumerate(defects)]).reshape(T, d)
        V = _Solve_diagonal(certificate, c, zt, H)
        values[:, j, :] = V[H:H+T+1]

    if not np.all(np.isfinite(values)):
        raise VerificationError("the window solve produced non finite values")

    orbit = [SeqPoint(cMin - t, values[t], p) for t in range(T+1)]

    tic.Tac("Oracle", "Window_oracle")

    return orbit

def Oracle_agreement(orbit: list[SeqPoint], oracle: list[SeqPoint]) -> float:
    """max |x^(t)_n - y^(t)_n| over the interior times t in [T/4, 3T/4]."""
    T = len(orbit) - 1
    gap = 0.0
    for t in range(T//4, (3*T)//4 + 1):
        diff = orbit[t] - oracle[t]
        gap = max(gap, float(np.abs(diff.entries).max()))
    return gap
